// End-to-end tests driving the installed command-line binary. The binary
// path arrives as the first program argument (see tests/CMakeLists.txt).

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

std::string g_binary;
std::filesystem::path g_scratch;

struct CommandResult {
  std::string out;
  int exit_code = -1;
};

CommandResult run(const std::string &args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CommandResult result;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string scratch_file(const std::string &name) { return (g_scratch / name).string(); }

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<long> betti_column(const std::string &report) {
  // Machine lines are "degree kernel rank betti".
  std::vector<long> betti;
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long a, b, c, d;
    if (ls >> a >> b >> c >> d) {
      std::string rest;
      if (!(ls >> rest))
        betti.push_back(d);
    }
  }
  return betti;
}

} // namespace

TEST_CASE("tangent recipe file passes check with exit code zero") {
  std::string spec = scratch_file("t2.spec");
  CommandResult r = run("recipe tangent --m 2 -o " + spec);
  CHECK(r.exit_code == 0);
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("check reports are byte-identical across runs") {
  std::string spec = scratch_file("so3.spec");
  run("recipe product --m 0 --lie so3 -o " + spec);
  CommandResult a = run("check " + spec + " --seed 9");
  CommandResult b = run("check " + spec + " --seed 9");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == 0);
}

TEST_CASE("random algebra recipe is deterministic and verifies") {
  std::string one = scratch_file("r1.spec"), two = scratch_file("r2.spec");
  run("recipe random-algebra --dim 4 --seed 7 -o " + one);
  run("recipe random-algebra --dim 4 --seed 7 -o " + two);
  CHECK(read_file(one) == read_file(two));
  CommandResult check = run("check " + one);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("jacobiator is nonzero") != std::string::npos);
}

TEST_CASE("broken morphism file fails check with nonzero exit") {
  std::string spec = scratch_file("broken.spec");
  write_file(spec,
             "algebroid-spec v1\nbase_dim 1\nrank 2\nkernel_rank 1\n"
             "ANCHOR\n1 1 : 1\nEND\n"
             "STRUCTURE\n1 2 1 : 1\nEND\n"
             "KERNEL_FRAME\n2 1 : 1\nEND\n"
             "KERNEL_PROJECTION\n1 2 : 1\nEND\n");
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 1);
  CHECK(check.out.find("FAIL  axiom/anchor-morphism") != std::string::npos);
  CHECK(check.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers and exit code two") {
  std::string spec = scratch_file("bad.spec");
  write_file(spec, "algebroid-spec v1\nbase_dim 1\nrank 1\nkernel_rank 0\nANCHOR\ngarbage\n");
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 2);
}

TEST_CASE("non-jacobi table file passes check and reports a nonzero jacobiator") {
  // The cyclic table [e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3 over a point.
  std::string spec = scratch_file("triple.spec");
  write_file(spec,
             "algebroid-spec v1\nbase_dim 0\nrank 3\nkernel_rank 3\n"
             "ANCHOR\nEND\n"
             "STRUCTURE\n1 2 1 : 1\n2 3 2 : 1\n1 3 3 : -1\nEND\n"
             "KERNEL_FRAME\n1 1 : 1\n2 2 : 1\n3 3 : 1\nEND\n"
             "KERNEL_PROJECTION\n1 1 : 1\n2 2 : 1\n3 3 : 1\nEND\n");
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("jacobiator is nonzero") != std::string::npos);
  CHECK(check.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("cohomology of a random algebra is concentrated in degree zero") {
  std::string spec = scratch_file("alg3.spec");
  run("recipe random-algebra --dim 3 --seed 11 -o " + spec);
  CommandResult r = run("cohomology " + spec + " --max-degree 5");
  CHECK(r.exit_code == 0);
  CHECK(betti_column(r.out) == std::vector<long>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("cohomology of the product model matches the leafwise answer") {
  std::string spec = scratch_file("prod.spec");
  run("recipe product --m 1 --lie abelian:1 -o " + spec);
  CommandResult r = run("cohomology " + spec + " --max-degree 3");
  CHECK(r.exit_code == 0);
  CHECK(betti_column(r.out) == std::vector<long>{1, 1, 0, 0});
}

TEST_CASE("cohomology rejects non-constant structure functions") {
  std::string params = scratch_file("ta.params");
  write_file(params, "algebroid-params v1\nvars 2\ndim 3\n"
                     "LIE_TABLE\nEND\n"
                     "ANCHOR_MAP\n1 1 : 1\n2 2 : 1\nEND\n"
                     "TWIST_K\n1 2 3 : x1\nEND\n"
                     "KERNEL_FRAME\n3 1 : 1\nEND\n"
                     "KERNEL_PROJECTION\n1 3 : 1\nEND\n");
  std::string spec = scratch_file("ta.spec");
  CommandResult made = run("recipe twisted-action --params " + params + " -o " + spec);
  CHECK(made.exit_code == 0);
  CommandResult r = run("cohomology " + spec);
  CHECK(r.exit_code == 2);
}

TEST_CASE("twisted poisson recipe from a params file") {
  std::string params = scratch_file("tp.params");
  write_file(params, "algebroid-params v1\nvars 2\nPI\n1 2 : 1\nEND\n");
  std::string spec = scratch_file("tp.spec");
  CommandResult made = run("recipe twisted-poisson --params " + params + " -o " + spec);
  CHECK(made.exit_code == 0);
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("jacobiator is identically zero") != std::string::npos);
}

TEST_CASE("b-twist recipe composes with the product recipe") {
  std::string base = scratch_file("base.spec");
  run("recipe product --m 2 --lie abelian:1 -o " + base);
  std::string params = scratch_file("twist.params");
  write_file(params, "algebroid-params v1\nvars 2\nB\n1 2 3 : x1\n1 3 3 : x2\nEND\n");
  std::string spec = scratch_file("twisted.spec");
  CommandResult made = run("recipe b-twist --base " + base + " --params " + params + " -o " + spec);
  CHECK(made.exit_code == 0);
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("jacobiator is nonzero") != std::string::npos);
}

TEST_CASE("structured output is machine readable") {
  std::string spec = scratch_file("s.spec");
  run("recipe product --m 0 --lie so3 -o " + spec);
  CommandResult check = run("check " + spec + " --structured");
  CHECK(check.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(check.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["jacobiator_zero"] == true);
  CHECK(parsed["spec"]["rank"] == 3);
  CommandResult cohom = run("cohomology " + spec + " --max-degree 2 --structured");
  nlohmann::json ctab = nlohmann::json::parse(cohom.out);
  CHECK(ctab["rows"][0]["betti"] == 1);
}

TEST_CASE("product recipe accepts a custom table file") {
  std::string params = scratch_file("sl2.params");
  // sl(2): [e1,e2] = 2 e2, [e1,e3] = -2 e3, [e2,e3] = e1.
  write_file(params, "algebroid-params v1\ndim 3\n"
                     "LIE_TABLE\n1 2 2 : 2\n1 3 3 : -2\n2 3 1 : 1\nEND\n");
  std::string spec = scratch_file("sl2prod.spec");
  CommandResult made = run("recipe product --m 1 --params " + params + " -o " + spec);
  CHECK(made.exit_code == 0);
  CommandResult check = run("check " + spec);
  CHECK(check.exit_code == 0);
  CHECK(check.out.find("jacobiator is identically zero") != std::string::npos);
}

TEST_CASE("unknown recipe is rejected") {
  CommandResult r = run("recipe warp-drive -o " + scratch_file("x.spec"));
  CHECK(r.exit_code == 2);
}

int run_all(int argc, char **argv) {
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  return context.run();
}

int main(int argc, char **argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-binary> [doctest options]\n");
    return 1;
  }
  g_binary = argv[1];
  g_scratch = std::filesystem::temp_directory_path() /
              ("algebroid-cli-" + std::to_string(::getpid()));
  std::filesystem::create_directories(g_scratch);
  int rc = run_all(argc - 1, argv + 1);
  std::filesystem::remove_all(g_scratch);
  return rc;
}

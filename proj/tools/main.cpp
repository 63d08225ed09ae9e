// Command-line front end: validate spec files, compute Betti tables of the
// constant-coefficient complex, and generate spec files from the built-in
// recipes. Reports on stdout are a pure function of the input bytes and
// flags; phase timings go to stderr.

#include "algebroid/cochain.hpp"
#include "algebroid/cohomology.hpp"
#include "algebroid/gallery.hpp"
#include "algebroid/random_gen.hpp"
#include "algebroid/spec.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using algebroid::AlgebroidSpec;
using algebroid::Polynomial;
using nlohmann::json;

class PhaseTimer {
public:
  explicit PhaseTimer(std::string name)
      : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
    std::cerr << "# phase " << name_ << " " << elapsed.count() / 1000.0 << " ms\n";
  }

private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

void print_lines(const std::vector<CheckLine> &lines) {
  for (const auto &line : lines) {
    std::cout << (line.passed ? "PASS" : "FAIL") << "  " << line.name;
    if (!line.detail.empty())
      std::cout << "  (" << line.detail << ")";
    std::cout << "\n";
  }
}

json lines_to_json(const std::vector<CheckLine> &lines) {
  json arr = json::array();
  for (const auto &line : lines)
    arr.push_back({{"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
  return arr;
}

int run_check(const std::string &path, std::uint64_t seed, int rounds, int cutoff,
              bool structured) {
  AlgebroidSpec spec = algebroid::load_spec_file(path);
  std::vector<CheckLine> lines;
  bool jacobiator_zero = true;

  {
    PhaseTimer timer("axioms");
    algebroid::AxiomReport axioms = algebroid::check_axioms(spec);
    for (const auto &check : axioms.checks)
      lines.push_back({"axiom/" + check.name, check.passed, check.detail});
  }
  bool axioms_ok = true;
  for (const auto &line : lines)
    axioms_ok = axioms_ok && line.passed;

  if (axioms_ok) {
    {
      PhaseTimer timer("jacobiator");
      try {
        algebroid::JacobiatorTensor jac = algebroid::jacobiator_tensor(spec);
        jacobiator_zero = jac.is_zero();
        lines.push_back({"jacobiator-tensor", true,
                         jacobiator_zero ? "jacobiator is identically zero"
                                         : "jacobiator is nonzero"});
      } catch (const std::exception &e) {
        lines.push_back({"jacobiator-tensor", false, e.what()});
      }
    }
    try {
      algebroid::CochainComplex complex(spec);
      {
        PhaseTimer timer("dj-zero");
        algebroid::OperatorIdentityReport report = complex.check_dj_zero();
        lines.push_back({"dj-zero", report.passed, report.detail});
      }
      {
        PhaseTimer timer("coordinate-field");
        algebroid::OperatorIdentityReport report = complex.q_coordinate_check(cutoff);
        lines.push_back({"coordinate-field-cutoff-" + std::to_string(cutoff), report.passed,
                         report.detail});
      }
      {
        PhaseTimer timer("d-squared");
        algebroid::Rng rng(seed);
        bool ok = true;
        std::string detail;
        for (int i = 0; i < rounds && ok; ++i) {
          int degree = rng.range(0, 6);
          algebroid::Cochain gamma = algebroid::random_cochain(spec, degree, 3, 2, rng);
          algebroid::Cochain dd = complex.total_differential(complex.total_differential(gamma));
          if (!dd.is_zero()) {
            ok = false;
            detail = "d(d(gamma)) nonzero on a random cochain of degree " +
                     std::to_string(degree);
          }
        }
        if (ok)
          detail = std::to_string(rounds) + " random cochains, seed " + std::to_string(seed);
        lines.push_back({"d-squared", ok, detail});
      }
    } catch (const std::exception &e) {
      lines.push_back({"cochain-complex", false, e.what()});
    }
  }

  bool all = true;
  for (const auto &line : lines)
    all = all && line.passed;

  if (structured) {
    json out = {{"command", "check"},
                {"spec", {{"base_dim", spec.base_dim},
                          {"rank", spec.rank},
                          {"kernel_rank", spec.kernel_rank}}},
                {"seed", seed},
                {"rounds", rounds},
                {"cutoff", cutoff},
                {"checks", lines_to_json(lines)},
                {"jacobiator_zero", jacobiator_zero},
                {"passed", all}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "check " << "base_dim=" << spec.base_dim << " rank=" << spec.rank
              << " kernel_rank=" << spec.kernel_rank << "\n";
    print_lines(lines);
    std::cout << "result: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int run_cohomology(const std::string &path, int max_degree, bool structured) {
  AlgebroidSpec spec = algebroid::load_spec_file(path);
  algebroid::CochainComplex complex(spec);
  algebroid::BettiTable table;
  {
    PhaseTimer timer("betti-table");
    table = algebroid::betti_table(complex, max_degree);
  }
  if (structured) {
    json rows = json::array();
    for (const auto &row : table.rows)
      rows.push_back({{"degree", row.degree},
                      {"dim", row.dimension},
                      {"kernel", row.kernel_dim},
                      {"incoming_rank", row.incoming_rank},
                      {"betti", row.betti}});
    json out = {{"command", "cohomology"},
                {"max_degree", max_degree},
                {"rows", rows},
                {"composite_zero", true},
                {"passed", true}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cohomology max_degree=" << max_degree << "\n";
    std::cout << table.str();
    std::cout << "composite-zero: PASS\n";
    std::cout << table.machine_lines();
  }
  return 0;
}

// ---- recipe parameter files -------------------------------------------------

struct RecipeParams {
  int vars = 0;
  int dim = 0;
  std::optional<algebroid::LieTable> lie_table;
  std::optional<std::vector<std::vector<Polynomial>>> anchor_map; // dim x vars
  std::optional<std::vector<Polynomial>> twist_k;                 // dim^3
  std::optional<algebroid::BivectorField> pi;                     // vars x vars
  std::optional<algebroid::FormField> h;                          // degree 3
  std::optional<std::vector<Polynomial>> b_twist;                 // rank^3 (base spec)
  std::optional<std::vector<std::vector<Polynomial>>> kernel_frame;
  std::optional<std::vector<std::vector<Polynomial>>> kernel_projection;
};

RecipeParams parse_params_file(const std::string &path, int b_rank) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open params file '" + path + "'");
  RecipeParams params;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string &msg) -> void {
    throw std::runtime_error("params parse error at line " + std::to_string(line_no) + ": " +
                             msg);
  };
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos)
        continue;
      std::size_t end = line.find_last_not_of(" \t\r");
      line = line.substr(start, end - start + 1);
      if (line[0] == '#')
        continue;
      return true;
    }
    return false;
  };
  if (!next() || line != "algebroid-params v1")
    fail("expected header 'algebroid-params v1'");

  auto parse_block = [&](const std::string &name, std::size_t index_count, auto &&handler) {
    while (true) {
      if (!next())
        fail("unterminated block '" + name + "'");
      if (line == "END")
        return;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        fail("expected ':' in entry");
      std::istringstream head(line.substr(0, colon));
      std::vector<int> idx;
      long v;
      while (head >> v)
        idx.push_back(static_cast<int>(v) - 1);
      if (idx.size() != index_count)
        fail("expected " + std::to_string(index_count) + " indices");
      for (int i : idx)
        if (i < 0)
          fail("indices are 1-based");
      handler(idx, line.substr(colon + 1));
    }
  };

  while (next()) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "vars") {
      if (!(ls >> params.vars) || params.vars < 0)
        fail("expected 'vars <count>'");
    } else if (word == "dim") {
      if (!(ls >> params.dim) || params.dim < 0)
        fail("expected 'dim <count>'");
    } else if (word == "LIE_TABLE") {
      algebroid::LieTable table = algebroid::LieTable::zero(params.dim);
      parse_block("LIE_TABLE", 3, [&](const std::vector<int> &idx, const std::string &text) {
        table.set_structure(idx[2], idx[0], idx[1], algebroid::Rational::from_string(text));
      });
      params.lie_table = table;
    } else if (word == "ANCHOR_MAP") {
      std::vector<std::vector<Polynomial>> rho(
          params.dim, std::vector<Polynomial>(params.vars, Polynomial(params.vars)));
      parse_block("ANCHOR_MAP", 2, [&](const std::vector<int> &idx, const std::string &text) {
        rho.at(idx[0]).at(idx[1]) = Polynomial::parse(text, params.vars);
      });
      params.anchor_map = rho;
    } else if (word == "TWIST_K") {
      std::vector<Polynomial> k(static_cast<std::size_t>(params.dim) * params.dim * params.dim,
                                Polynomial(params.vars));
      parse_block("TWIST_K", 3, [&](const std::vector<int> &idx, const std::string &text) {
        Polynomial p = Polynomial::parse(text, params.vars);
        k[(static_cast<std::size_t>(idx[2]) * params.dim + idx[0]) * params.dim + idx[1]] = p;
        k[(static_cast<std::size_t>(idx[2]) * params.dim + idx[1]) * params.dim + idx[0]] = -p;
      });
      params.twist_k = k;
    } else if (word == "PI") {
      algebroid::BivectorField pi(params.vars);
      parse_block("PI", 2, [&](const std::vector<int> &idx, const std::string &text) {
        pi.set_component(idx[0], idx[1], Polynomial::parse(text, params.vars));
      });
      params.pi = pi;
    } else if (word == "H") {
      algebroid::FormField h(params.vars, 3);
      parse_block("H", 3, [&](const std::vector<int> &idx, const std::string &text) {
        h.add_term(idx, Polynomial::parse(text, params.vars));
      });
      params.h = h;
    } else if (word == "B") {
      std::vector<Polynomial> b(static_cast<std::size_t>(b_rank) * b_rank * b_rank,
                                Polynomial(params.vars));
      parse_block("B", 3, [&](const std::vector<int> &idx, const std::string &text) {
        Polynomial p = Polynomial::parse(text, params.vars);
        b[(static_cast<std::size_t>(idx[2]) * b_rank + idx[0]) * b_rank + idx[1]] = p;
        b[(static_cast<std::size_t>(idx[2]) * b_rank + idx[1]) * b_rank + idx[0]] = -p;
      });
      params.b_twist = b;
    } else if (word == "KERNEL_FRAME") {
      std::vector<std::vector<Polynomial>> t;
      parse_block("KERNEL_FRAME", 2, [&](const std::vector<int> &idx, const std::string &text) {
        std::size_t rows = std::max(t.size(), static_cast<std::size_t>(idx[0] + 1));
        std::size_t cols = t.empty() ? 0 : t.front().size();
        cols = std::max(cols, static_cast<std::size_t>(idx[1] + 1));
        t.resize(rows);
        for (auto &row : t)
          row.resize(cols, Polynomial(params.vars));
        t[idx[0]][idx[1]] = Polynomial::parse(text, params.vars);
      });
      params.kernel_frame = t;
    } else if (word == "KERNEL_PROJECTION") {
      std::vector<std::vector<Polynomial>> s;
      parse_block("KERNEL_PROJECTION", 2,
                  [&](const std::vector<int> &idx, const std::string &text) {
                    std::size_t rows = std::max(s.size(), static_cast<std::size_t>(idx[0] + 1));
                    std::size_t cols = s.empty() ? 0 : s.front().size();
                    cols = std::max(cols, static_cast<std::size_t>(idx[1] + 1));
                    s.resize(rows);
                    for (auto &row : s)
                      row.resize(cols, Polynomial(params.vars));
                    s[idx[0]][idx[1]] = Polynomial::parse(text, params.vars);
                  });
      params.kernel_projection = s;
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  return params;
}

std::optional<algebroid::KernelData> kernel_from_params(const RecipeParams &params, int rank) {
  if (!params.kernel_frame && !params.kernel_projection)
    return std::nullopt;
  if (!params.kernel_frame || !params.kernel_projection)
    throw std::runtime_error("kernel frame and projection must be supplied together");
  algebroid::KernelData kernel;
  kernel.frame = *params.kernel_frame;
  kernel.projection = *params.kernel_projection;
  std::size_t r = kernel.projection.size();
  kernel.frame.resize(rank, std::vector<Polynomial>());
  for (auto &row : kernel.frame)
    row.resize(r, Polynomial(params.vars));
  for (auto &row : kernel.projection)
    row.resize(rank, Polynomial(params.vars));
  return kernel;
}

int run_recipe(const std::string &name, const std::string &out_path, int m, int dim,
               std::uint64_t seed, const std::string &lie_name,
               const std::string &params_path, const std::string &base_path) {
  AlgebroidSpec spec;
  if (name == "tangent") {
    spec = algebroid::build_tangent_model(m);
  } else if (name == "product") {
    algebroid::LieTable table;
    if (!lie_name.empty()) {
      table = algebroid::builtin_lie_table(lie_name);
    } else if (!params_path.empty()) {
      RecipeParams params = parse_params_file(params_path, 0);
      if (!params.lie_table)
        throw std::runtime_error("product recipe needs a LIE_TABLE block");
      table = *params.lie_table;
    } else {
      throw std::runtime_error("product recipe needs --lie or --params");
    }
    spec = algebroid::build_product_model(m, table);
  } else if (name == "b-twist") {
    if (base_path.empty() || params_path.empty())
      throw std::runtime_error("b-twist recipe needs --base and --params (B block)");
    AlgebroidSpec base = algebroid::load_spec_file(base_path);
    RecipeParams params = parse_params_file(params_path, base.rank);
    if (!params.b_twist)
      throw std::runtime_error("b-twist recipe needs a B block");
    spec = algebroid::build_b_twist(base, *params.b_twist);
  } else if (name == "twisted-poisson") {
    if (params_path.empty())
      throw std::runtime_error("twisted-poisson recipe needs --params (PI and H blocks)");
    RecipeParams params = parse_params_file(params_path, 0);
    if (!params.pi)
      throw std::runtime_error("twisted-poisson recipe needs a PI block");
    algebroid::FormField h = params.h ? *params.h : algebroid::FormField(params.vars, 3);
    spec = algebroid::build_twisted_poisson(*params.pi, h,
                                            kernel_from_params(params, params.vars));
  } else if (name == "twisted-action") {
    if (params_path.empty())
      throw std::runtime_error(
          "twisted-action recipe needs --params (LIE_TABLE, ANCHOR_MAP, TWIST_K)");
    RecipeParams params = parse_params_file(params_path, 0);
    if (!params.lie_table || !params.anchor_map || !params.twist_k)
      throw std::runtime_error("twisted-action recipe needs LIE_TABLE, ANCHOR_MAP and TWIST_K");
    spec = algebroid::build_twisted_action(*params.lie_table, *params.anchor_map,
                                           *params.twist_k,
                                           kernel_from_params(params, params.dim));
  } else if (name == "random-algebra") {
    algebroid::Rng rng(seed);
    spec = algebroid::random_almost_lie_algebra(dim, rng);
  } else {
    throw std::runtime_error("unknown recipe '" + name + "'");
  }
  algebroid::save_spec_file(spec, out_path);
  std::cout << "wrote " << out_path << " (base_dim=" << spec.base_dim << " rank=" << spec.rank
            << " kernel_rank=" << spec.kernel_rank << ")\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact calculator for anchored skew brackets: axiom checking, graded "
               "differentials, and cohomology of the constant subcomplex"};
  app.require_subcommand(1);

  std::string path, out_path = "out.spec", lie_name, params_path, base_path, recipe_name;
  std::uint64_t seed = 42;
  int rounds = 25, cutoff = 3, max_degree = 5, m = 2, dim = 3;
  bool structured = false;

  CLI::App *check = app.add_subcommand("check", "validate a spec file and its operator identities");
  check->add_option("path", path, "spec file")->required();
  check->add_option("--seed", seed, "seed for the randomized d-squared spot check");
  check->add_option("--rounds", rounds, "number of random cochains for the spot check");
  check->add_option("--cutoff", cutoff, "monomial degree cutoff for the coordinate-field check");
  check->add_flag("--structured", structured, "JSON output");

  CLI::App *cohom = app.add_subcommand("cohomology", "Betti table of the constant subcomplex");
  cohom->add_option("path", path, "spec file")->required();
  cohom->add_option("--max-degree", max_degree, "top degree of the table");
  cohom->add_flag("--structured", structured, "JSON output");

  CLI::App *recipe = app.add_subcommand("recipe", "write a spec file from a named construction");
  recipe->add_option("name", recipe_name,
                     "tangent | product | b-twist | twisted-poisson | twisted-action | "
                     "random-algebra")
      ->required();
  recipe->add_option("-o,--out", out_path, "output spec file");
  recipe->add_option("--m", m, "base dimension (tangent, product)");
  recipe->add_option("--dim", dim, "algebra dimension (random-algebra)");
  recipe->add_option("--seed", seed, "seed (random-algebra)");
  recipe->add_option("--lie", lie_name, "builtin table: abelian:<k> | so3 | heisenberg | triple");
  recipe->add_option("--params", params_path, "parameter file (blocks in the spec file syntax)");
  recipe->add_option("--base", base_path, "base spec file (b-twist)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(path, seed, rounds, cutoff, structured);
    if (cohom->parsed())
      return run_cohomology(path, max_degree, structured);
    if (recipe->parsed())
      return run_recipe(recipe_name, out_path, m, dim, seed, lie_name, params_path, base_path);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "algebroid/spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace algebroid {

namespace {

constexpr const char *kHeader = "algebroid-spec v1";

void write_matrix_block(std::ostringstream &os, const char *name,
                        const std::vector<std::vector<Polynomial>> &mat) {
  os << name << "\n";
  for (std::size_t row = 0; row < mat.size(); ++row)
    for (std::size_t col = 0; col < mat[row].size(); ++col)
      if (!mat[row][col].is_zero())
        os << (row + 1) << " " << (col + 1) << " : " << mat[row][col].str() << "\n";
  os << "END\n";
}

struct SpecParser {
  std::istringstream in;
  int line_no = 0;
  std::string line;

  explicit SpecParser(const std::string &text) : in(text) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw std::runtime_error("spec parse error at line " + std::to_string(line_no) + ": " + msg);
  }

  /// Next meaningful line; blank lines and '#' comments are skipped.
  bool next_line() {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos)
        continue;
      if (line[start] == '#')
        continue;
      std::size_t end = line.find_last_not_of(" \t\r");
      line = line.substr(start, end - start + 1);
      return true;
    }
    return false;
  }

  int parse_header_int(const std::string &key) {
    if (!next_line())
      fail("expected '" + key + "'");
    std::istringstream ls(line);
    std::string k;
    long v = -1;
    if (!(ls >> k >> v) || k != key || v < 0)
      fail("expected '" + key + " <count>', got '" + line + "'");
    return static_cast<int>(v);
  }
};

// Splits "i j ... : poly" into leading indices and the polynomial text.
std::vector<int> parse_entry_indices(SpecParser &p, std::string &poly_text,
                                     std::size_t expected) {
  std::size_t colon = p.line.find(':');
  if (colon == std::string::npos)
    p.fail("expected ':' in entry '" + p.line + "'");
  std::istringstream head(p.line.substr(0, colon));
  std::vector<int> idx;
  long v;
  while (head >> v)
    idx.push_back(static_cast<int>(v));
  if (idx.size() != expected)
    p.fail("expected " + std::to_string(expected) + " indices in '" + p.line + "'");
  poly_text = p.line.substr(colon + 1);
  return idx;
}

} // namespace

std::string write_spec(const AlgebroidSpec &spec) {
  spec.validate_shape();
  std::ostringstream os;
  os << kHeader << "\n";
  os << "base_dim " << spec.base_dim << "\n";
  os << "rank " << spec.rank << "\n";
  os << "kernel_rank " << spec.kernel_rank << "\n";
  write_matrix_block(os, "ANCHOR", spec.anchor);
  os << "STRUCTURE\n";
  for (int a = 0; a < spec.rank; ++a)
    for (int b = a + 1; b < spec.rank; ++b)
      for (int c = 0; c < spec.rank; ++c)
        if (!spec.structure_c(c, a, b).is_zero())
          os << (a + 1) << " " << (b + 1) << " " << (c + 1) << " : "
             << spec.structure_c(c, a, b).str() << "\n";
  os << "END\n";
  write_matrix_block(os, "KERNEL_FRAME", spec.kernel_frame);
  write_matrix_block(os, "KERNEL_PROJECTION", spec.kernel_projection);
  return os.str();
}

AlgebroidSpec parse_spec(const std::string &text) {
  SpecParser p(text);
  if (!p.next_line() || p.line != kHeader)
    p.fail(std::string("expected header '") + kHeader + "'");
  int m = p.parse_header_int("base_dim");
  int n = p.parse_header_int("rank");
  int r = p.parse_header_int("kernel_rank");
  AlgebroidSpec spec = AlgebroidSpec::with_shape(m, n, r);

  auto read_block = [&](const char *name, auto &&entry_handler, std::size_t index_count) {
    if (!p.next_line() || p.line != name)
      p.fail(std::string("expected block '") + name + "'");
    while (true) {
      if (!p.next_line())
        p.fail(std::string("unterminated block '") + name + "'");
      if (p.line == "END")
        break;
      std::string poly_text;
      std::vector<int> idx = parse_entry_indices(p, poly_text, index_count);
      Polynomial poly;
      try {
        poly = Polynomial::parse(poly_text, m);
      } catch (const std::exception &e) {
        p.fail(e.what());
      }
      entry_handler(idx, poly);
    }
  };

  auto in_range = [&](int v, int hi, const char *what) {
    if (v < 1 || v > hi)
      p.fail(std::string("index out of range for ") + what + ": " + std::to_string(v));
    return v - 1;
  };

  read_block("ANCHOR",
             [&](const std::vector<int> &idx, const Polynomial &poly) {
               spec.anchor[in_range(idx[0], n, "ANCHOR row")][in_range(idx[1], m, "ANCHOR column")] =
                   poly;
             },
             2);
  read_block("STRUCTURE",
             [&](const std::vector<int> &idx, const Polynomial &poly) {
               int a = in_range(idx[0], n, "STRUCTURE");
               int b = in_range(idx[1], n, "STRUCTURE");
               int c = in_range(idx[2], n, "STRUCTURE");
               if (a == b)
                 p.fail("STRUCTURE entry with equal frame indices");
               spec.set_structure(c, a, b, poly);
             },
             3);
  read_block("KERNEL_FRAME",
             [&](const std::vector<int> &idx, const Polynomial &poly) {
               spec.kernel_frame[in_range(idx[0], n, "KERNEL_FRAME row")]
                                [in_range(idx[1], r, "KERNEL_FRAME column")] = poly;
             },
             2);
  read_block("KERNEL_PROJECTION",
             [&](const std::vector<int> &idx, const Polynomial &poly) {
               spec.kernel_projection[in_range(idx[0], r, "KERNEL_PROJECTION row")]
                                     [in_range(idx[1], n, "KERNEL_PROJECTION column")] = poly;
             },
             2);
  spec.validate_shape();
  return spec;
}

AlgebroidSpec load_spec_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

void save_spec_file(const AlgebroidSpec &spec, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write spec file '" + path + "'");
  out << write_spec(spec);
}

} // namespace algebroid

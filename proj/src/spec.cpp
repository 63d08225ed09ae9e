#include "algebroid/spec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algebroid {

namespace {

std::vector<std::vector<Polynomial>> zero_matrix(int rows, int cols, int nvars) {
  return std::vector<std::vector<Polynomial>>(rows,
                                              std::vector<Polynomial>(cols, Polynomial(nvars)));
}

void require(bool cond, const std::string &msg) {
  if (!cond)
    throw std::invalid_argument(msg);
}

} // namespace

AlgebroidSpec AlgebroidSpec::with_shape(int base_dim, int rank, int kernel_rank) {
  require(base_dim >= 0 && rank >= 0 && kernel_rank >= 0, "spec: negative dimension");
  AlgebroidSpec s;
  s.base_dim = base_dim;
  s.rank = rank;
  s.kernel_rank = kernel_rank;
  s.anchor = zero_matrix(rank, base_dim, base_dim);
  s.structure.assign(static_cast<std::size_t>(rank) * rank * rank, Polynomial(base_dim));
  s.kernel_frame = zero_matrix(rank, kernel_rank, base_dim);
  s.kernel_projection = zero_matrix(kernel_rank, rank, base_dim);
  return s;
}

void AlgebroidSpec::set_structure(int c, int a, int b, const Polynomial &value) {
  require(a != b || value.is_zero(), "spec: C^c_aa must vanish");
  structure[(static_cast<std::size_t>(c) * rank + a) * rank + b] = value;
  structure[(static_cast<std::size_t>(c) * rank + b) * rank + a] = -value;
}

void AlgebroidSpec::validate_shape() const {
  require(base_dim >= 0 && rank >= 0 && kernel_rank >= 0, "spec: negative dimension");
  require(static_cast<int>(anchor.size()) == rank, "spec: anchor row count");
  for (const auto &row : anchor) {
    require(static_cast<int>(row.size()) == base_dim, "spec: anchor column count");
    for (const auto &p : row)
      require(p.nvars() == base_dim, "spec: anchor entry variable count");
  }
  require(structure.size() == static_cast<std::size_t>(rank) * rank * rank,
          "spec: structure tensor size");
  for (const auto &p : structure)
    require(p.nvars() == base_dim, "spec: structure entry variable count");
  require(static_cast<int>(kernel_frame.size()) == rank, "spec: kernel frame rows");
  for (const auto &row : kernel_frame)
    require(static_cast<int>(row.size()) == kernel_rank, "spec: kernel frame columns");
  require(static_cast<int>(kernel_projection.size()) == kernel_rank,
          "spec: kernel projection rows");
  for (const auto &row : kernel_projection)
    require(static_cast<int>(row.size()) == rank, "spec: kernel projection columns");
  for (int c = 0; c < rank; ++c)
    for (int a = 0; a < rank; ++a)
      for (int b = a; b < rank; ++b)
        require(structure_c(c, a, b) == -structure_c(c, b, a),
                "spec: structure functions not skew");
}

bool Section::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Polynomial &p) { return p.is_zero(); });
}

std::string Section::str() const {
  std::ostringstream os;
  const char *base = ambient == Ambient::A ? "e" : "f";
  bool any = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero())
      continue;
    if (any)
      os << " + ";
    any = true;
    os << "(" << coeffs[i] << ") " << base << (i + 1);
  }
  return any ? os.str() : "0";
}

Section frame_section_a(const AlgebroidSpec &spec, int a) {
  Section s;
  s.ambient = Section::Ambient::A;
  s.coeffs.assign(spec.rank, Polynomial(spec.base_dim));
  s.coeffs.at(a) = Polynomial::one(spec.base_dim);
  return s;
}

Section frame_section_f(const AlgebroidSpec &spec, int b) {
  Section s;
  s.ambient = Section::Ambient::F;
  s.coeffs.assign(spec.kernel_rank, Polynomial(spec.base_dim));
  s.coeffs.at(b) = Polynomial::one(spec.base_dim);
  return s;
}

namespace {

void require_section(const Section &s, Section::Ambient amb, std::size_t len,
                     const char *what) {
  if (s.ambient != amb || s.coeffs.size() != len)
    throw std::invalid_argument(std::string("section: rank mismatch in ") + what);
}

} // namespace

Section section_add(const Section &u, const Section &v) {
  require_section(v, u.ambient, u.coeffs.size(), "section_add");
  Section r = u;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] += v.coeffs[i];
  return r;
}

Section section_sub(const Section &u, const Section &v) {
  require_section(v, u.ambient, u.coeffs.size(), "section_sub");
  Section r = u;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] -= v.coeffs[i];
  return r;
}

Section section_scale(const Polynomial &f, const Section &u) {
  Section r = u;
  for (auto &c : r.coeffs)
    c = c * f;
  return r;
}

Section kernel_embed(const AlgebroidSpec &spec, const Section &v) {
  require_section(v, Section::Ambient::F, spec.kernel_rank, "kernel_embed");
  Section r;
  r.ambient = Section::Ambient::A;
  r.coeffs.assign(spec.rank, Polynomial(spec.base_dim));
  for (int a = 0; a < spec.rank; ++a)
    for (int B = 0; B < spec.kernel_rank; ++B)
      r.coeffs[a] += spec.kernel_frame[a][B] * v.coeffs[B];
  return r;
}

Section kernel_project(const AlgebroidSpec &spec, const Section &phi) {
  require_section(phi, Section::Ambient::A, spec.rank, "kernel_project");
  Section r;
  r.ambient = Section::Ambient::F;
  r.coeffs.assign(spec.kernel_rank, Polynomial(spec.base_dim));
  for (int B = 0; B < spec.kernel_rank; ++B)
    for (int a = 0; a < spec.rank; ++a)
      r.coeffs[B] += spec.kernel_projection[B][a] * phi.coeffs[a];
  return r;
}

Derivation anchor_of(const AlgebroidSpec &spec, const Section &phi) {
  require_section(phi, Section::Ambient::A, spec.rank, "anchor_of");
  std::vector<Polynomial> comps(spec.base_dim, Polynomial(spec.base_dim));
  for (int i = 0; i < spec.base_dim; ++i)
    for (int a = 0; a < spec.rank; ++a)
      comps[i] += phi.coeffs[a] * spec.anchor[a][i];
  return Derivation(std::move(comps));
}

Section bracket(const AlgebroidSpec &spec, const Section &phi, const Section &psi) {
  require_section(phi, Section::Ambient::A, spec.rank, "bracket");
  require_section(psi, Section::Ambient::A, spec.rank, "bracket");
  Derivation rho_phi = anchor_of(spec, phi);
  Derivation rho_psi = anchor_of(spec, psi);
  Section r;
  r.ambient = Section::Ambient::A;
  r.coeffs.assign(spec.rank, Polynomial(spec.base_dim));
  for (int c = 0; c < spec.rank; ++c) {
    Polynomial acc(spec.base_dim);
    for (int a = 0; a < spec.rank; ++a) {
      if (phi.coeffs[a].is_zero())
        continue;
      for (int b = 0; b < spec.rank; ++b) {
        const Polynomial &cc = spec.structure_c(c, a, b);
        if (cc.is_zero() || psi.coeffs[b].is_zero())
          continue;
        acc += phi.coeffs[a] * psi.coeffs[b] * cc;
      }
    }
    acc += rho_phi.apply(psi.coeffs[c]);
    acc -= rho_psi.apply(phi.coeffs[c]);
    r.coeffs[c] = std::move(acc);
  }
  return r;
}

Section jacobiator(const AlgebroidSpec &spec, const Section &phi, const Section &psi,
                   const Section &chi) {
  Section r = bracket(spec, phi, bracket(spec, psi, chi));
  r = section_add(r, bracket(spec, psi, bracket(spec, chi, phi)));
  r = section_add(r, bracket(spec, chi, bracket(spec, phi, psi)));
  return r;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck &c) { return c.passed; });
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (const auto &c : checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty())
      os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

AxiomReport check_axioms(const AlgebroidSpec &spec) {
  spec.validate_shape();
  AxiomReport report;

  {
    AxiomCheck check{"bracket-skew", true, ""};
    for (int c = 0; c < spec.rank && check.passed; ++c)
      for (int a = 0; a < spec.rank && check.passed; ++a)
        for (int b = 0; b < spec.rank && check.passed; ++b)
          if (spec.structure_c(c, a, b) != -spec.structure_c(c, b, a)) {
            check.passed = false;
            std::ostringstream os;
            os << "C^" << (c + 1) << "_" << (a + 1) << (b + 1) << " not skew";
            check.detail = os.str();
          }
    report.checks.push_back(std::move(check));
  }

  {
    // rho([e_a,e_b]) = [rho(e_a), rho(e_b)] on the frame; Leibniz linearity
    // extends this identity to arbitrary sections.
    AxiomCheck check{"anchor-morphism", true, ""};
    for (int a = 0; a < spec.rank && check.passed; ++a) {
      Derivation rho_a = anchor_of(spec, frame_section_a(spec, a));
      for (int b = a + 1; b < spec.rank && check.passed; ++b) {
        Derivation rho_b = anchor_of(spec, frame_section_a(spec, b));
        Derivation lhs = anchor_of(spec, bracket(spec, frame_section_a(spec, a),
                                                 frame_section_a(spec, b)));
        Derivation rhs = derivation_commutator(rho_a, rho_b);
        if (!(lhs == rhs)) {
          check.passed = false;
          std::ostringstream os;
          os << "rho[e" << (a + 1) << ",e" << (b + 1) << "] = " << lhs.str()
             << " but [rho e" << (a + 1) << ", rho e" << (b + 1) << "] = " << rhs.str();
          check.detail = os.str();
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    AxiomCheck check{"anchor-kills-kernel", true, ""};
    for (int B = 0; B < spec.kernel_rank && check.passed; ++B) {
      Derivation rho_t = anchor_of(spec, kernel_embed(spec, frame_section_f(spec, B)));
      if (!rho_t.is_zero()) {
        check.passed = false;
        std::ostringstream os;
        os << "rho(t(f" << (B + 1) << ")) = " << rho_t.str();
        check.detail = os.str();
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    AxiomCheck check{"projection-splits", true, ""};
    for (int B = 0; B < spec.kernel_rank && check.passed; ++B) {
      Section st = kernel_project(spec, kernel_embed(spec, frame_section_f(spec, B)));
      for (int C = 0; C < spec.kernel_rank && check.passed; ++C) {
        Polynomial expected = C == B ? Polynomial::one(spec.base_dim)
                                     : Polynomial(spec.base_dim);
        if (st.coeffs[C] != expected) {
          check.passed = false;
          std::ostringstream os;
          os << "(s t)^" << (C + 1) << "_" << (B + 1) << " = " << st.coeffs[C];
          check.detail = os.str();
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  report.checks.push_back(
      AxiomCheck{"leibniz-rule", true, "holds by construction of the bracket"});
  return report;
}

JacobiatorTensor::JacobiatorTensor(int rank, int kernel_rank, int nvars,
                                   std::map<std::array<int, 3>, std::vector<Polynomial>> comps)
    : rank_(rank), kernel_rank_(kernel_rank), nvars_(nvars), comps_(std::move(comps)) {}

namespace {

// Sorts three indices, returning the permutation sign; 0 for repeats.
int sort3(int &a, int &b, int &c) {
  int sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (a == b || b == c)
    return 0;
  return sign;
}

} // namespace

Polynomial JacobiatorTensor::component(int b_kernel, int a, int b, int c) const {
  int sign = sort3(a, b, c);
  if (sign == 0)
    return Polynomial(nvars_);
  auto it = comps_.find({a, b, c});
  if (it == comps_.end())
    return Polynomial(nvars_);
  const Polynomial &p = it->second.at(b_kernel);
  return sign > 0 ? p : -p;
}

Section JacobiatorTensor::section(int a, int b, int c) const {
  Section s;
  s.ambient = Section::Ambient::F;
  s.coeffs.reserve(kernel_rank_);
  for (int B = 0; B < kernel_rank_; ++B)
    s.coeffs.push_back(component(B, a, b, c));
  return s;
}

bool JacobiatorTensor::is_zero() const {
  for (const auto &[key, comps] : comps_)
    for (const auto &p : comps)
      if (!p.is_zero())
        return false;
  return true;
}

JacobiatorTensor jacobiator_tensor(const AlgebroidSpec &spec) {
  std::map<std::array<int, 3>, std::vector<Polynomial>> comps;
  for (int a = 0; a < spec.rank; ++a)
    for (int b = a + 1; b < spec.rank; ++b)
      for (int c = b + 1; c < spec.rank; ++c) {
        Section j = jacobiator(spec, frame_section_a(spec, a), frame_section_a(spec, b),
                               frame_section_a(spec, c));
        if (!anchor_of(spec, j).is_zero()) {
          std::ostringstream os;
          os << "jacobiator not anchor-less on frame triple (" << (a + 1) << ","
             << (b + 1) << "," << (c + 1) << ")";
          throw std::runtime_error(os.str());
        }
        Section w = kernel_project(spec, j);
        if (!(kernel_embed(spec, w) == j))
          throw std::runtime_error("jacobiator escapes kernel frame");
        comps.emplace(std::array<int, 3>{a, b, c}, std::move(w.coeffs));
      }
  return JacobiatorTensor(spec.rank, spec.kernel_rank, spec.base_dim, std::move(comps));
}

Section connection(const AlgebroidSpec &spec, const Section &phi, const Section &v) {
  Section br = bracket(spec, phi, kernel_embed(spec, v));
  Section w = kernel_project(spec, br);
  if (!(kernel_embed(spec, w) == br))
    throw std::runtime_error("bracket leaves kernel");
  return w;
}

std::vector<Polynomial> frame_connection(const AlgebroidSpec &spec, const Section &phi,
                                         const std::vector<Polynomial> &w) {
  Derivation rho_phi = anchor_of(spec, phi);
  std::vector<Polynomial> out;
  out.reserve(w.size());
  for (const auto &comp : w)
    out.push_back(rho_phi.apply(comp));
  return out;
}

} // namespace algebroid

#include "algebroid/gallery.hpp"

#include "algebroid/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algebroid {

FormField::FormField(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0)
    throw std::invalid_argument("form: negative degree");
}

FormField FormField::coordinate_differential(int nvars, int index) {
  FormField f(nvars, 1);
  f.add_term({index}, Polynomial::one(nvars));
  return f;
}

Polynomial FormField::component(std::vector<int> indices) const {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j] < indices[j - 1]; --j) {
      std::swap(indices[j], indices[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1])
      return Polynomial(nvars_);
  auto it = comps_.find(indices);
  if (it == comps_.end())
    return Polynomial(nvars_);
  return sign > 0 ? it->second : -it->second;
}

void FormField::add_term(const std::vector<int> &indices, const Polynomial &coeff) {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("form: index count does not match degree");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= nvars_)
      throw std::invalid_argument("form: index out of range");
    if (i > 0 && indices[i - 1] >= indices[i])
      throw std::invalid_argument("form: indices not strictly increasing");
  }
  if (coeff.nvars() != nvars_)
    throw std::invalid_argument("form: coefficient variable count");
  if (coeff.is_zero())
    return;
  auto it = comps_.find(indices);
  if (it == comps_.end()) {
    comps_.emplace(indices, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero())
      comps_.erase(it);
  }
}

FormField FormField::operator-() const {
  FormField r(nvars_, degree_);
  for (const auto &[k, v] : comps_)
    r.comps_.emplace(k, -v);
  return r;
}

FormField &FormField::operator+=(const FormField &o) {
  if (nvars_ != o.nvars_ || (degree_ != o.degree_ && !o.is_zero() && !is_zero()))
    throw std::invalid_argument("form: dimension mismatch");
  if (is_zero())
    degree_ = o.degree_;
  for (const auto &[k, v] : o.comps_)
    add_term(k, v);
  return *this;
}

FormField &FormField::operator-=(const FormField &o) {
  return *this += -o;
}

FormField FormField::scaled(const Polynomial &f) const {
  FormField r(nvars_, degree_);
  for (const auto &[k, v] : comps_)
    r.add_term(k, v * f);
  return r;
}

bool operator==(const FormField &a, const FormField &b) {
  if (a.nvars_ != b.nvars_)
    return false;
  if (a.comps_.empty() && b.comps_.empty())
    return true;
  return a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

std::string FormField::str() const {
  if (comps_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, v] : comps_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << v << ")";
    for (int idx : k)
      os << " dx" << (idx + 1);
  }
  return os.str();
}

FormField wedge(const FormField &a, const FormField &b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("form: dimension mismatch in wedge");
  FormField r(a.nvars(), a.degree() + b.degree());
  for (const auto &[ka, fa] : a.components())
    for (const auto &[kb, fb] : b.components()) {
      int sign = 1;
      auto merged = detail::merge_skew(ka, kb, sign);
      if (!merged)
        continue;
      Polynomial coeff = fa * fb;
      if (sign < 0)
        coeff = -coeff;
      r.add_term(*merged, coeff);
    }
  return r;
}

FormField cartan_d(const FormField &omega) {
  FormField r(omega.nvars(), omega.degree() + 1);
  for (const auto &[key, coeff] : omega.components())
    for (int i = 0; i < omega.nvars(); ++i) {
      Polynomial dc = coeff.derivative(i);
      if (dc.is_zero())
        continue;
      int sign = 1;
      auto merged = detail::merge_skew({i}, key, sign);
      if (!merged)
        continue;
      r.add_term(*merged, sign > 0 ? dc : -dc);
    }
  return r;
}

FormField cartan_contract(const Derivation &x, const FormField &omega) {
  if (x.nvars() != omega.nvars())
    throw std::invalid_argument("form: dimension mismatch in contraction");
  if (omega.degree() == 0)
    return FormField(omega.nvars(), 0);
  FormField r(omega.nvars(), omega.degree() - 1);
  for (const auto &[key, coeff] : omega.components())
    for (std::size_t j = 0; j < key.size(); ++j) {
      const Polynomial &xj = x.component(key[j]);
      if (xj.is_zero())
        continue;
      std::vector<int> rest;
      rest.reserve(key.size() - 1);
      for (std::size_t k = 0; k < key.size(); ++k)
        if (k != j)
          rest.push_back(key[k]);
      Polynomial term = coeff * xj;
      r.add_term(rest, j % 2 == 0 ? term : -term);
    }
  return r;
}

FormField cartan_lie(const Derivation &x, const FormField &omega) {
  return cartan_contract(x, cartan_d(omega)) + cartan_d(cartan_contract(x, omega));
}

BivectorField::BivectorField(int nvars)
    : nvars_(nvars),
      comps_(nvars, std::vector<Polynomial>(nvars, Polynomial(nvars))) {}

void BivectorField::set_component(int i, int j, const Polynomial &value) {
  if (i == j && !value.is_zero())
    throw std::invalid_argument("bivector: diagonal entry must vanish");
  comps_.at(i).at(j) = value;
  comps_.at(j).at(i) = -value;
}

Derivation BivectorField::sharp_coordinate(int i) const {
  std::vector<Polynomial> comps;
  comps.reserve(nvars_);
  for (int k = 0; k < nvars_; ++k)
    comps.push_back(comps_[i][k]);
  return Derivation(std::move(comps));
}

LieTable LieTable::zero(int dim) {
  LieTable t;
  t.dim = dim;
  t.c.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
  return t;
}

void LieTable::set_structure(int cc, int a, int b, const Rational &value) {
  if (a == b && !value.is_zero())
    throw std::invalid_argument("lie table: c^c_aa must vanish");
  c[(static_cast<std::size_t>(cc) * dim + a) * dim + b] = value;
  c[(static_cast<std::size_t>(cc) * dim + b) * dim + a] = -value;
}

std::vector<std::string> LieTable::jacobi_defects() const {
  std::vector<std::string> defects;
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int cc = b + 1; cc < dim; ++cc)
        for (int e = 0; e < dim; ++e) {
          Rational sum(0);
          for (int g = 0; g < dim; ++g) {
            sum += structure_c(e, a, g) * structure_c(g, b, cc);
            sum += structure_c(e, b, g) * structure_c(g, cc, a);
            sum += structure_c(e, cc, g) * structure_c(g, a, b);
          }
          if (!sum.is_zero()) {
            std::ostringstream os;
            os << "jacobi defect " << sum.str() << " in component e" << (e + 1)
               << " on triple (" << (a + 1) << "," << (b + 1) << "," << (cc + 1) << ")";
            defects.push_back(os.str());
          }
        }
  return defects;
}

LieTable builtin_lie_table(const std::string &name) {
  if (name.rfind("abelian:", 0) == 0) {
    int k = std::stoi(name.substr(8));
    if (k < 0)
      throw std::invalid_argument("lie table: negative dimension");
    return LieTable::zero(k);
  }
  if (name == "so3") {
    LieTable t = LieTable::zero(3);
    t.set_structure(2, 0, 1, Rational(1));
    t.set_structure(0, 1, 2, Rational(1));
    t.set_structure(1, 2, 0, Rational(1));
    return t;
  }
  if (name == "heisenberg") {
    LieTable t = LieTable::zero(3);
    t.set_structure(2, 0, 1, Rational(1));
    return t;
  }
  if (name == "triple") {
    // [e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3; not a Lie algebra.
    LieTable t = LieTable::zero(3);
    t.set_structure(0, 0, 1, Rational(1));
    t.set_structure(1, 1, 2, Rational(1));
    t.set_structure(2, 2, 0, Rational(1));
    return t;
  }
  throw std::invalid_argument("unknown lie table '" + name + "'");
}

AlgebroidSpec build_almost_lie_algebra(const LieTable &table) {
  AlgebroidSpec spec = AlgebroidSpec::with_shape(0, table.dim, table.dim);
  for (int cc = 0; cc < table.dim; ++cc)
    for (int a = 0; a < table.dim; ++a)
      for (int b = a + 1; b < table.dim; ++b)
        spec.set_structure(cc, a, b, Polynomial::constant(0, table.structure_c(cc, a, b)));
  for (int a = 0; a < table.dim; ++a) {
    spec.kernel_frame[a][a] = Polynomial::one(0);
    spec.kernel_projection[a][a] = Polynomial::one(0);
  }
  return spec;
}

AlgebroidSpec build_tangent_model(int m) {
  if (m < 1)
    throw std::invalid_argument("tangent model: m must be at least 1");
  AlgebroidSpec spec = AlgebroidSpec::with_shape(m, m, 0);
  for (int a = 0; a < m; ++a)
    spec.anchor[a][a] = Polynomial::one(m);
  return spec;
}

AlgebroidSpec build_product_model(int m, const LieTable &lie) {
  auto defects = lie.jacobi_defects();
  if (!defects.empty())
    throw std::runtime_error("not a Lie algebra: " + defects.front());
  if (m == 0)
    return build_almost_lie_algebra(lie);
  const int n = m + lie.dim;
  AlgebroidSpec spec = AlgebroidSpec::with_shape(m, n, lie.dim);
  for (int a = 0; a < m; ++a)
    spec.anchor[a][a] = Polynomial::one(m);
  for (int cc = 0; cc < lie.dim; ++cc)
    for (int a = 0; a < lie.dim; ++a)
      for (int b = a + 1; b < lie.dim; ++b)
        spec.set_structure(m + cc, m + a, m + b,
                           Polynomial::constant(m, lie.structure_c(cc, a, b)));
  for (int B = 0; B < lie.dim; ++B) {
    spec.kernel_frame[m + B][B] = Polynomial::one(m);
    spec.kernel_projection[B][m + B] = Polynomial::one(m);
  }
  return spec;
}

AlgebroidSpec build_b_twist(const AlgebroidSpec &spec, const std::vector<Polynomial> &twist) {
  spec.validate_shape();
  const int n = spec.rank;
  if (twist.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("b-twist: tensor size mismatch");
  if (!jacobiator_tensor(spec).is_zero())
    throw std::runtime_error("b-twist: input spec has nonzero jacobiator");
  auto at = [&](int c, int a, int b) -> const Polynomial & {
    return twist[(static_cast<std::size_t>(c) * n + a) * n + b];
  };
  AlgebroidSpec out = spec;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Section value;
      value.ambient = Section::Ambient::A;
      for (int c = 0; c < n; ++c) {
        if (at(c, a, b) != -at(c, b, a))
          throw std::invalid_argument("b-twist: tensor not skew in the frame indices");
        value.coeffs.push_back(at(c, a, b));
      }
      if (!(kernel_embed(spec, kernel_project(spec, value)) == value))
        throw std::runtime_error("B not kernel-valued");
      for (int c = 0; c < n; ++c)
        out.set_structure(c, a, b, spec.structure_c(c, a, b) + value.coeffs[c]);
    }
  AxiomReport report = check_axioms(out);
  if (!report.all_passed())
    throw std::runtime_error("b-twist: twisted spec fails axioms\n" + report.str());
  return out;
}

AlgebroidSpec build_twisted_poisson(const BivectorField &pi, const FormField &h,
                                    const std::optional<KernelData> &kernel) {
  const int m = pi.nvars();
  if (h.nvars() != m || (h.degree() != 3 && !h.is_zero()))
    throw std::invalid_argument("twisted poisson: H must be a 3-form on the same base");
  AlgebroidSpec spec =
      AlgebroidSpec::with_shape(m, m, kernel ? static_cast<int>(kernel->projection.size()) : 0);
  std::vector<Derivation> sharp;
  sharp.reserve(m);
  for (int i = 0; i < m; ++i)
    sharp.push_back(pi.sharp_coordinate(i));
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < m; ++k)
      spec.anchor[a][k] = pi.component(a, k);
  for (int a = 0; a < m; ++a) {
    FormField dxa = FormField::coordinate_differential(m, a);
    for (int b = a + 1; b < m; ++b) {
      FormField dxb = FormField::coordinate_differential(m, b);
      FormField br = cartan_lie(sharp[a], dxb) - cartan_lie(sharp[b], dxa);
      FormField pab(m, 0);
      pab.add_term({}, pi.component(a, b));
      br -= cartan_d(pab);
      if (!h.is_zero())
        br += cartan_contract(sharp[b], cartan_contract(sharp[a], h));
      for (int c = 0; c < m; ++c)
        spec.set_structure(c, a, b, br.component({c}));
    }
  }
  if (kernel) {
    if (kernel->frame.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("twisted poisson: kernel frame row count");
    spec.kernel_frame = kernel->frame;
    spec.kernel_projection = kernel->projection;
  }
  AxiomReport report = check_axioms(spec);
  if (!report.all_passed())
    throw std::runtime_error("not twisted Poisson:\n" + report.str());
  return spec;
}

AlgebroidSpec build_twisted_action(const LieTable &lie,
                                   const std::vector<std::vector<Polynomial>> &rho,
                                   const std::vector<Polynomial> &twist_k,
                                   const std::optional<KernelData> &kernel) {
  const int n = lie.dim;
  if (rho.size() != static_cast<std::size_t>(n) || n == 0)
    throw std::invalid_argument("twisted action: anchor row count");
  const int m = static_cast<int>(rho.front().size());
  for (const auto &row : rho)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("twisted action: ragged anchor");
  if (twist_k.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("twisted action: twist tensor size");
  auto k_at = [&](int c, int a, int b) -> const Polynomial & {
    return twist_k[(static_cast<std::size_t>(c) * n + a) * n + b];
  };
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (k_at(c, a, b) != -k_at(c, b, a))
          throw std::invalid_argument("twisted action: twist not skew");

  std::vector<Derivation> rho_frames;
  rho_frames.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<Polynomial> comps = rho[a];
    rho_frames.push_back(Derivation(std::move(comps)));
  }

  // Anchor compatibility: rho of the untwisted frame bracket must equal the
  // commutator minus rho of the twist.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Derivation lhs(m);
      for (int cc = 0; cc < n; ++cc) {
        Rational coeff = lie.structure_c(cc, a, b);
        if (!coeff.is_zero())
          lhs += rho_frames[cc].scaled(Polynomial::constant(m, coeff));
      }
      Derivation rhs = derivation_commutator(rho_frames[a], rho_frames[b]);
      for (int cc = 0; cc < n; ++cc)
        if (!k_at(cc, a, b).is_zero())
          rhs += -(rho_frames[cc].scaled(k_at(cc, a, b)));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "twist violates anchor compatibility on frame pair (" << (a + 1) << ","
           << (b + 1) << ")";
        throw std::runtime_error(os.str());
      }
    }

  AlgebroidSpec spec = AlgebroidSpec::with_shape(
      m, n, kernel ? static_cast<int>(kernel->projection.size()) : 0);
  spec.anchor = rho;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        spec.set_structure(cc, a, b,
                           Polynomial::constant(m, lie.structure_c(cc, a, b)) + k_at(cc, a, b));
  if (kernel) {
    if (kernel->frame.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("twisted action: kernel frame row count");
    spec.kernel_frame = kernel->frame;
    spec.kernel_projection = kernel->projection;
    // k must annihilate the supplied kernel frame.
    const int r = spec.kernel_rank;
    for (int B = 0; B < r; ++B)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc) {
          Polynomial acc(m);
          for (int a = 0; a < n; ++a)
            acc += spec.kernel_frame[a][B] * k_at(cc, a, b);
          if (!acc.is_zero()) {
            std::ostringstream os;
            os << "twist does not annihilate the kernel frame: k(f" << (B + 1) << ", e"
               << (b + 1) << ") has component " << acc.str() << " on e" << (cc + 1);
            throw std::runtime_error(os.str());
          }
        }
  }
  AxiomReport report = check_axioms(spec);
  if (!report.all_passed())
    throw std::runtime_error("twisted action: spec fails axioms\n" + report.str());
  return spec;
}

namespace {

Polynomial minor_det(const std::vector<std::vector<Polynomial>> &mat, std::vector<int> rows,
                     std::vector<int> cols, int nvars) {
  if (rows.empty())
    return Polynomial::one(nvars);
  Polynomial acc(nvars);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial &entry = mat[rows[0]][cols[j]];
    if (entry.is_zero())
      continue;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j)
        sub_cols.push_back(cols[k]);
    Polynomial term = entry * minor_det(mat, sub_rows, sub_cols, nvars);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

} // namespace

std::vector<std::vector<Polynomial>> invert_constant_det(
    const std::vector<std::vector<Polynomial>> &mat) {
  const int n = static_cast<int>(mat.size());
  if (n == 0)
    return {};
  const int nvars = mat[0][0].nvars();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i;
  Polynomial det = minor_det(mat, all, all, nvars);
  if (!det.is_constant() || det.is_zero())
    throw std::runtime_error("matrix inverse requires a nonzero constant determinant, got " +
                             det.str());
  Rational inv_det = Rational(1) / det.constant_value();
  std::vector<std::vector<Polynomial>> out(n, std::vector<Polynomial>(n, Polynomial(nvars)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != j)
          rows.push_back(k);
        if (k != i)
          cols.push_back(k);
      }
      Polynomial cof = minor_det(mat, rows, cols, nvars);
      if ((i + j) % 2 != 0)
        cof = -cof;
      out[i][j] = cof.scaled(inv_det);
    }
  return out;
}

} // namespace algebroid

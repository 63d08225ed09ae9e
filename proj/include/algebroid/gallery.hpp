#ifndef ALGEBROID_GALLERY_HPP
#define ALGEBROID_GALLERY_HPP

#include "algebroid/spec.hpp"

#include <map>
#include <optional>
#include <vector>

namespace algebroid {

/// Differential form on the polynomial base: antisymmetric coefficients on
/// strictly increasing index tuples (0-based), no stored zeros.
class FormField {
public:
  FormField() : nvars_(0), degree_(0) {}
  FormField(int nvars, int degree);

  static FormField coordinate_differential(int nvars, int index); // dx_{index+1}

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<std::vector<int>, Polynomial> &components() const { return comps_; }
  /// Coefficient on an arbitrary index tuple (sign from sorting; zero on repeats).
  Polynomial component(std::vector<int> indices) const;

  void add_term(const std::vector<int> &indices, const Polynomial &coeff);

  FormField operator-() const;
  FormField &operator+=(const FormField &o);
  FormField &operator-=(const FormField &o);
  friend FormField operator+(FormField a, const FormField &b) { return a += b; }
  friend FormField operator-(FormField a, const FormField &b) { return a -= b; }
  FormField scaled(const Polynomial &f) const;
  friend bool operator==(const FormField &a, const FormField &b);

  std::string str() const;

private:
  int nvars_;
  int degree_;
  std::map<std::vector<int>, Polynomial> comps_;
};

FormField wedge(const FormField &a, const FormField &b);

/// de Rham differential.
FormField cartan_d(const FormField &omega);
/// Interior product i_X.
FormField cartan_contract(const Derivation &x, const FormField &omega);
/// Lie derivative via the homotopy formula L_X = i_X d + d i_X.
FormField cartan_lie(const Derivation &x, const FormField &omega);

/// Antisymmetric bivector Pi^{ij} on the polynomial base.
class BivectorField {
public:
  BivectorField() : nvars_(0) {}
  explicit BivectorField(int nvars);

  int nvars() const { return nvars_; }
  const Polynomial &component(int i, int j) const { return comps_[i][j]; }
  /// Sets Pi^{ij} and Pi^{ji} = -Pi^{ij}.
  void set_component(int i, int j, const Polynomial &value);

  /// Pi# of a coordinate covector: the derivation with components Pi^{ik}.
  Derivation sharp_coordinate(int i) const;

private:
  int nvars_;
  std::vector<std::vector<Polynomial>> comps_;
};

/// Skew structure constants of a finite-dimensional algebra over the
/// rationals (bracket table [e_a, e_b] = c^c_ab e_c).
struct LieTable {
  int dim = 0;
  std::vector<Rational> c; // dense dim^3, c^c_ab

  static LieTable zero(int dim);
  const Rational &structure_c(int cc, int a, int b) const {
    return c[(static_cast<std::size_t>(cc) * dim + a) * dim + b];
  }
  void set_structure(int cc, int a, int b, const Rational &value);
  /// Left-hand sides of the Jacobi identity on all frame triples; empty
  /// when the table is a Lie algebra.
  std::vector<std::string> jacobi_defects() const;
};

/// Named small tables: "abelian:<k>", "so3", "heisenberg", "triple" (the
/// cyclic table [e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3).
LieTable builtin_lie_table(const std::string &name);

/// Any skew table as an algebra over a point: base_dim 0, zero anchor,
/// kernel frame and projection the identity.
AlgebroidSpec build_almost_lie_algebra(const LieTable &table);

/// Tangent model: rank m, identity anchor, zero bracket, zero kernel.
AlgebroidSpec build_tangent_model(int m);

/// Product of the tangent model with a Lie algebra: rank m + dim g, the
/// g-block is the kernel frame. Throws std::runtime_error("not a Lie
/// algebra ...") when the table violates the Jacobi identity.
AlgebroidSpec build_product_model(int m, const LieTable &lie);

/// Adds a kernel-valued two-form to the bracket of a Jacobi spec. twist is
/// the dense A-valued tensor B^c_ab (skew in a,b); it must take values in
/// the span of the kernel frame ("B not kernel-valued" otherwise) and the
/// input spec must have vanishing Jacobiator.
AlgebroidSpec build_b_twist(const AlgebroidSpec &spec, const std::vector<Polynomial> &twist);

/// Cotangent model of a twisted Poisson bivector: anchor row i is
/// Pi#(dx^i), bracket
///   [a,b] = L_{Pi#a} b - L_{Pi#b} a - d(Pi(a,b)) + H(Pi#a, Pi#b, .)
/// read off on the coordinate frame. A kernel frame (t, s) must be supplied
/// when Pi is degenerate. Throws std::runtime_error("not twisted Poisson
/// ...") when the produced spec fails the axioms, which happens exactly
/// when the compatibility condition between Pi and H fails.
struct KernelData {
  std::vector<std::vector<Polynomial>> frame;      // n x r
  std::vector<std::vector<Polynomial>> projection; // r x n
};
AlgebroidSpec build_twisted_poisson(const BivectorField &pi, const FormField &h,
                                    const std::optional<KernelData> &kernel = std::nullopt);

/// Algebra action on the polynomial base twisted by a g-valued two-form k:
/// bracket table [e_a,e_b] = c_ab + k_ab over anchor rho. Verifies the
/// anchor compatibility rho([.,.]) = [rho., rho.] - rho(k(.,.)) and, when a
/// kernel frame is supplied, that k annihilates it.
AlgebroidSpec build_twisted_action(const LieTable &lie,
                                   const std::vector<std::vector<Polynomial>> &rho,
                                   const std::vector<Polynomial> &twist_k,
                                   const std::optional<KernelData> &kernel = std::nullopt);

/// Adjugate-based inverse for a square polynomial matrix whose determinant
/// is a nonzero rational constant; throws otherwise.
std::vector<std::vector<Polynomial>> invert_constant_det(
    const std::vector<std::vector<Polynomial>> &mat);

} // namespace algebroid

#endif

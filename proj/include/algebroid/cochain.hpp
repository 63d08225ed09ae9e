#ifndef ALGEBROID_COCHAIN_HPP
#define ALGEBROID_COCHAIN_HPP

#include "algebroid/spec.hpp"

#include <map>
#include <string>
#include <vector>

namespace algebroid {

/// Basis monomial of the graded algebra generated by the base ring, the odd
/// generators xi(a) (degree 1, dual to the A-frame) and the even generators
/// b(B) (degree 2, dual to the kernel frame). xi indices strictly increase,
/// b indices weakly increase; indices are 0-based internally.
struct CochainKey {
  std::vector<int> xi;
  std::vector<int> sym;

  int degree() const { return static_cast<int>(xi.size() + 2 * sym.size()); }
  auto operator<=>(const CochainKey &) const = default;
  std::string str() const; // e.g. "xi(1)^xi(3) b(2)b(2)", "1" when empty
};

/// Homogeneous element of C^n = (+)_{p+2q=n} Lambda^p A* (x) Sym^q F* with
/// polynomial coefficients. Canonical form: no zero coefficients.
class Cochain {
public:
  Cochain() : spec_(nullptr), degree_(0) {}
  Cochain(const AlgebroidSpec &spec, int degree);

  static Cochain scalar(const AlgebroidSpec &spec, const Polynomial &f);
  static Cochain monomial(const AlgebroidSpec &spec, const CochainKey &key,
                          const Polynomial &coeff);
  /// xi(a), the degree-1 generator dual to frame section e_{a+1}.
  static Cochain xi_generator(const AlgebroidSpec &spec, int a);
  /// b(B), the degree-2 generator dual to kernel frame section f_{B+1}.
  static Cochain b_generator(const AlgebroidSpec &spec, int B);

  const AlgebroidSpec &spec() const { return *spec_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<CochainKey, Polynomial> &terms() const { return terms_; }

  void add_term(const CochainKey &key, const Polynomial &coeff);

  Cochain operator-() const;
  Cochain &operator+=(const Cochain &o);
  Cochain &operator-=(const Cochain &o);
  friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain &b) { return a -= b; }
  Cochain scaled(const Polynomial &f) const;
  Cochain scaled(const Rational &c) const;

  /// Two cochains are equal when their canonical term maps agree (the
  /// declared degree is immaterial for the zero cochain).
  friend bool operator==(const Cochain &a, const Cochain &b);

  std::string str() const;
  /// Round-trips str(): lines "key : polynomial" under a "cochain v1" header.
  static Cochain parse(const std::string &text, const AlgebroidSpec &spec);

private:
  const AlgebroidSpec *spec_;
  int degree_;
  std::map<CochainKey, Polynomial> terms_;
};

/// Graded-commutative product; the Koszul sign comes from the odd xi part
/// only. Degrees add.
Cochain wedge(const Cochain &a, const Cochain &b);

/// Pairs a cochain of shape Lambda^p (x) Sym^q against p sections of A and
/// q sections of F: determinant convention on the odd part, permanent on
/// the symmetric part.
Polynomial evaluate_cochain(const Cochain &gamma, const std::vector<Section> &a_sections,
                            const std::vector<Section> &f_sections);

struct OperatorIdentityReport {
  bool passed = true;
  std::string detail;
};

/// The graded operator algebra of a validated spec: the exterior covariant
/// derivative D, the kernel-transpose shift, the Jacobiator insertion, the
/// two even correction operators, and the total differential. Generator
/// actions are tabulated once at construction; every operator extends as a
/// graded derivation.
class CochainComplex {
public:
  /// Requires check_axioms(spec) to pass; throws std::runtime_error otherwise.
  explicit CochainComplex(const AlgebroidSpec &spec);

  const AlgebroidSpec &spec() const { return spec_; }
  const JacobiatorTensor &jacobiator() const { return jac_; }
  /// Connection coefficient Gamma^C_aB of the bracket connection on the
  /// kernel frame.
  const Polynomial &connection_coefficient(int C, int a, int B) const {
    return gamma_[a][B][C];
  }

  /// Degree +1 odd derivative extending the anchor gradient on functions,
  /// the structure-function action on xi, and the dual connection on b.
  Cochain d_operator(const Cochain &gamma) const;
  /// Degree +1 odd derivative: xi(a) -> sum_B t^a_B b(B), zero on functions
  /// and on b. Squares to zero.
  Cochain delta_hat(const Cochain &gamma) const;
  /// Degree +1 odd derivative: b(B) -> sum_{a<b<c} J^B_abc xi^a xi^b xi^c,
  /// zero on functions and on xi. Squares to zero.
  Cochain j_hat(const Cochain &gamma) const;
  /// Degree +2 even derivation: xi(a) -> a-component of the embedded
  /// Jacobiator 3-form; zero on functions and b.
  Cochain j_tilde(const Cochain &gamma) const;
  /// Degree +2 even derivation: b(C) -> contraction of the Jacobiator with
  /// the kernel frame in the first slot; zero on functions and xi.
  Cochain l_star(const Cochain &gamma) const;
  /// d = D + Jhat + deltahat; squares to zero.
  Cochain total_differential(const Cochain &gamma) const;

  /// Verifies that the covariant exterior derivative of the Jacobiator
  /// 3-form vanishes on every frame 4-tuple.
  OperatorIdentityReport check_dj_zero() const;

  /// Compares the total differential against the degree-1 coordinate vector
  /// field built from the structure data: on every generator, then on all
  /// basis monomials with key degree <= degree_cutoff (with low-degree
  /// polynomial coefficients), using the derivation property.
  OperatorIdentityReport q_coordinate_check(int degree_cutoff) const;

private:
  struct GeneratorAction {
    bool odd = true;
    bool acts_on_coefficients = false; // anchor gradient on the base ring
    std::vector<Cochain> xi_image;     // size n
    std::vector<Cochain> sym_image;    // size r
  };

  Cochain apply(const GeneratorAction &action, const Cochain &gamma) const;
  Cochain coefficient_gradient(const Polynomial &f) const;
  GeneratorAction q_action() const;

  AlgebroidSpec spec_;
  JacobiatorTensor jac_;
  std::vector<Derivation> frame_anchors_;                    // size n
  std::vector<std::vector<std::vector<Polynomial>>> gamma_;  // [a][B][C]
  GeneratorAction d_action_, delta_action_, jhat_action_, jtilde_action_, lstar_action_;
};

} // namespace algebroid

#endif

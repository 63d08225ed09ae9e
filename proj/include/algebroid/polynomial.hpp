#ifndef ALGEBROID_POLYNOMIAL_HPP
#define ALGEBROID_POLYNOMIAL_HPP

#include "algebroid/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace algebroid {

/// Exponent vector of a monomial; entry i is the power of x_{i+1}.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse multivariate polynomial over Rational in a fixed number of
/// variables x1..xm. Stored in canonical form: no zero coefficients,
/// monomials ordered graded-lexicographically. m = 0 gives the constants.
class Polynomial {
public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, const Rational &constant);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational &c) { return Polynomial(nvars, c); }
  static Polynomial one(int nvars) { return Polynomial(nvars, Rational(1)); }
  /// The variable x_{index+1} (0-based index).
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(int nvars, const Monomial &mono, const Rational &coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the full value when is_constant()).
  Rational constant_value() const;
  int total_degree() const; // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial &mono, const Rational &coeff);

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
  Polynomial scaled(const Rational &c) const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }
  /// Deterministic total order (for use as map keys in reports).
  friend bool operator<(const Polynomial &a, const Polynomial &b);

  /// Partial derivative with respect to x_{index+1}.
  Polynomial derivative(int index) const;

  const std::map<Monomial, Rational, GradedLexLess> &terms() const { return terms_; }

  /// Canonical text form, e.g. "3/2 x1^2 x2 - x2 + 1"; "0" when zero.
  std::string str() const;
  /// Parses the printed syntax ("+"/"-" separated terms, each an optional
  /// rational coefficient followed by factors "xK" or "xK^E").
  static Polynomial parse(const std::string &text, int nvars);

private:
  int nvars_;
  std::map<Monomial, Rational, GradedLexLess> terms_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

/// A k-linear derivation of the polynomial ring, Sum f_i d/dx_i.
class Derivation {
public:
  Derivation() : nvars_(0) {}
  explicit Derivation(int nvars);
  explicit Derivation(std::vector<Polynomial> components);

  static Derivation zero(int nvars) { return Derivation(nvars); }
  /// d/dx_{index+1}.
  static Derivation coordinate(int nvars, int index);

  int nvars() const { return nvars_; }
  const Polynomial &component(int i) const { return components_[i]; }
  const std::vector<Polynomial> &components() const { return components_; }
  bool is_zero() const;

  /// X[f] = Sum_i X_i df/dx_i.
  Polynomial apply(const Polynomial &f) const;

  Derivation operator-() const;
  Derivation &operator+=(const Derivation &o);
  friend Derivation operator+(Derivation a, const Derivation &b) { return a += b; }
  friend Derivation operator-(const Derivation &a, const Derivation &b);
  Derivation scaled(const Polynomial &f) const;

  friend bool operator==(const Derivation &a, const Derivation &b) {
    return a.nvars_ == b.nvars_ && a.components_ == b.components_;
  }

  std::string str() const;

private:
  int nvars_;
  std::vector<Polynomial> components_;
};

/// [X,Y] with components X[Y_i] - Y[X_i]; satisfies [X,Y][f] = X[Y[f]] - Y[X[f]].
Derivation derivation_commutator(const Derivation &x, const Derivation &y);

} // namespace algebroid

#endif

#ifndef ALGEBROID_COHOMOLOGY_HPP
#define ALGEBROID_COHOMOLOGY_HPP

#include "algebroid/cochain.hpp"

#include <string>
#include <vector>

namespace algebroid {

/// Dense matrix over Rational, row-major.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational &at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational &at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);

private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination on an
/// integer rescaling of the rows. Deterministic pivot choice.
int exact_rank(const RationalMatrix &matrix);

/// The differential between two consecutive graded pieces in matrix form:
/// columns indexed by the degree-n monomial basis, rows by degree n+1.
struct ComplexSlice {
  int degree = 0;
  std::vector<CochainKey> basis;       // degree n
  std::vector<CochainKey> image_basis; // degree n+1
  RationalMatrix matrix;
};

/// Monomial basis of the constant-coefficient piece in the given degree,
/// enumerated deterministically (keys ordered; graded by construction).
std::vector<CochainKey> slice_basis(const AlgebroidSpec &spec, int degree);

/// True when the complex restricts to constant coefficients: base_dim = 0,
/// or every structure entry (and the derived connection and Jacobiator
/// tensors) is constant.
bool is_finite_type(const CochainComplex &complex);

/// Assembles the matrix of the total differential on the degree-n piece.
/// Throws std::runtime_error("infinite-dimensional piece ...") when the
/// complex does not restrict to constants.
ComplexSlice assemble_slice(const CochainComplex &complex, int degree);

struct BettiRow {
  int degree = 0;
  long dimension = 0;
  long kernel_dim = 0;
  long incoming_rank = 0;
  long betti = 0;
};

struct BettiTable {
  std::vector<BettiRow> rows;

  std::vector<long> betti_numbers() const;
  /// Aligned human-readable table.
  std::string str() const;
  /// One line per degree: "degree kernel rank betti".
  std::string machine_lines() const;
};

/// Betti numbers of the constant-coefficient complex for degrees
/// 0..max_degree. Verifies d_{n+1} o d_n = 0 on the assembled matrices and
/// throws on violation.
BettiTable betti_table(const CochainComplex &complex, int max_degree);

} // namespace algebroid

#endif

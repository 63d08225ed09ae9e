#include "algebroid/cohomology.hpp"

#include "algebroid/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace algebroid {

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational &q) { return q.is_zero(); });
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix: shape mismatch in product");
  RationalMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero())
        continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero())
          continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

int exact_rank(const RationalMatrix &matrix) {
  const int rows = matrix.rows(), cols = matrix.cols();
  if (rows == 0 || cols == 0)
    return 0;

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              matrix.at(i, j).denominator().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpz_class scale = lcm_den / matrix.at(i, j).denominator();
      a[i][j] = matrix.at(i, j).numerator() * scale;
    }
  }

  // Bareiss: entries stay integral, divisions are exact.
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<CochainKey> slice_basis(const AlgebroidSpec &spec, int degree) {
  std::vector<CochainKey> basis;
  for (int p = degree % 2; p <= std::min(degree, spec.rank); p += 2) {
    int q = (degree - p) / 2;
    if (q > 0 && spec.kernel_rank == 0)
      continue;
    for (const auto &xi : detail::increasing_tuples(spec.rank, p))
      for (const auto &sym : detail::weakly_increasing_tuples(spec.kernel_rank, q))
        basis.push_back(CochainKey{xi, sym});
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool is_finite_type(const CochainComplex &complex) {
  const AlgebroidSpec &spec = complex.spec();
  if (spec.base_dim == 0)
    return true;
  auto constant = [](const Polynomial &p) { return p.is_constant(); };
  for (const auto &row : spec.anchor)
    if (!std::all_of(row.begin(), row.end(), constant))
      return false;
  if (!std::all_of(spec.structure.begin(), spec.structure.end(), constant))
    return false;
  for (const auto &row : spec.kernel_frame)
    if (!std::all_of(row.begin(), row.end(), constant))
      return false;
  for (const auto &row : spec.kernel_projection)
    if (!std::all_of(row.begin(), row.end(), constant))
      return false;
  for (int a = 0; a < spec.rank; ++a)
    for (int B = 0; B < spec.kernel_rank; ++B)
      for (int C = 0; C < spec.kernel_rank; ++C)
        if (!complex.connection_coefficient(C, a, B).is_constant())
          return false;
  for (int a = 0; a < spec.rank; ++a)
    for (int b = a + 1; b < spec.rank; ++b)
      for (int c = b + 1; c < spec.rank; ++c)
        for (int B = 0; B < spec.kernel_rank; ++B)
          if (!complex.jacobiator().component(B, a, b, c).is_constant())
            return false;
  return true;
}

ComplexSlice assemble_slice(const CochainComplex &complex, int degree) {
  if (!is_finite_type(complex))
    throw std::runtime_error(
        "infinite-dimensional piece: structure functions are not constant, no "
        "constant-coefficient restriction applies");
  const AlgebroidSpec &spec = complex.spec();
  ComplexSlice slice;
  slice.degree = degree;
  slice.basis = slice_basis(spec, degree);
  slice.image_basis = slice_basis(spec, degree + 1);
  std::map<CochainKey, int> row_of;
  for (std::size_t i = 0; i < slice.image_basis.size(); ++i)
    row_of.emplace(slice.image_basis[i], static_cast<int>(i));
  slice.matrix = RationalMatrix(static_cast<int>(slice.image_basis.size()),
                                static_cast<int>(slice.basis.size()));
  for (std::size_t col = 0; col < slice.basis.size(); ++col) {
    Cochain image = complex.total_differential(
        Cochain::monomial(spec, slice.basis[col], Polynomial::one(spec.base_dim)));
    for (const auto &[key, coeff] : image.terms()) {
      if (!coeff.is_constant())
        throw std::runtime_error(
            "infinite-dimensional piece: differential leaves the constant subcomplex");
      slice.matrix.at(row_of.at(key), static_cast<int>(col)) = coeff.constant_value();
    }
  }
  return slice;
}

std::vector<long> BettiTable::betti_numbers() const {
  std::vector<long> out;
  out.reserve(rows.size());
  for (const auto &r : rows)
    out.push_back(r.betti);
  return out;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "degree   dim   kernel   incoming-rank   betti\n";
  for (const auto &r : rows) {
    os.width(6);
    os << r.degree;
    os.width(6);
    os << r.dimension;
    os.width(9);
    os << r.kernel_dim;
    os.width(16);
    os << r.incoming_rank;
    os.width(8);
    os << r.betti;
    os << "\n";
  }
  return os.str();
}

std::string BettiTable::machine_lines() const {
  std::ostringstream os;
  for (const auto &r : rows)
    os << r.degree << " " << r.kernel_dim << " " << r.incoming_rank << " " << r.betti << "\n";
  return os.str();
}

BettiTable betti_table(const CochainComplex &complex, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("betti_table: negative degree");
  std::vector<ComplexSlice> slices;
  slices.reserve(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n)
    slices.push_back(assemble_slice(complex, n));

  // d^2 = 0 gate on the assembled matrices.
  for (int n = 0; n + 1 <= max_degree; ++n) {
    RationalMatrix composite = slices[n + 1].matrix * slices[n].matrix;
    if (!composite.is_zero())
      throw std::runtime_error("betti_table: composite differential nonzero between degrees " +
                               std::to_string(n) + " and " + std::to_string(n + 2));
  }

  BettiTable table;
  long prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    long dim = static_cast<long>(slices[n].basis.size());
    long rank = exact_rank(slices[n].matrix);
    BettiRow row;
    row.degree = n;
    row.dimension = dim;
    row.kernel_dim = dim - rank;
    row.incoming_rank = prev_rank;
    row.betti = row.kernel_dim - prev_rank;
    table.rows.push_back(row);
    prev_rank = rank;
  }
  return table;
}

} // namespace algebroid

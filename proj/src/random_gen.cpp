#include "algebroid/random_gen.hpp"

#include <algorithm>

namespace algebroid {

LieTable random_lie_table(int dim, Rng &rng) {
  LieTable t = LieTable::zero(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        t.set_structure(c, a, b, rng.small_rational());
  return t;
}

AlgebroidSpec random_almost_lie_algebra(int dim, Rng &rng) {
  return build_almost_lie_algebra(random_lie_table(dim, rng));
}

Polynomial random_polynomial(int nvars, int max_degree, int max_terms, Rng &rng) {
  Polynomial p(nvars);
  int terms = rng.range(1, std::max(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial mono(nvars, 0u);
    int degree = rng.range(0, max_degree);
    for (int d = 0; d < degree && nvars > 0; ++d)
      mono[rng.range(0, nvars - 1)] += 1;
    p.add_term(mono, rng.small_rational());
  }
  return p;
}

Cochain random_cochain(const AlgebroidSpec &spec, int degree, int max_terms, int coeff_degree,
                       Rng &rng) {
  Cochain c(spec, degree);
  int terms = rng.range(1, std::max(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    // Random split degree = p + 2q with p <= rank; q needs kernel generators.
    std::vector<std::pair<int, int>> splits;
    for (int p = degree % 2; p <= std::min(degree, spec.rank); p += 2) {
      int q = (degree - p) / 2;
      if (q > 0 && spec.kernel_rank == 0)
        continue;
      splits.emplace_back(p, q);
    }
    if (splits.empty())
      return c; // the zero cochain is the only element in this degree
    auto [p, q] = splits[static_cast<std::size_t>(rng.range(0, static_cast<int>(splits.size()) - 1))];
    CochainKey key;
    // p distinct xi indices.
    std::vector<int> pool(spec.rank);
    for (int i = 0; i < spec.rank; ++i)
      pool[i] = i;
    for (int i = 0; i < p; ++i) {
      int pick = rng.range(i, spec.rank - 1);
      std::swap(pool[i], pool[pick]);
    }
    key.xi.assign(pool.begin(), pool.begin() + p);
    std::sort(key.xi.begin(), key.xi.end());
    for (int i = 0; i < q; ++i)
      key.sym.push_back(rng.range(0, spec.kernel_rank - 1));
    std::sort(key.sym.begin(), key.sym.end());
    c.add_term(key, random_polynomial(spec.base_dim, coeff_degree, 2, rng));
  }
  return c;
}

} // namespace algebroid

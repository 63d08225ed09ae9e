#ifndef ALGEBROID_COMBINATORICS_HPP
#define ALGEBROID_COMBINATORICS_HPP

#include <optional>
#include <vector>

namespace algebroid::detail {

/// Merges two strictly increasing index tuples into one, tracking the
/// Koszul sign of the permutation that sorts the concatenation. Returns
/// nullopt when the tuples share an index (odd generator squares to zero).
inline std::optional<std::vector<int>> merge_skew(const std::vector<int> &a,
                                                  const std::vector<int> &b,
                                                  int &sign) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j])
      return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a
      if ((a.size() - i) % 2 != 0)
        sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

/// Sorted merge of weakly increasing tuples (symmetric generators, no sign).
inline std::vector<int> merge_sym(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size())
    out.push_back(a[i] <= b[j] ? a[i++] : b[j++]);
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

/// All strictly increasing k-tuples over {0..limit-1}, lexicographic.
std::vector<std::vector<int>> increasing_tuples(int limit, int k);

/// All weakly increasing k-tuples over {0..limit-1}, lexicographic.
std::vector<std::vector<int>> weakly_increasing_tuples(int limit, int k);

} // namespace algebroid::detail

#endif

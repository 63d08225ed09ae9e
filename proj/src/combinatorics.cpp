#include "algebroid/combinatorics.hpp"

namespace algebroid::detail {

namespace {

void extend_tuples(int limit, int k, bool strict, std::vector<int> &current,
                   std::vector<std::vector<int>> &out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  int start = current.empty() ? 0 : (strict ? current.back() + 1 : current.back());
  for (int v = start; v < limit; ++v) {
    current.push_back(v);
    extend_tuples(limit, k, strict, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> increasing_tuples(int limit, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (k >= 0 && k <= limit)
    extend_tuples(limit, k, true, current, out);
  return out;
}

std::vector<std::vector<int>> weakly_increasing_tuples(int limit, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (limit > 0 && k > 0)
    extend_tuples(limit, k, false, current, out);
  return out;
}

} // namespace algebroid::detail

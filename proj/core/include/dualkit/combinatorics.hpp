#ifndef DUALKIT_COMBINATORICS_HPP
#define DUALKIT_COMBINATORICS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace dualkit {

// All maps {0..n-1} -> {0..k-1}, lexicographic with the last slot fastest.
inline std::vector<std::vector<int>> all_functions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (k <= 0) return out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == k - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline bool is_surjection(const std::vector<int>& f, int k) {
  std::vector<char> hit(k, 0);
  for (int v : f) {
    if (v < 0 || v >= k) return false;
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline std::vector<std::vector<int>> all_surjections(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& f : all_functions(n, k))
    if (is_surjection(f, k)) out.push_back(f);
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(cur);
  while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

}  // namespace dualkit

#endif

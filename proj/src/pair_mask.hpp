#pragma once

// Inversion sets of permutations of 1..m packed into 64-bit masks (m <= 11).

#include <cstdint>
#include <vector>

namespace coxpart::perm::detail {

struct PairIndex {
  int n;
  std::vector<int> bit;
  explicit PairIndex(int n_) : n(n_), bit((n_ + 1) * (n_ + 1), -1) {
    int k = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) bit[a * (n + 1) + b] = k++;
  }
  std::uint64_t mask(int a, int b) const { return std::uint64_t(1) << bit[a * (n + 1) + b]; }
  bool has(std::uint64_t m, int a, int b) const { return m & mask(a, b); }
};

inline std::uint64_t inversion_mask(const PairIndex& ix, const std::vector<int>& w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) m |= ix.mask(w[j], w[i]);
  return m;
}

// transitivity and the interval condition
inline bool is_inversion_mask(const PairIndex& ix, std::uint64_t m) {
  const int n = ix.n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const bool ab = ix.has(m, a, b), bc = ix.has(m, b, c), ac = ix.has(m, a, c);
        if (ab && bc && !ac) return false;
        if (ac && !ab && !bc) return false;
      }
  return true;
}

}  // namespace coxpart::perm::detail

#include "symharm/multiindex.hpp"

#include "symharm/rational.hpp"

#include <array>
#include <mutex>

namespace symharm {

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Inversions: pairs (i in a, j in b) with i > j.
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int j = __builtin_ctz(bb);
    bb = Mask(bb & (bb - 1));
    inv += __builtin_popcount(a >> (j + 1));
  }
  return (inv & 1) ? -1 : 1;
}

int removal_sign(Mask m, int index1) {
  Mask below = Mask(m & (mask_bit(index1) - 1));
  return (__builtin_popcount(below) & 1) ? -1 : 1;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (int i = 1; i <= kMaxDim; ++i)
    if (m & mask_bit(i)) out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<int>& indices1) {
  Mask m = 0;
  for (int i : indices1) m = Mask(m | mask_bit(i));
  return m;
}

std::string mask_to_string(Mask m) {
  if (m == 0) return "1";
  std::string s = "a";
  for (int i : indices_of(m)) s += char('0' + i);
  return s;
}

Basis::Basis(int n) : n_(n), pos_(size_t(1) << n, -1) {
  if (n < 1 || n > kMaxDim) throw ValueError("dimension must be in 1..9");
  by_grade_.resize(size_t(n) + 1);
  // Combinations in lexicographic tuple order per grade.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) c[size_t(i)] = i + 1;
    auto& list = by_grade_[size_t(k)];
    if (k == 0) {
      list.push_back(0);
    } else {
      while (true) {
        list.push_back(mask_of(c));
        int t = k - 1;
        while (t >= 0 && c[size_t(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++c[size_t(t)];
        for (int u = t + 1; u < k; ++u) c[size_t(u)] = c[size_t(u - 1)] + 1;
      }
    }
    for (size_t p = 0; p < list.size(); ++p) pos_[list[p]] = int(p);
  }
}

const std::vector<Mask>& Basis::masks(int k) const {
  if (k < 0 || k > n_) return empty_;
  return by_grade_[size_t(k)];
}

const Basis& Basis::get(int n) {
  static std::array<const Basis*, kMaxDim + 1> cache{};
  static std::mutex mu;
  if (n < 1 || n > kMaxDim) throw ValueError("dimension must be in 1..9");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[size_t(n)]) cache[size_t(n)] = new Basis(n);
  return *cache[size_t(n)];
}

}  // namespace symharm

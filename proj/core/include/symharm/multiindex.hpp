#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symharm {

// A strictly increasing multi-index over generators 1..n, stored as a bitmask
// (bit i-1 set <=> generator i present). n <= 9 keeps single-digit rendering.
using Mask = std::uint16_t;

constexpr int kMaxDim = 9;

inline int grade_of(Mask m) {
  return __builtin_popcount(m);
}

inline Mask mask_bit(int index1) {  // index1 in 1..n
  return Mask(1u << (index1 - 1));
}

// Sign of concatenating the ascending tuples of a and b into one ascending
// tuple: 0 if they share an index, otherwise the parity of the merge.
int merge_sign(Mask a, Mask b);

// Parity sign of removing generator `index1` from `m`: (-1)^(number of
// generators in m below index1). Requires the bit to be present.
int removal_sign(Mask m, int index1);

std::vector<int> indices_of(Mask m);
Mask mask_of(const std::vector<int>& indices1);

// "a136" style rendering; grade 0 renders as "1".
std::string mask_to_string(Mask m);

// Precomputed bases of Lambda^k for a fixed dimension n: per grade, the list
// of masks in lexicographic tuple order, plus position lookups.
class Basis {
 public:
  explicit Basis(int n);

  int n() const { return n_; }
  int dim(int k) const {
    return (k < 0 || k > n_) ? 0 : int(by_grade_[size_t(k)].size());
  }
  const std::vector<Mask>& masks(int k) const;
  // Position of m within its grade list; -1 if grade out of range.
  int position(Mask m) const { return pos_[m]; }

  static const Basis& get(int n);  // shared immutable instances

 private:
  int n_;
  std::vector<std::vector<Mask>> by_grade_;
  std::vector<int> pos_;
  std::vector<Mask> empty_;
};

}  // namespace symharm

#include "symharm/exact_linalg.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <type_traits>

namespace symharm {

namespace {

using i128 = __int128;

inline i128 mul_chk(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected{};
  return r;
}

inline i128 sub_chk(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowDetected{};
  return r;
}

inline i128 add_chk(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowDetected{};
  return r;
}

inline i64 narrow_chk(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw OverflowDetected{};
  return i64(v);
}

inline i64 narrow_chk_big(const BigInt& v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowDetected{};
  return i64(v);
}

template <class W>
W t_mul(const W& a, const W& b) {
  if constexpr (std::is_same_v<W, BigInt>)
    return a * b;
  else
    return mul_chk(a, b);
}

template <class W>
W t_sub(const W& a, const W& b) {
  if constexpr (std::is_same_v<W, BigInt>)
    return a - b;
  else
    return sub_chk(a, b);
}

template <class W>
W exact_div(const W& a, const W& b) {
  // Bareiss divisions are exact by construction.
  if constexpr (!std::is_same_v<W, BigInt>) {
    if (b == W(-1)) {
      W r;
      if (__builtin_sub_overflow(W(0), a, &r)) throw OverflowDetected{};
      return r;
    }
  }
  return a / b;
}

struct Pivot {
  int row, col;
};

// Fraction-free Gauss-Jordan (Bareiss/Montante one-step formula applied to
// every row). On exit all pivot entries equal the last pivot value d, pivot
// columns are zero elsewhere, and kernel vectors read off directly.
template <class W>
struct Elim {
  int rows, cols;
  std::vector<W> m;
  std::vector<Pivot> pivots;
  W d;

  Elim(const IntMat& in, bool jordan) : rows(in.rows), cols(in.cols), d(1) {
    m.resize(size_t(rows) * size_t(cols));
    for (size_t i = 0; i < m.size(); ++i) m[i] = W(in.a[i]);
    std::vector<bool> used(size_t(rows), false);
    W prev(1);
    for (int col = 0; col < cols; ++col) {
      int prow = -1;
      for (int r = 0; r < rows; ++r)
        if (!used[size_t(r)] && at(r, col) != 0) {
          prow = r;
          break;
        }
      if (prow < 0) continue;
      const W piv = at(prow, col);
      for (int r = 0; r < rows; ++r) {
        if (r == prow) continue;
        if (!jordan && used[size_t(r)]) continue;  // forward mode: keep old pivot rows
        const W f = at(r, col);
        if (f == 0 && piv == prev) continue;  // row would be unchanged
        for (int j = 0; j < cols; ++j) {
          W v = t_sub(t_mul(piv, at(r, j)), t_mul(f, at(prow, j)));
          at(r, j) = exact_div(v, prev);
        }
      }
      prev = piv;
      used[size_t(prow)] = true;
      pivots.push_back({prow, col});
    }
    d = prev;
  }

  W& at(int i, int j) { return m[size_t(i) * size_t(cols) + size_t(j)]; }
};

template <class W>
int rank_impl(const IntMat& in) {
  return int(Elim<W>(in, /*jordan=*/false).pivots.size());
}

inline i64 gcd64(i64 a, i64 b) {
  unsigned long long x = a < 0 ? 0ull - (unsigned long long)a : (unsigned long long)a;
  unsigned long long y = b < 0 ? 0ull - (unsigned long long)b : (unsigned long long)b;
  while (y) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return i64(x);
}

void canonicalize_row(std::vector<i64>& v) {
  i64 g = 0;
  for (i64 x : v) g = gcd64(g, x);
  if (g == 0) return;
  int lead_sign = 0;
  for (i64 x : v)
    if (x != 0) {
      lead_sign = x > 0 ? 1 : -1;
      break;
    }
  if (lead_sign < 0) g = -g;
  for (i64& x : v) x /= g;
}

template <class W>
IntMat kernel_impl(const IntMat& in) {
  Elim<W> e(in, /*jordan=*/true);
  std::vector<bool> is_pivot_col(size_t(in.cols), false);
  for (const Pivot& p : e.pivots) is_pivot_col[size_t(p.col)] = true;
  int null_dim = in.cols - int(e.pivots.size());
  IntMat k(null_dim, in.cols);
  int out = 0;
  for (int f = 0; f < in.cols; ++f) {
    if (is_pivot_col[size_t(f)]) continue;
    std::vector<i64> v(size_t(in.cols), 0);
    if constexpr (std::is_same_v<W, BigInt>) {
      v[size_t(f)] = narrow_chk_big(e.d);
      for (const Pivot& p : e.pivots)
        v[size_t(p.col)] = narrow_chk_big(BigInt(-e.at(p.row, f)));
    } else {
      v[size_t(f)] = narrow_chk(e.d);
      for (const Pivot& p : e.pivots) v[size_t(p.col)] = narrow_chk(-e.at(p.row, f));
    }
    canonicalize_row(v);
    for (int j = 0; j < in.cols; ++j) k.at(out, j) = v[size_t(j)];
    ++out;
  }
  return k;
}

}  // namespace

int int_rank(const IntMat& m) {
  try {
    return rank_impl<i128>(m);
  } catch (const OverflowDetected&) {
    return rank_impl<BigInt>(m);
  }
}

IntMat int_kernel_rows(const IntMat& m) {
  try {
    return kernel_impl<i128>(m);
  } catch (const OverflowDetected&) {
    // Entries here are minors of m; retry with big integers, and reduce
    // before narrowing. A second OverflowDetected propagates to the caller.
    return kernel_impl<BigInt>(m);
  }
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw ValueError("int_mul shape mismatch");
  IntMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      i64 x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        i64 y = b.at(k, j);
        if (y == 0) continue;
        i128 acc = add_chk(i128(r.at(i, j)), mul_chk(i128(x), i128(y)));
        r.at(i, j) = narrow_chk(acc);
      }
    }
  return r;
}

IntMat clear_denominators(const RatMatrix& m, BigInt* scale_out) {
  BigInt d(1);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      BigInt q = denominator_of(m.at(i, j));
      d = boost::multiprecision::lcm(d, q);
    }
  IntMat r(int(m.rows()), int(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      BigInt v = numerator_of(m.at(i, j)) * (d / denominator_of(m.at(i, j)));
      r.at(int(i), int(j)) = narrow_chk_big(v);
    }
  if (scale_out) *scale_out = d;
  return r;
}

RatMatrix to_rational(const IntMat& m) {
  RatMatrix r(size_t(m.rows), size_t(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(size_t(i), size_t(j)) = m.at(i, j);
  return r;
}

}  // namespace symharm

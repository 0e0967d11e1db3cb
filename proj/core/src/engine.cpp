#include "symharm/engine.hpp"

namespace symharm {

namespace {

using i128 = __int128;

inline i128 mul_chk(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected{};
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

// out = sum_i w[i] * mats[i]; all matrices share a shape.
IntMat assemble(const std::vector<IntMat>& mats, const std::vector<i64>& w) {
  IntMat out(mats.empty() ? 0 : mats[0].rows, mats.empty() ? 0 : mats[0].cols);
  for (size_t i = 0; i < mats.size(); ++i) {
    if (w[i] == 0) continue;
    for (size_t p = 0; p < out.a.size(); ++p)
      out.a[p] = narrow_chk(add_chk(i128(out.a[p]), mul_chk(i128(w[i]), i128(mats[i].a[p]))));
  }
  return out;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols) throw ValueError("vstack mismatch");
  IntMat r(a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), r.a.begin());
  std::copy(b.a.begin(), b.a.end(), r.a.begin() + a.a.size());
  return r;
}

}  // namespace

RowEngine::RowEngine(const LieAlgebraSpec& spec)
    : spec_(spec), H_(spec), cone_(symplectic_cone(H_.differential())) {
  const int n = spec_.n();
  if (n != 6) throw ValueError("engine supports six-dimensional algebras");
  for (int k = 0; k <= 6; ++k) b_[size_t(k)] = H_.betti(k);

  // 6*pf has integer coefficients over the integer Z^2 basis.
  for (const auto& [e, c] : cone_.pfaffian_cubic.terms()) {
    std::vector<int> vars;
    for (size_t v = 0; v < e.size(); ++v)
      for (int rep = 0; rep < e[v]; ++rep) vars.push_back(int(v));
    Scalar c6 = c * 6;
    if (denominator_of(c6) != 1) throw Error("pfaffian cubic not integral");
    BigInt num = numerator_of(c6);
    if (num > INT64_MAX || num < INT64_MIN) throw Error("pfaffian coefficient too large");
    cubic6_.terms.push_back({vars[0], vars[1], vars[2], i64(num)});
  }

  // Class-coordinate map: reduce . (Z^2 inclusion), denominators cleared.
  const Basis& basis = Basis::get(n);
  RatMatrix z2(size_t(basis.dim(2)), size_t(cone_.dim()));
  for (int j = 0; j < cone_.dim(); ++j)
    z2.set_column(size_t(j), form_to_vector(cone_.z2_basis[size_t(j)]));
  cls_ = clear_denominators(H_.reduction_matrix(2) * z2);

  // Cup pencils per H^2 basis class, one common denominator per degree.
  for (int k = 1; k <= 4; ++k) {
    RatMatrix all;
    std::vector<RatMatrix> raw;
    for (int i = 0; i < b_[2]; ++i) {
      RatMatrix m = cup_matrix(H_, H_.representatives(2)[size_t(i)], k, 1);
      raw.push_back(m);
      all = (i == 0) ? m : all.hstack(m);
    }
    IntMat alli = b_[2] > 0 ? clear_denominators(all) : IntMat(0, 0);
    auto& bucket = pencil_[size_t(k)];
    for (int i = 0; i < b_[2]; ++i) {
      IntMat piece(alli.rows, int(raw[size_t(i)].cols()));
      for (int r = 0; r < piece.rows; ++r)
        for (int c = 0; c < piece.cols; ++c)
          piece.at(r, c) = alli.at(r, i * piece.cols + c);
      bucket.push_back(std::move(piece));
    }
  }
}

bool RowEngine::pf_nonzero(const std::vector<i64>& coords) const {
  try {
    i128 acc = 0;
    for (const auto& t : cubic6_.terms)
      acc = add_chk(acc, mul_chk(mul_chk(mul_chk(i128(t.c), i128(coords[size_t(t.i)])),
                                         i128(coords[size_t(t.j)])),
                                 i128(coords[size_t(t.k)])));
    return acc != 0;
  } catch (const OverflowDetected&) {
    std::vector<Scalar> x(coords.begin(), coords.end());
    return cone_.pf_at(x) != 0;
  }
}

Scalar RowEngine::pf_value(const std::vector<Scalar>& coords) const {
  return cone_.pf_at(coords);
}

Form RowEngine::form_at(const std::vector<i64>& coords) const {
  std::vector<Scalar> x(coords.begin(), coords.end());
  return cone_.form_at(x);
}

std::vector<i64> RowEngine::scaled_class_coords(const std::vector<i64>& coords) const {
  if (int(coords.size()) != cone_.dim()) throw ValueError("coordinate arity mismatch");
  std::vector<i64> cls(size_t(cls_.rows), 0);
  for (int i = 0; i < cls_.rows; ++i) {
    i128 acc = 0;
    for (int j = 0; j < cls_.cols; ++j)
      acc = add_chk(acc, mul_chk(i128(cls_.at(i, j)), i128(coords[size_t(j)])));
    cls[size_t(i)] = narrow_chk(acc);
  }
  return cls;
}

RowEngine::FullEval RowEngine::eval_int(const std::vector<i64>& coords) const {
  FullEval out;
  std::vector<i64> cls = scaled_class_coords(coords);

  IntMat l1 = assemble(pencil_[1], cls);  // H^1 -> H^3
  IntMat l2 = assemble(pencil_[2], cls);  // H^2 -> H^4
  IntMat l3 = assemble(pencil_[3], cls);  // H^3 -> H^5
  IntMat l4 = assemble(pencil_[4], cls);  // H^4 -> H^6

  out.h[0] = 1;
  out.h[1] = b_[1];  // primitive: the cup power lands above the top degree

  // h5 = rank(L^2: H^1 -> H^5).
  IntMat l51 = int_mul(l3, l1);
  out.h[5] = int_rank(l51);

  // h3 = dim(ker(L: H^3 -> H^5) + L(H^1)).
  IntMat k3 = int_kernel_rows(l3);  // rows span the kernel
  out.ker_l35 = k3.rows;
  out.h[3] = int_rank(vstack(k3, transpose(l1)));

  // H^2_hr = ker(L^2: H^2 -> H^6) + <[omega]>.
  IntMat l62 = int_mul(l4, l2);
  IntMat u = int_kernel_rows(l62);
  IntMat clsrow(1, int(cls.size()));
  for (size_t j = 0; j < cls.size(); ++j) clsrow.at(0, int(j)) = cls[j];
  IntMat h2rows = vstack(u, clsrow);
  out.h[2] = int_rank(h2rows);
  // h4 = dim L(H^2_hr).
  out.h[4] = int_rank(int_mul(l2, transpose(h2rows)));

  // h6 = 1 iff [omega]^3 != 0.
  IntMat v3 = int_mul(l62, transpose(clsrow));
  bool nonzero = false;
  for (i64 x : v3.a) nonzero = nonzero || x != 0;
  out.h[6] = nonzero ? 1 : 0;
  return out;
}

std::optional<RowEngine::FullEval> RowEngine::eval(const std::vector<i64>& coords) const {
  if (!pf_nonzero(coords)) return std::nullopt;
  try {
    return eval_int(coords);
  } catch (const OverflowDetected&) {
    return eval_reference(form_at(coords));
  }
}

RowEngine::FullEval RowEngine::eval_reference(const Form& omega) const {
  HarmonicProfile p = harmonic_subspaces(H_, omega);
  FullEval out;
  for (int k = 0; k <= 6; ++k) out.h[size_t(k)] = p.h[size_t(k)];
  RatMatrix l35 = cup_matrix(H_, omega, 3, 1);
  out.ker_l35 = int(l35.cols() - l35.rank());
  return out;
}

bool RowEngine::reduction_kills_exact_2forms() const {
  RatMatrix prod = H_.reduction_matrix(2) * H_.differential().matrix(1);
  return prod.is_zero();
}

}  // namespace symharm

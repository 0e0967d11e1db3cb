#include "symharm/harmonic.hpp"

namespace symharm {

namespace {

// Canonical basis (columns) of the column space of m.
RatMatrix column_space(const RatMatrix& m) {
  return m.transposed().row_space_basis().transposed();
}

// L^r as a matrix H^k -> H^{k+2r}; degrees above n are zero-dimensional.
RatMatrix cup_power(const CohomologySpace& H, const Form& omega, int k, int r) {
  return cup_matrix(H, omega, k, r);
}

}  // namespace

RatMatrix primitive_basis(const CohomologySpace& H, const Form& omega, int k) {
  const int m = H.n() / 2;
  if (k < 0 || k > m) throw ValueError("primitive index out of range");
  return cup_power(H, omega, m - k, k + 1).kernel();
}

HarmonicProfile harmonic_subspaces(const CohomologySpace& H, const Form& omega) {
  const int n = H.n();
  if (n % 2 != 0) throw ValueError("harmonic profile needs even dimension");
  const int m = n / 2;
  if (pfaffian_coeff(omega) == 0)
    throw ValueError("harmonic profile of a degenerate form");

  HarmonicProfile out;
  out.omega_class = H.reduce(omega);  // also rejects non-closed forms
  out.h.assign(size_t(n) + 1, 0);
  out.subspaces.assign(size_t(n) + 1, RatMatrix());

  // Degrees <= m by the recursion.
  for (int d = 0; d <= m; ++d) {
    RatMatrix p = cup_power(H, omega, d, m - d + 1).kernel();
    RatMatrix basis = p;
    if (d >= 2 && out.subspaces[size_t(d - 2)].cols() > 0) {
      RatMatrix lifted = cup_power(H, omega, d - 2, 1) * out.subspaces[size_t(d - 2)];
      basis = basis.hstack(lifted);
    }
    out.subspaces[size_t(d)] = column_space(basis);
    out.h[size_t(d)] = int(out.subspaces[size_t(d)].cols());
  }
  // Degrees > m as images of the harmonic part below.
  for (int k = 1; k <= m; ++k) {
    RatMatrix image =
        cup_power(H, omega, m - k, k) * out.subspaces[size_t(m - k)];
    out.subspaces[size_t(m + k)] = column_space(image);
    out.h[size_t(m + k)] = int(out.subspaces[size_t(m + k)].cols());
  }
  return out;
}

int h3_via_kernel(const CohomologySpace& H, const Form& omega) {
  if (H.n() != 6) throw ValueError("kernel shortcut is specific to dimension 6");
  if (pfaffian_coeff(omega) == 0) throw ValueError("degenerate form");
  RatMatrix l35 = cup_matrix(H, omega, 3, 1);
  int ker = int(l35.cols() - l35.rank());
  RatMatrix l15 = cup_matrix(H, omega, 1, 2);
  int h5 = int(l15.rank());
  return h5 + ker;
}

int chain_level_h(const CohomologySpace& H, const Form& omega, int k) {
  const CEDifferential& d = H.differential();
  OperatorAlgebra ops(d, omega);
  const int n = H.n();
  if (k < 0 || k > n) throw ValueError("degree out of range");

  // Closed and coclosed: kernel of d_k stacked over delta_k.
  RatMatrix stacked = d.matrix(k).vstack(ops.delta(k));
  RatMatrix harmonic = stacked.kernel();  // columns
  const RatMatrix& exact = H.exact_basis(k);

  // dim(S / (S cap E)) = rank([S | E]) - rank(E).
  size_t joint = harmonic.hstack(exact).rank();
  return int(joint - exact.rank());
}

YamadaReport yamada_check(const LieAlgebraSpec& spec, const CohomologySpace& H,
                          const HarmonicProfile& profile) {
  YamadaReport rep;
  LowerCentralSeries lcs = lower_central_series(spec);
  const int n = spec.n();
  const int m = n / 2;
  rep.h1 = profile.h[1];
  rep.h_top_minus_1 = profile.h[size_t(n - 1)];
  if (lcs.step_length < 2) return rep;  // vacuous below step 2
  rep.applicable = true;
  rep.r = lcs.step_length - 1;
  rep.dim_g_r = lcs.dims[size_t(rep.r)];
  rep.inequality_ok = rep.h1 - rep.h_top_minus_1 >= rep.dim_g_r;
  if (lcs.step_length == 2) {
    int dim_derived = lcs.dims[1];
    rep.step2_equality_ok = rep.h1 - rep.h_top_minus_1 == dim_derived;
    rep.step2_formula_ok = rep.h_top_minus_1 == 2 * (H.betti(1) - m);
  }
  return rep;
}

}  // namespace symharm

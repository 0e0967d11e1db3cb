#pragma once

#include "symharm/symplectic.hpp"

#include <array>

namespace symharm {

// Symplectically harmonic cohomology of one symplectic class.
struct HarmonicProfile {
  std::vector<Scalar> omega_class;   // coordinates of [omega] in H^2
  std::vector<int> h;                // h_0 .. h_{2m}
  std::vector<RatMatrix> subspaces;  // per degree: columns span H^k_hr in H^k coords
};

// P^{m-k} = ker(L^{k+1}: H^{m-k} -> H^{m+k+2}); columns span the kernel.
RatMatrix primitive_basis(const CohomologySpace& H, const Form& omega, int k);

// The harmonic subspaces, degree <= m by the recursion
// H^{m-k}_hr = P^{m-k} + L(H^{m-k-2}_hr), degree > m as the image of L^k
// restricted to H^{m-k}_hr. Requires omega closed and nondegenerate.
HarmonicProfile harmonic_subspaces(const CohomologySpace& H, const Form& omega);

// h_3 = h_5 + dim ker(L: H^3 -> H^5); six-dimensional shortcut.
int h3_via_kernel(const CohomologySpace& H, const Form& omega);

// Chain-level dimension: closed and coclosed invariant k-forms modulo their
// intersection with the exact invariant forms.
int chain_level_h(const CohomologySpace& H, const Form& omega, int k);

struct YamadaReport {
  bool applicable = false;  // step length >= 2
  int r = 0;                // step length - 1
  int dim_g_r = 0;
  int h1 = 0, h_top_minus_1 = 0;
  bool inequality_ok = true;        // h1 - h_{2m-1} >= dim g^r
  bool step2_equality_ok = true;    // step 2 only: h1 - h_{2m-1} = dim [g,g]
  bool step2_formula_ok = true;     // step 2 only: h_{2m-1} = 2(b1 - m)
};

YamadaReport yamada_check(const LieAlgebraSpec& spec, const CohomologySpace& H,
                          const HarmonicProfile& profile);

}  // namespace symharm

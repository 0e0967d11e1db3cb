#pragma once

#include "symharm/exact_linalg.hpp"
#include "symharm/harmonic.hpp"

#include <array>
#include <optional>

namespace symharm {

// Per-algebra evaluator for harmonic numbers over the symplectic cone.
//
// Cup products by a class are linear in its H^2 coordinates, so the four
// Lefschetz matrices H^k -> H^{k+2} are assembled from precomputed pencils
// with denominators cleared. Per-sample work then runs in 128-bit
// fraction-free elimination; any overflow falls back to arbitrary precision
// and, failing that, to the generic rational path. Results are exact on
// every path.
class RowEngine {
 public:
  explicit RowEngine(const LieAlgebraSpec& spec);

  const LieAlgebraSpec& spec() const { return spec_; }
  const CohomologySpace& cohomology() const { return H_; }
  const SymplecticCone& cone() const { return cone_; }
  int z2_dim() const { return cone_.dim(); }
  int betti(int k) const { return H_.betti(k); }

  struct FullEval {
    std::array<int, 7> h{};  // h_0..h_6
    int ker_l35 = 0;         // dim ker(L: H^3 -> H^5)
  };

  // Integer coordinates over the cone basis; nullopt when pf = 0.
  std::optional<FullEval> eval(const std::vector<i64>& coords) const;

  bool pf_nonzero(const std::vector<i64>& coords) const;
  Scalar pf_value(const std::vector<Scalar>& coords) const;

  Form form_at(const std::vector<Scalar>& coords) const {
    return cone_.form_at(coords);
  }
  Form form_at(const std::vector<i64>& coords) const;

  // Generic-path reference evaluation (independent of the integer path).
  FullEval eval_reference(const Form& omega) const;

  // Holds by exactness of the reduction: exact 2-forms have zero class
  // coordinates. Proved once per algebra by an exact matrix product.
  bool reduction_kills_exact_2forms() const;

  // Class coordinates (integer-scaled) of a sample; the harmonic numbers
  // depend on the sample only through this vector.
  std::vector<i64> scaled_class_coords(const std::vector<i64>& coords) const;

 private:
  struct Cubic6 {  // 6 * pf, integer coefficients
    struct Term {
      int i, j, k;
      i64 c;
    };
    std::vector<Term> terms;
  };

  FullEval eval_int(const std::vector<i64>& coords) const;

  LieAlgebraSpec spec_;
  CohomologySpace H_;
  SymplecticCone cone_;
  Cubic6 cubic6_;
  IntMat cls_;                              // b2 x N, scaled integer class map
  std::array<std::vector<IntMat>, 5> pencil_;  // pencil_[k][i]: H^k -> H^{k+2}
  std::array<int, 7> b_{};
};

}  // namespace symharm

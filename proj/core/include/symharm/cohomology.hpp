#pragma once

#include "symharm/liespec.hpp"

#include <memory>
#include <vector>

namespace symharm {

// Chevalley-Eilenberg cohomology with a deterministic homogeneous basis per
// degree and an exact reduction map (closed form -> coordinates).
//
// Representatives are picked by reduced-echelon pivoting over the
// lexicographic multi-index coordinates, so bases depend only on the
// structure constants.
class CohomologySpace {
 public:
  explicit CohomologySpace(const LieAlgebraSpec& spec);

  int n() const { return n_; }
  const LieAlgebraSpec& spec() const { return spec_; }
  const CEDifferential& differential() const { return d_; }

  int betti(int k) const;
  const std::vector<Form>& representatives(int k) const;

  // Coordinates of [a] in the degree-k basis; throws ValueError if a is not
  // closed. reduce(representative_i) is the i-th unit vector and exact forms
  // reduce to zero.
  std::vector<Scalar> reduce(const Form& a) const;

  // Matrix R with R*x = reduce(x) for every closed x of degree k (its values
  // on non-closed coordinates are not meaningful).
  const RatMatrix& reduction_matrix(int k) const;

  // Columns span the exact forms of degree k.
  const RatMatrix& exact_basis(int k) const;

 private:
  struct Degree {
    std::vector<Form> reps;
    RatMatrix rep_cols;     // dim Lambda^k x b_k
    RatMatrix image_cols;   // dim Lambda^k x dim(im d_{k-1})
    std::unique_ptr<LinearSolver> solver;
    RatMatrix reduction;    // b_k x dim Lambda^k
  };

  int n_;
  LieAlgebraSpec spec_;
  CEDifferential d_;
  std::vector<Degree> deg_;
};

// True iff the Euler characteristic vanishes and, when n = 6, the identity
// b3 = 2(b2 - b1 + 1) holds.
bool euler_check(const CohomologySpace& H);

// Matrix of x -> x ^ [c]^r from H^k to H^{k+2r}; c must be closed. The
// output depends only on the class of c.
RatMatrix cup_matrix(const CohomologySpace& H, const Form& c, int k, int r);

}  // namespace symharm

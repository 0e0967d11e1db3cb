#pragma once

#include "symharm/cohomology.hpp"
#include "symharm/poly.hpp"

#include <optional>
#include <vector>

namespace symharm {

// Coefficient of a_1^...^a_n in omega^m / m! (n = 2m). Nonzero exactly when
// omega is nondegenerate; equals the Pfaffian of the matrix [omega(e_i,e_j)].
Scalar pfaffian_coeff(const Form& omega);

// The bivector Pi dual to omega, normalized so that contraction with Pi
// equals *L* (checked against the dimension-2 anchors). Its coefficient
// matrix is minus the inverse of the flat-map matrix.
Multivector dual_bivector(const Form& omega);

// A validated symplectic form on a Lie algebra with n = 2m.
struct SymplecticForm {
  Form omega;
  int m;
  Scalar pf;
};

SymplecticForm make_symplectic(const CEDifferential& d, const Form& omega);

// Dense operator tables for one symplectic form: the symplectic star, the
// Lefschetz operator L (wedge with omega), its dual computed two independent
// ways, the grading operator A, and the codifferential delta.
//
// Conventions: the flat map is mu(v) = omega(. , v); the star is
// *a = i(mu_k^{-1} a) omega^m/m!; Pi = mu_2^{-1}(omega). With these choices
// the dimension-2 anchors hold (*a = -a on 1-forms, *omega = 1, *1 = omega),
// ** = id, L* := i(Pi) = *L*, and [L*,L] = A with A = sum (m-k) pi_k.
class OperatorAlgebra {
 public:
  OperatorAlgebra(const CEDifferential& d, const Form& omega);

  int n() const { return n_; }
  int m() const { return n_ / 2; }
  const Form& omega() const { return omega_; }
  const Scalar& pf() const { return pf_; }
  const Multivector& bivector() const { return pi_; }

  // Matrices are defined for 0 <= k <= n+2 so compositions that step past
  // the top grade stay well-shaped (the extra slots are empty).
  // Lambda^k -> Lambda^{2m-k}.
  const RatMatrix& star(int k) const { return slot(star_, k); }
  // Lambda^k -> Lambda^{k+2}.
  const RatMatrix& lef(int k) const { return slot(lef_, k); }
  // Lambda^k -> Lambda^{k-2}, contraction with Pi.
  const RatMatrix& lef_dual(int k) const { return slot(lef_dual_, k); }
  // Same operator computed through the star: *L*.
  RatMatrix lef_dual_via_star(int k) const;
  // Lambda^k -> Lambda^{k-1}: delta = (-1)^{k+1} * d *.
  const RatMatrix& delta(int k) const { return slot(delta_, k); }
  const RatMatrix& dmat(int k) const { return d_->matrix(k); }

  Form apply(const RatMatrix& m, const Form& a, int out_grade) const;

 private:
  const RatMatrix& slot(const std::vector<RatMatrix>& v, int k) const {
    if (k < 0 || size_t(k) >= v.size())
      throw ValueError("operator grade out of range");
    return v[size_t(k)];
  }

  const CEDifferential* d_;
  int n_;
  Form omega_;
  Scalar pf_;
  Multivector pi_;
  std::vector<RatMatrix> star_, lef_, lef_dual_, delta_;
};

// Free-standing operator applications (convenience wrappers; they rebuild
// the small flat-map context per call).
Form star(const Form& omega, const Form& a);
Form lefschetz(const Form& omega, const Form& a);
Form lefschetz_dual(const Form& omega, const Form& a);   // i(Pi) a
MixedForm operator_grading(const MixedForm& a);          // sum (m-k) pi_k
Form delta(const CEDifferential& d, const Form& omega, const Form& a);

// The pairing on k-forms induced by Pi, normalized so that
// b ^ (*a) = pairing(b, a) * omega^m/m! for all k-forms a, b.
Scalar bivector_pairing(const Multivector& pi, const Form& b, const Form& a);

// Closed invariant 2-forms coordinatized by a deterministic integer basis of
// Z^2, together with the Pfaffian as a cubic in those coordinates. The
// symplectic forms are exactly the nonvanishing locus of the cubic.
struct SymplecticCone {
  std::vector<Form> z2_basis;
  MultiPoly pfaffian_cubic;   // pf(sum c_i z_i) as a polynomial in c

  int dim() const { return int(z2_basis.size()); }
  Form form_at(const std::vector<Scalar>& coords) const;
  Scalar pf_at(const std::vector<Scalar>& coords) const {
    return pfaffian_cubic.eval(coords);
  }
};

SymplecticCone symplectic_cone(const CEDifferential& d);

// Pfaffian cubic over an arbitrary list of closed 2-forms (used to express
// cones in alternative spanning sets).
MultiPoly pfaffian_cubic_over(const std::vector<Form>& basis);

struct ExistenceResult {
  bool exists;
  std::vector<Scalar> witness;  // coordinates over the cone basis when exists
};

// Symbolic decision: "no" means the Pfaffian cubic is identically zero,
// which is a proof; "yes" returns a small integer witness.
ExistenceResult symplectic_existence(const SymplecticCone& cone);

// dim Z^2(Lambda g*); requires a symplectic structure to exist.
int moduli_dimension(const SymplecticCone& cone);

}  // namespace symharm

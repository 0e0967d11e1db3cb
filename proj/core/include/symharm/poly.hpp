#pragma once

#include "symharm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace symharm {

// Univariate polynomial with exact rational coefficients, ascending by
// degree; normalized so the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);

  static UniPoly zero() { return UniPoly(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar eval(const Scalar& x) const;
  UniPoly derivative() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Scalar& s) const;

  // Euclidean remainder.
  UniPoly rem(const UniPoly& divisor) const;
  static UniPoly gcd(UniPoly a, UniPoly b);
  UniPoly squarefree_part() const;  // p / gcd(p, p')

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Scalar> c_;
  void normalize();
};

// The Sturm chain of the squarefree part of p.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots of p in (a, b]; requires p(a) != 0.
int sturm_root_count(const UniPoly& p, const Scalar& a, const Scalar& b);

// True iff p has no real root in the closed interval [a, b]. Endpoints are
// evaluated exactly; the zero polynomial is rejected.
bool sturm_nonvanishing(const UniPoly& p, const Scalar& a, const Scalar& b);

// Sparse multivariate polynomial over the rationals; monomial keys are
// exponent vectors. Small by construction (Pfaffian cubics have at most a
// few hundred terms).
class MultiPoly {
 public:
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const Scalar& c);
  Scalar eval(const std::vector<Scalar>& x) const;

  // Rendered with the given variable names, e.g. "A*E^2 + B*D*E".
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  int nvars_;
  std::map<std::vector<int>, Scalar> terms_;
};

}  // namespace symharm

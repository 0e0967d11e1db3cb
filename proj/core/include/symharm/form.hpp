#pragma once

#include "symharm/multiindex.hpp"
#include "symharm/rational.hpp"

#include <map>
#include <string>

namespace symharm {

namespace detail {

// Shared sparse storage for homogeneous elements of Lambda^k(V*) (forms) and
// Lambda^k(V) (multivectors). Zero coefficients are never stored.
class GradedBase {
 public:
  GradedBase(int n, int grade) : n_(n), grade_(grade) {}

  int n() const { return n_; }
  int grade() const { return grade_; }
  bool is_zero() const { return coeff_.empty(); }
  const std::map<Mask, Scalar>& terms() const { return coeff_; }

  Scalar coefficient(Mask m) const {
    auto it = coeff_.find(m);
    return it == coeff_.end() ? Scalar(0) : it->second;
  }

  void add_term(Mask m, const Scalar& c);

  bool operator==(const GradedBase& o) const {
    return n_ == o.n_ && grade_ == o.grade_ && coeff_ == o.coeff_;
  }

 protected:
  int n_;
  int grade_;
  std::map<Mask, Scalar> coeff_;
};

}  // namespace detail

template <bool Dual>
class Graded : public detail::GradedBase {
 public:
  using detail::GradedBase::GradedBase;

  static Graded basis_element(int n, Mask m, Scalar c = Scalar(1)) {
    Graded g(n, grade_of(m));
    g.add_term(m, c);
    return g;
  }

  static Graded zero(int n, int grade) { return Graded(n, grade); }

  Graded operator+(const Graded& o) const {
    require_same_shape(o);
    Graded r = *this;
    for (const auto& [m, c] : o.coeff_) r.add_term(m, c);
    return r;
  }
  Graded operator-(const Graded& o) const {
    require_same_shape(o);
    Graded r = *this;
    for (const auto& [m, c] : o.coeff_) r.add_term(m, -c);
    return r;
  }
  Graded operator-() const { return *this * Scalar(-1); }
  Graded operator*(const Scalar& s) const {
    Graded r(n_, grade_);
    if (s != 0)
      for (const auto& [m, c] : coeff_) r.coeff_.emplace(m, c * s);
    return r;
  }

 private:
  void require_same_shape(const Graded& o) const {
    if (n_ != o.n_ || grade_ != o.grade_)
      throw ValueError("graded elements live in different spaces");
  }
};

// Elements of Lambda^k(V*); coefficients over the ascending multi-index basis.
using Form = Graded<true>;
// Elements of Lambda^k(V).
using Multivector = Graded<false>;

// Exterior product. The grade of the result is grade(a)+grade(b); if that
// exceeds n the result is an (empty) zero element of that grade.
template <bool Dual>
Graded<Dual> wedge(const Graded<Dual>& a, const Graded<Dual>& b) {
  if (a.n() != b.n()) throw ValueError("wedge: dimension mismatch");
  Graded<Dual> r(a.n(), a.grade() + b.grade());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Scalar prod = ca * cb;
      r.add_term(Mask(ma | mb), s > 0 ? prod : Scalar(-prod));
    }
  return r;
}

// Interior product i(x)a. For a decomposable x = v1^...^vp this is
// i(vp)...i(v1) a, each i(v) the grade -1 antiderivation fixed by
// i(e1)(a1^a2) = a2; extended bilinearly. If grade(x) > grade(a) the result
// is zero (not an error).
Form contract(const Multivector& x, const Form& a);

// Coordinate pairing <a, x> = sum over multi-indices of a_I * x_I.
Scalar pairing(const Form& a, const Multivector& x);

// Mixed-grade element: a direct sum of homogeneous components.
class MixedForm {
 public:
  explicit MixedForm(int n) : n_(n) {}
  MixedForm(const Form& f) : n_(f.n()) { set_component(f); }

  int n() const { return n_; }
  void set_component(const Form& f);
  // The grade-k component; a zero form of grade k if absent.
  Form component(int k) const;
  const std::map<int, Form>& components() const { return parts_; }
  bool operator==(const MixedForm& o) const;

 private:
  int n_;
  std::map<int, Form> parts_;  // nonzero components only
};

// Canonical rendering: signed sum of "c*a{ij...}" terms in lexicographic
// multi-index order, e.g. "a136 + a146" or "-a12 + 3/2*a45".
std::string to_string(const Form& f);
std::string to_string(const Multivector& x);

}  // namespace symharm

#include <doctest.h>

#include "symharm/form.hpp"
#include "symharm/rng.hpp"

#include <algorithm>

using namespace symharm;

namespace {

Form basis(int n, std::initializer_list<int> idx, int c = 1) {
  std::vector<int> v(idx);
  return Form::basis_element(n, mask_of(v), Scalar(c));
}

Multivector vbasis(int n, std::initializer_list<int> idx, int c = 1) {
  std::vector<int> v(idx);
  return Multivector::basis_element(n, mask_of(v), Scalar(c));
}

}  // namespace

TEST_CASE("wedge on basis forms") {
  Form a1 = basis(6, {1}), a2 = basis(6, {2});
  CHECK(wedge(a1, a2) == basis(6, {1, 2}));
  CHECK(wedge(a2, a1) == basis(6, {1, 2}, -1));
  Form sum = a1 + a2;
  CHECK(wedge(sum, basis(6, {1, 2})).is_zero());
  // above the top grade
  Form top = basis(2, {1, 2});
  CHECK(wedge(top, top).is_zero());
}

TEST_CASE("wedge dimension mismatch is rejected") {
  CHECK_THROWS_AS(wedge(basis(4, {1}), basis(6, {1})), ValueError);
}

TEST_CASE("contraction convention anchors") {
  // i(e1)(a1^a2) = a2 pins the antiderivation.
  CHECK(contract(vbasis(6, {1}), basis(6, {1, 2})) == basis(6, {2}));
  // i(e1^e2)(a1^a2) = i(e2) i(e1) (a1^a2) = i(e2) a2 = 1; expanding the
  // composition by hand gives the same value the library must reproduce.
  Form via_composition =
      contract(vbasis(6, {2}), contract(vbasis(6, {1}), basis(6, {1, 2})));
  CHECK(via_composition == basis(6, {}));
  CHECK(contract(vbasis(6, {1, 2}), basis(6, {1, 2})) == basis(6, {}));
  // disjoint support
  CHECK(contract(vbasis(6, {3}), basis(6, {1, 2})).is_zero());
  // grade(x) > grade(a) gives zero, not an error
  CHECK(contract(vbasis(6, {1, 2}), basis(6, {1})).is_zero());
}

TEST_CASE("contraction is an antiderivation against wedge") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int ka = int(rng.range(0, 3)), kb = int(rng.range(0, 3));
    Form a = random_form(rng, 6, ka, 5);
    Form b = random_form(rng, 6, kb, 5);
    int v = int(rng.range(1, 6));
    Multivector ev = vbasis(6, {v});
    Form lhs = contract(ev, wedge(a, b));
    Form rhs = wedge(contract(ev, a), b) +
               (ka % 2 ? -wedge(a, contract(ev, b)) : wedge(a, contract(ev, b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("wedge is associative and graded commutative") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int ka = int(rng.range(0, 2)), kb = int(rng.range(1, 2)), kc = int(rng.range(1, 3));
    Form a = random_form(rng, 6, ka, 7);
    Form b = random_form(rng, 6, kb, 7);
    Form c = random_form(rng, 6, kc, 7);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Form ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == ((ka * kb) % 2 ? -ba : ba));
  }
}

TEST_CASE("contraction is adjoint to wedge under the coordinate pairing") {
  const Basis& b6 = Basis::get(6);
  for (Mask ma : b6.masks(3))
    for (Mask my : b6.masks(2))
      for (int v = 1; v <= 6; ++v) {
        Form a = Form::basis_element(6, ma);
        Multivector y = Multivector::basis_element(6, my);
        Multivector ev = vbasis(6, {v});
        Scalar lhs = pairing(contract(ev, a), y);
        Scalar rhs = pairing(a, wedge(ev, y));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("exact arithmetic is order independent") {
  Rng rng(23);
  Form a = random_form(rng, 6, 2, 99);
  Form b = random_form(rng, 6, 2, 99);
  // accumulate the product in two different term orders
  Form fwd(6, 4), rev(6, 4);
  std::vector<std::pair<Mask, Scalar>> terms(a.terms().begin(), a.terms().end());
  for (const auto& [m, c] : terms)
    fwd = fwd + wedge(Form::basis_element(6, m, c), b);
  std::reverse(terms.begin(), terms.end());
  for (const auto& [m, c] : terms)
    rev = rev + wedge(Form::basis_element(6, m, c), b);
  CHECK(fwd == rev);
  CHECK(fwd == wedge(a, b));
  CHECK(fwd.terms() == rev.terms());
}

TEST_CASE("mixed forms project by grade") {
  MixedForm mf(6);
  mf.set_component(basis(6, {}, 1));
  mf.set_component(basis(6, {1, 2}));
  CHECK(mf.component(2) == basis(6, {1, 2}));
  CHECK(mf.component(0) == basis(6, {}, 1));
  CHECK(mf.component(3).is_zero());
}

TEST_CASE("canonical text rendering") {
  Form f = basis(6, {1, 3, 6}) + basis(6, {1, 4, 6});
  CHECK(to_string(f) == "a136 + a146");
  Form g = basis(6, {1, 5, 6}) + basis(6, {2, 3, 6}, -1) + basis(6, {2, 4, 6}, -1);
  CHECK(to_string(g) == "a156 - a236 - a246");
  Form h = basis(6, {1, 2}, -3);
  h.add_term(mask_of({4, 5}), Scalar(1, 2));
  CHECK(to_string(h) == "-3*a12 + 1/2*a45");
  CHECK(to_string(Form(6, 2)) == "0");
  CHECK(to_string(basis(6, {}, 5)) == "5");
  CHECK(to_string(vbasis(6, {1, 2})) == "e12");
}

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar(" -4 ") == Scalar(-4));
  CHECK(parse_scalar("-2/4") == Scalar(-1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

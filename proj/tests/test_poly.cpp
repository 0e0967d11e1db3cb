#include <doctest.h>

#include "symharm/poly.hpp"
#include "symharm/rng.hpp"

using namespace symharm;

namespace {

UniPoly poly(std::vector<long long> ascending) {
  std::vector<Scalar> c;
  for (long long x : ascending) c.emplace_back(x);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("normalization and evaluation") {
  UniPoly p = poly({1, 0, 3, 0});
  CHECK(p.degree() == 2);
  CHECK(p.eval(Scalar(2)) == 13);
  CHECK(UniPoly().is_zero());
  CHECK(poly({0, 0}).is_zero());
}

TEST_CASE("derivative, remainder, gcd") {
  UniPoly p = poly({-1, 0, 1});  // t^2 - 1
  CHECK(p.derivative().coeffs() == std::vector<Scalar>{Scalar(0), Scalar(2)});
  UniPoly q = poly({-1, 1});  // t - 1
  CHECK(p.rem(q).is_zero());
  UniPoly g = UniPoly::gcd(p, q);
  CHECK(g.degree() == 1);
  CHECK(g.eval(Scalar(1)) == 0);

  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Scalar> ca, cb;
    for (int i = 0; i <= int(rng.range(1, 4)); ++i) ca.emplace_back(rng.range(-9, 9));
    for (int i = 0; i <= int(rng.range(1, 4)); ++i) cb.emplace_back(rng.range(-9, 9));
    UniPoly a(ca), b(cb);
    if (a.is_zero() || b.is_zero()) continue;
    UniPoly d = UniPoly::gcd(a, b);
    CHECK(a.rem(d).is_zero());
    CHECK(b.rem(d).is_zero());
  }
}

TEST_CASE("squarefree part drops multiplicity") {
  UniPoly sq = poly({1, -2, 1});  // (t-1)^2
  UniPoly sf = sq.squarefree_part();
  CHECK(sf.degree() == 1);
  CHECK(sf.eval(Scalar(1)) == 0);
}

TEST_CASE("sturm nonvanishing oracle cases") {
  CHECK(sturm_nonvanishing(poly({1, 0, 1}), Scalar(0), Scalar(1)));    // t^2+1
  CHECK(!sturm_nonvanishing(poly({-1, 2}), Scalar(0), Scalar(1)));     // t - 1/2
  // 3t^2 - 3t + 1 has negative discriminant (-3), hence no real roots
  CHECK(sturm_nonvanishing(poly({1, -3, 3}), Scalar(0), Scalar(1)));
  // endpoint roots count
  CHECK(!sturm_nonvanishing(poly({0, -1, 1}), Scalar(0), Scalar(1)));  // t(t-1)
  // double roots are found despite square-freeing
  CHECK(!sturm_nonvanishing(poly({1, -2, 1}), Scalar(0), Scalar(2)));
  CHECK_THROWS_AS(sturm_nonvanishing(UniPoly(), Scalar(0), Scalar(1)), ValueError);
}

TEST_CASE("sturm root counting matches factored polynomials") {
  // (t-1/4)(t-1/2)(t-3) has two roots in (0,1]
  UniPoly p = poly({-4, 1}) * poly({-2, 1}) * poly({-3, 1});
  // roots at 4, 2, 3: scale to keep rationals: use (4t-1)(2t-1)(t-3)
  p = poly({-1, 4}) * poly({-1, 2}) * poly({-3, 1});
  CHECK(sturm_root_count(p, Scalar(0), Scalar(1)) == 2);
  CHECK(sturm_root_count(p, Scalar(0), Scalar(4)) == 3);
  CHECK(sturm_root_count(p, Scalar(1), Scalar(2)) == 0);
}

TEST_CASE("multivariate polynomials") {
  MultiPoly p(3);
  p.add_term({1, 2, 0}, Scalar(2));
  p.add_term({0, 0, 3}, Scalar(-1));
  p.add_term({1, 2, 0}, Scalar(-2));  // cancels
  CHECK(p.eval({Scalar(5), Scalar(7), Scalar(2)}) == -8);
  CHECK(p.to_string({"x", "y", "z"}) == "-z^3");
  MultiPoly zero(2);
  CHECK(zero.is_zero());
  CHECK(zero.to_string({"a", "b"}) == "0");
}

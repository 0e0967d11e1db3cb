#include <doctest.h>

#include "symharm/catalog.hpp"
#include "symharm/liespec.hpp"

using namespace symharm;

TEST_CASE("structure notation semantics") {
  // entry order carries signs: "52" contributes a5^a2 = -a25
  LieAlgebraSpec s = LieAlgebraSpec::parse("(0,0,12,13,14,34+52)");
  CHECK(s.n() == 6);
  CHECK(s.constant(3, 4, 6) == 1);
  CHECK(s.constant(2, 5, 6) == -1);
  CHECK(s.constant(1, 2, 3) == 1);
  Form d6 = s.d_generator(6);
  Form expected(6, 2);
  expected.add_term(mask_of({3, 4}), 1);
  expected.add_term(mask_of({2, 5}), -1);
  CHECK(d6 == expected);

  LieAlgebraSpec abelian = LieAlgebraSpec::parse("(0,0,0,0,0,0)");
  CHECK(abelian.is_abelian());
  for (int k = 1; k <= 6; ++k) CHECK(abelian.d_generator(k).is_zero());
}

TEST_CASE("whitespace is insignificant") {
  LieAlgebraSpec a = LieAlgebraSpec::parse("(0, 0, 12, 13, 23, 14-25)");
  LieAlgebraSpec b = LieAlgebraSpec::parse("(0,0,12,13,23,14-25)");
  CHECK(a.render() == b.render());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(LieAlgebraSpec::parse("0,0,12"), ParseError);       // no parens
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,12,)"), ParseError);    // empty entry
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,1x)"), ParseError);     // bad term
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,17)"), ParseError);     // digit > n
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,11)"), ParseError);     // repeated digit
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,13,12)"), ParseError);    // i<j<k violated
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,23)"), ParseError);     // j >= k
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,+12)"), ParseError);    // leading plus
  // d^2 != 0 (Jacobi violation): d a5 = a34 with d a4 = a12
  CHECK_THROWS_AS(LieAlgebraSpec::parse("(0,0,0,12,34,0)"), ParseError);
}

TEST_CASE("differential is the antiderivation extension") {
  LieAlgebraSpec s = LieAlgebraSpec::parse("(0,0,12,13,14,34+52)");
  CEDifferential d(s);
  // d(a1^a6) = -a1 ^ (a34 - a25) = -a134 + a125
  Form a16 = Form::basis_element(6, mask_of({1, 6}));
  Form expected(6, 3);
  expected.add_term(mask_of({1, 3, 4}), -1);
  expected.add_term(mask_of({1, 2, 5}), 1);
  CHECK(d.apply(a16) == expected);
  // agrees with a direct expansion of d(a1^a6) = da1^a6 - a1^da6
  Form oracle = wedge(s.d_generator(1), Form::basis_element(6, mask_of({6}))) -
                wedge(Form::basis_element(6, mask_of({1})), s.d_generator(6));
  CHECK(d.apply(a16) == oracle);
}

TEST_CASE("d squared vanishes on every catalog entry") {
  for (const CatalogEntry& e : load_catalog()) {
    LieAlgebraSpec s = LieAlgebraSpec::parse(e.structure);
    CEDifferential d(s);
    for (int k = 0; k + 2 <= 6; ++k)
      CHECK((d.matrix(k + 1) * d.matrix(k)).is_zero());
  }
}

TEST_CASE("lower central series and step length") {
  LowerCentralSeries abelian =
      lower_central_series(LieAlgebraSpec::parse("(0,0,0,0,0,0)"));
  CHECK(abelian.step_length == 1);
  CHECK(abelian.dims == std::vector<int>{6, 0});

  LowerCentralSeries heis =
      lower_central_series(LieAlgebraSpec::parse("(0,0,0,0,0,12)"));
  CHECK(heis.dims[1] == 1);
  CHECK(heis.step_length == 2);

  LowerCentralSeries filiform =
      lower_central_series(LieAlgebraSpec::parse("(0,0,12,13,14+23,34+52)"));
  CHECK(filiform.step_length == 5);

  for (const CatalogEntry& e : load_catalog()) {
    LowerCentralSeries lcs =
        lower_central_series(LieAlgebraSpec::parse(e.structure));
    CHECK(6 - lcs.step_length == e.six_minus_s);
    // strictly decreasing to zero
    for (size_t i = 1; i < lcs.dims.size(); ++i)
      CHECK(lcs.dims[i] < lcs.dims[i - 1]);
    CHECK(lcs.dims.back() == 0);
  }
}

TEST_CASE("render round trip preserves constants") {
  for (const char* text :
       {"(0,0,12,13,23,14-25)", "(0,0,0,12,13+42,14+23)", "(0,0,0,0,0,0)",
        "(0,0,12,13,14+23,34+52)"}) {
    LieAlgebraSpec a = LieAlgebraSpec::parse(text);
    LieAlgebraSpec b = LieAlgebraSpec::parse(a.render());
    for (int k = 1; k <= 6; ++k) CHECK(a.entry(k) == b.entry(k));
  }
  // repeated terms accumulate and round trip by repetition
  LieAlgebraSpec twice = LieAlgebraSpec::parse("(0,0,12+12)");
  CHECK(twice.constant(1, 2, 3) == 2);
  LieAlgebraSpec again = LieAlgebraSpec::parse(twice.render());
  CHECK(again.constant(1, 2, 3) == 2);
}

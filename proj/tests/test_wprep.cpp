/**
 * @file test_wprep.cpp
 * @brief Preparation tests: degree detection, folding against hand-computed
 *        series coefficients, certified orders, and exact-termination flags.
 */
#include "wprep.hpp"

#include "doctest.h"
#include "error.hpp"
#include "parse.hpp"

using namespace sing;

TEST_CASE("weierstrass degree reads the minimal pure power") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y|x", 64);
  CHECK(weierstrass_degree(parse_poly("x^2 + y^4 + y^5", Q, fr), fr) == 2);
  CHECK(weierstrass_degree(parse_poly("x^7", Q, fr), fr) == 7);
  CHECK(weierstrass_degree(parse_poly("x^3 + x^5 + y*x^2", Q, fr), fr) == 3);
  CHECK(weierstrass_degree(parse_poly("1 + y*x", Q, fr), fr) == 0);
  CHECK(!weierstrass_degree(parse_poly("y*x", Q, fr), fr).has_value());
  CHECK(!weierstrass_degree(parse_poly("y^3 + y*x^9", Q, fr), fr).has_value());
}

TEST_CASE("an already-prepared polynomial passes through exactly") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("y|x", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", F2, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 2);
  CHECK(w.exact);
  CHECK(w.v.value == parse_poly("1", F2, fr));
  CHECK(w.a[0].value.is_zero());
  CHECK(w.a[1].value == parse_poly("y^4 + y^5", F2, fr));
  CHECK(w.normal == f);

  auto ords = coefficient_orders(w);
  REQUIRE(ords.size() == 2);
  CHECK(ords[0] == NuValue::infinite());
  CHECK(ords[1] == NuValue::exact(4));
}

TEST_CASE("series division: (1+y)*x^2 + u^3 at precision 8") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u,y|x", 8);
  Poly f = parse_poly("(1+y)*x^2 + u^3", Q, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 2);
  CHECK(!w.exact);
  // v = (1+y)^(-1) = 1 - y + y^2 - ... through degree 8
  CHECK(w.v.value == parse_poly("1 - y + y^2 - y^3 + y^4 - y^5 + y^6 - y^7 + y^8", Q, fr));
  CHECK(w.a[0].value.is_zero());
  // a_2 = u^3 * (1+y)^(-1), certified through total degree 8
  CHECK(w.a[1].value == parse_poly("u^3*(1 - y + y^2 - y^3 + y^4 - y^5)", Q, fr));
  CHECK(w.a[1].certified == 8);
  CHECK(w.a[0].certified == 7);
  // reconstruction: v*f - (x^2 + a_2) vanishes through the certified degree
  Poly diff = w.v.value * f - w.normal;
  CHECK(diff.truncate(8).is_zero());
  CHECK(!diff.is_zero());
  CHECK(*ord_origin(diff) > 8);

  auto ords = coefficient_orders(w);
  CHECK(ords[0] == NuValue::at_least(7));
  CHECK(ords[1] == NuValue::exact(3));
}

TEST_CASE("a monic cubic splits into its coefficient list") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u|z", 64);
  Poly f = parse_poly("z^3 + 3*z*u^5 + u^7", Q, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 3);
  CHECK(w.exact);
  CHECK(w.a[0].value.is_zero());
  CHECK(w.a[1].value == parse_poly("3*u^5", Q, fr));
  CHECK(w.a[2].value == parse_poly("u^7", Q, fr));
  auto ords = coefficient_orders(w);
  CHECK(ords[0] == NuValue::infinite());
  CHECK(ords[1] == NuValue::exact(5));
  CHECK(ords[2] == NuValue::exact(7));
}

TEST_CASE("folding absorbs higher powers of the distinguished variable") {
  // f = x^3 + x^2 + y^4: the true prepared form has a_1 = -y^4 + O(y^8) and
  // a_2 = y^4 + O(y^8) (solve u*(x^2+a_1x+a_2) = f coefficient by coefficient).
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y|x", 20);
  Poly f = parse_poly("x^3 + x^2 + y^4", Q, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 2);
  CHECK(!w.exact);
  for (const TruncSeries& ai : w.a)
    for (const auto& [a, c] : ai.value.terms()) CHECK(a.e[1] == 0);
  Exponent y4;
  y4.e[0] = 4;
  CHECK(w.a[0].value.coeff(y4) == Q->from_int(-1));
  CHECK(w.a[1].value.coeff(y4) == Q->one());
  CHECK(*ord_origin(w.a[0].value) == 4);
  CHECK(*ord_origin(w.a[1].value) == 4);
  CHECK((w.v.value * f - w.normal).truncate(20).is_zero());

  auto ords = coefficient_orders(w);
  CHECK(ords[0] == NuValue::exact(4));
  CHECK(ords[1] == NuValue::exact(4));
}

TEST_CASE("unit coefficient block over a finite field") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("u|x", 16);
  Poly f = parse_poly("(1+u)*x^2 + u^3*x + u^5", F2, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 2);
  auto ords = coefficient_orders(w);
  CHECK(ords[0] == NuValue::exact(3));
  CHECK(ords[1] == NuValue::exact(5));
  CHECK((w.v.value * f - w.normal).truncate(16).is_zero());
}

TEST_CASE("degree-zero preparation inverts a unit") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u|x", 10);
  Poly f = parse_poly("1 + x + u", Q, fr);
  PseudoWeierstrass w = prepare(f, fr);
  CHECK(w.ell == 0);
  CHECK(w.a.empty());
  CHECK(w.normal == parse_poly("1", Q, fr));
  CHECK((w.v.value * f).truncate(10) == parse_poly("1", Q, fr));
}

TEST_CASE("preparation preconditions") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u|x", 64);
  try {
    prepare(parse_poly("u*x", Q, fr), fr);
    FAIL("accepted an element of the u-ideal");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::Precondition);
  }
  Frame tiny = parse_frame("u|x", 1);
  CHECK_THROWS_AS(prepare(parse_poly("x^2 + u^3", Q, tiny), tiny), Error);
  Frame two_y = parse_frame("u|x,y", 64);
  CHECK_THROWS_AS(weierstrass_degree(parse_poly("x^2", Q, two_y), two_y), Error);
}

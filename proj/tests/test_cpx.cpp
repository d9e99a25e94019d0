/**
 * @file test_cpx.cpp
 * @brief Support sets, unit expansions, monomial valuations, and support
 *        stability under parameter translation.
 */
#include "cpx.hpp"
#include "doctest.h"
#include "parse.hpp"

using namespace sing;

namespace {

Poly random_nonzero(const Field* F, unsigned n, Rng& rng, unsigned maxdeg, unsigned nterms) {
  for (int tries = 0; tries < 64; ++tries) {
    Poly f(F, n);
    for (unsigned k = 0; k < nterms; ++k) {
      Exponent a;
      for (unsigned i = 0; i < n; ++i) a.e[i] = static_cast<uint16_t>(rng.below(maxdeg + 1));
      f.add_term(a, F->sample(rng));
    }
    if (!f.is_zero()) return f;
  }
  return Poly::constant(F, n, F->one());
}

Poly reassemble(const CPExpansion& e, const Field* F, unsigned n) {
  Poly sum(F, n);
  for (size_t i = 0; i < e.support.size(); ++i)
    sum = sum + e.units[i].mul_monomial(e.support[i], F->one());
  return sum;
}

/// Order-minimal element of a support set under grlex.
Exponent grlex_min(const std::vector<Exponent>& s) {
  Exponent best = s.front();
  for (const Exponent& a : s)
    if (mono_less(a, best, MonomialOrder::Grlex)) best = a;
  return best;
}

}  // namespace

TEST_CASE("minimal support is the antichain of the support") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y,x", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", Q, fr);
  auto s = support_min(f);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == exp_of({0, 2}));
  CHECK(s[1] == exp_of({4, 0}));

  Frame fu = parse_frame("u1,u2", 64);
  CHECK(support_min(parse_poly("u1^3*u2", Q, fu)) == std::vector<Exponent>{exp_of({3, 1})});
  auto s3 = support_min(parse_poly("u1*u2 + u1^2 + u2^2", Q, fu));
  CHECK(s3.size() == 3);
  CHECK_THROWS_AS(support_min(Poly(Q, 2)), Error);
}

TEST_CASE("unit expansion attributes non-minimal terms deterministically") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y,x", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", Q, fr);
  CPExpansion e = cp_expand(f);
  REQUIRE(e.support.size() == 2);
  // grlex puts (0,2) before (4,0)
  CHECK(e.support[0] == exp_of({0, 2}));
  CHECK(e.units[0] == parse_poly("1", Q, fr));
  CHECK(e.units[1] == parse_poly("1 + y", Q, fr));
  CHECK(reassemble(e, Q, 2) == f);
}

TEST_CASE("every expansion coefficient is a unit and reassembly is exact") {
  const Field* fields[] = {Field::get(parse_field_spec("Q")), Field::get(parse_field_spec("Fp:2")),
                           Field::get(parse_field_spec("Fp:5"))};
  Rng rng(7);
  for (int k = 0; k < 120; ++k) {
    const Field* F = fields[k % 3];
    Poly f = random_nonzero(F, 3, rng, 5, 6);
    for (MonomialOrder ord : {MonomialOrder::Grlex, MonomialOrder::Lex}) {
      CPExpansion e = cp_expand(f, ord);
      CHECK(reassemble(e, F, 3) == f);
      for (const Poly& u : e.units) CHECK(!F->is_zero(u.coeff(Exponent{})));
      // S(f) is an antichain.
      for (const Exponent& a : e.support)
        for (const Exponent& b : e.support)
          if (!(a == b)) CHECK(!a.divides(b));
    }
  }
}

TEST_CASE("expansions under two orders differ only inside the maximal ideal") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u1,u2", 64);
  Poly f = parse_poly("u1^2 + u2^2 + u1^2*u2^2", Q, fr);
  CPExpansion a = cp_expand(f, MonomialOrder::Grlex);
  CPExpansion b = cp_expand(f, MonomialOrder::Lex);
  CHECK(a.support == b.support);
  for (size_t i = 0; i < a.support.size(); ++i) {
    Poly d = a.units[i] - b.units[i];
    if (!d.is_zero()) CHECK(*ord_origin(d) >= 1);
    CHECK(a.units[i].coeff(Exponent{}) == b.units[i].coeff(Exponent{}));
  }
}

TEST_CASE("u-block expansions are detected from the minimal support") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u1,u2|y", 64);
  Poly g = parse_poly("u1^2 + u1*u2*(1+y) - u2^2/2", Q, fr);
  CHECK(has_u_expansion(g, fr));
  CHECK(!has_u_expansion(g * g, fr));
  CHECK(!has_u_expansion(parse_poly("y", Q, fr), fr));
}

TEST_CASE("squaring moves the mixed term support off the u-block") {
  // The cross term u1^2*u2^2 of the square cancels against the doubled
  // product, leaving a y-carrying minimal exponent.
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u1,u2|y", 64);
  Poly g = parse_poly("u1^2 + u1*u2*(1+y) - u2^2/2", Q, fr);
  Poly g2 = g * g;
  CHECK(Q->is_zero(g2.coeff(exp_of({2, 2, 0}))));
  auto s = support_min(g2);
  bool found = false;
  for (const Exponent& a : s)
    if (a == exp_of({2, 2, 1})) found = true;
  CHECK(found);
}

TEST_CASE("monomial valuations") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u1,u2", 64);
  Poly f = parse_poly("u1^3 + u2^2", Q, fr);
  CHECK(*monomial_valuation(f, {2, 3}) == 6);
  CHECK(!monomial_valuation(Poly(Q, 2), {1, 1}).has_value());
  CHECK_THROWS_AS(monomial_valuation(f, {1, 0}), Error);

  Frame fy = parse_frame("u|y", 64);
  Poly yl = parse_poly("y^3", Q, fy);
  CHECK(*monomial_valuation(yl, {5, 4}) == 12);
}

TEST_CASE("monomial valuation is a valuation") {
  const Field* fields[] = {Field::get(parse_field_spec("Q")), Field::get(parse_field_spec("Fp:3"))};
  Rng rng(13);
  int done = 0;
  while (done < 210) {
    const Field* F = fields[done % 2];
    Poly f = random_nonzero(F, 2, rng, 4, 4);
    Poly g = random_nonzero(F, 2, rng, 4, 4);
    std::vector<unsigned> w = {static_cast<unsigned>(rng.below(4)) + 1,
                               static_cast<unsigned>(rng.below(4)) + 1};
    CHECK(*monomial_valuation(f * g, w) == *monomial_valuation(f, w) + *monomial_valuation(g, w));
    Poly s = f + g;
    if (!s.is_zero())
      CHECK(*monomial_valuation(s, w) >=
            std::min(*monomial_valuation(f, w), *monomial_valuation(g, w)));
    ++done;
  }
}

TEST_CASE("minimal exponents multiply across products") {
  // Under any monomial order with 1 least, the order-least minimal exponent
  // of a product is the sum of the factors' least minimal exponents, and the
  // attached units multiply up to higher-order terms.
  const Field* fields[] = {Field::get(parse_field_spec("Q")), Field::get(parse_field_spec("Fp:5"))};
  Rng rng(19);
  int done = 0;
  while (done < 100) {
    const Field* F = fields[done % 2];
    Poly f = random_nonzero(F, 2, rng, 4, 4);
    Poly g = random_nonzero(F, 2, rng, 4, 4);
    Exponent mf = grlex_min(support_min(f));
    Exponent mg = grlex_min(support_min(g));
    Exponent mfg = grlex_min(support_min(f * g));
    CHECK(mfg == mf.plus(mg));
    CHECK(F->mul(f.coeff(mf), g.coeff(mg)) == (f * g).coeff(mfg));
    ++done;
  }
}

TEST_CASE("support below the comparison degree ignores deep translations") {
  const Field* F2 = Field::get(parse_field_spec("Fp:2"));
  const Field* Q = Field::get(parse_field_spec("Q"));
  Rng rng(29);
  unsigned N = 3;
  for (int k = 0; k < 30; ++k) {
    const Field* F = k % 2 ? Q : F2;
    Poly f = random_nonzero(F, 2, rng, 4, 5);
    std::vector<Poly> ys = {Poly::variable(F, 2, 0), Poly::variable(F, 2, 1)};
    // Perturb by random homogeneous terms of degree N+1.
    std::vector<Poly> zs = ys;
    for (unsigned j = 0; j < 2; ++j) {
      Exponent a;
      a.e[0] = static_cast<uint16_t>(rng.below(N + 2));
      a.e[1] = static_cast<uint16_t>(N + 1 - a.e[0]);
      zs[j] = zs[j] + Poly::monomial(F, 2, a, F->sample(rng));
    }
    CHECK(check_truncated_support_equality(f, ys, zs, N));
  }
}

TEST_CASE("identical parameter systems compare trivially") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", Q, fr);
  std::vector<Poly> ys = {Poly::variable(Q, 2, 0), Poly::variable(Q, 2, 1)};
  CHECK(check_truncated_support_equality(f, ys, ys, 5));
}

TEST_CASE("support comparison rejects shallow translations and N = 0") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("x^2 + y^3", Q, fr);
  std::vector<Poly> ys = {Poly::variable(Q, 2, 0), Poly::variable(Q, 2, 1)};
  std::vector<Poly> zs = {ys[0] + ys[1], ys[1]};
  CHECK_THROWS_AS(check_truncated_support_equality(f, ys, zs, 3), Error);
  CHECK_THROWS_AS(check_truncated_support_equality(f, ys, ys, 0), Error);
}

TEST_CASE("truncated support sees through unit rescaling of coordinates") {
  // Rewriting in parameters (x + x^2, y) must keep the low support of x^2:
  // the inverse substitution is the geometric-series flip.
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("x^2", Q, fr);
  std::vector<Poly> params = {parse_poly("x + x^2", Q, fr), Poly::variable(Q, 2, 1)};
  auto s = truncated_support(f, params, 6);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == exp_of({2, 0}));
}

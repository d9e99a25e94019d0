/**
 * @file test_cone.cpp
 * @brief Ridge / directrix / extremal-case tests: worked examples over small
 *        fields, the char-p case where an additive form only arises from a
 *        combination of generators, and the linear-algebra invariants.
 */
#include "cone.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "linalg.hpp"
#include "parse.hpp"
#include "rng.hpp"

using namespace sing;

namespace {

std::vector<Scalar> coeff_vector(const Poly& L) {
  std::vector<Scalar> v(L.nvars(), L.field()->zero());
  for (const auto& [a, c] : L.terms()) {
    REQUIRE(a.degree() == 1);
    for (unsigned i = 0; i < L.nvars(); ++i)
      if (a.e[i]) v[i] = c;
  }
  return v;
}

Mat span_matrix(const Field* F, unsigned n, const std::vector<Poly>& forms) {
  Mat rows(F, static_cast<unsigned>(forms.size()), n);
  for (unsigned i = 0; i < forms.size(); ++i) {
    auto v = coeff_vector(forms[i]);
    for (unsigned j = 0; j < n; ++j) rows.at(i, j) = v[j];
  }
  return rows;
}

/// Rank of the stacked coefficient rows of two families of linear forms.
unsigned joint_rank(const Field* F, unsigned n, const std::vector<Poly>& a,
                    const std::vector<Poly>& b) {
  std::vector<Poly> all = a;
  all.insert(all.end(), b.begin(), b.end());
  Mat rows = span_matrix(F, n, all);
  return row_reduce(rows);
}

/// The two families span the same subspace of linear forms.
bool same_span(const Field* F, unsigned n, const std::vector<Poly>& a,
               const std::vector<Poly>& b) {
  Mat ra = span_matrix(F, n, a);
  Mat rb = span_matrix(F, n, b);
  unsigned rka = row_reduce(ra);
  unsigned rkb = row_reduce(rb);
  return rka == rkb && joint_rank(F, n, a, b) == rka;
}

Poly linear_substitute(const Poly& f, const Mat& T) {
  const Field* F = f.field();
  unsigned n = f.nvars();
  std::vector<Poly> images;
  for (unsigned i = 0; i < n; ++i) {
    Poly img(F, n);
    for (unsigned j = 0; j < n; ++j) {
      if (F->is_zero(T.at(i, j))) continue;
      Exponent a;
      a.e[j] = 1;
      img.add_term(a, T.at(i, j));
    }
    images.push_back(std::move(img));
  }
  return compose(f, images);
}

Mat random_invertible(const Field* F, unsigned n, Rng& rng) {
  for (;;) {
    Mat T(F, n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) T.at(i, j) = F->sample(rng);
    if (mat_inverse(T)) return T;
  }
}

bool mats_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

/// All multi-indices of the given total degree in n variables.
std::vector<Exponent> all_multi_indices(unsigned n, unsigned degree) {
  std::vector<Exponent> out;
  std::vector<Exponent> stack = {Exponent{}};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Exponent> next;
    for (const Exponent& a : stack)
      for (unsigned d = 0; d + a.degree() <= degree; ++d) {
        Exponent b = a;
        b.e[i] = static_cast<uint16_t>(d);
        if (i + 1 < n || b.degree() == degree) next.push_back(b);
      }
    stack = std::move(next);
  }
  out = std::move(stack);
  return out;
}

}  // namespace

TEST_CASE("ridge of X^2+Y^2 over F_2 is the square of X+Y") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("X,Y", 64);
  RidgeData rd = ridge(parse_poly("X^2 + Y^2", F2, fr));
  CHECK(!rd.char_zero);
  REQUIRE(rd.gens.size() == 1);
  CHECK(rd.gens[0].e == 1);
  CHECK(rd.gens[0].form == parse_poly("X + Y", F2, fr));
}

TEST_CASE("ridge of X^2+XY+Y^2 over Q is the full space of linear forms") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("X,Y", 64);
  RidgeData rd = ridge(parse_poly("X^2 + X*Y + Y^2", Q, fr));
  CHECK(rd.char_zero);
  REQUIRE(rd.gens.size() == 2);
  CHECK(rd.gens[0].e == 0);
  CHECK(rd.gens[1].e == 0);
  std::vector<Poly> expect = {parse_poly("X", Q, fr), parse_poly("Y", Q, fr)};
  std::vector<Poly> got = {rd.gens[0].form, rd.gens[1].form};
  CHECK(same_span(Q, 2, got, expect));
}

TEST_CASE("ridge of a pure power X^m in characteristic zero") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("X,Y", 64);
  RidgeData rd = ridge(parse_poly("X^5", Q, fr));
  REQUIRE(rd.gens.size() == 1);
  CHECK(rd.gens[0].e == 0);
  CHECK(rd.gens[0].form == parse_poly("X", Q, fr));
}

TEST_CASE("X^2+YZ over F_2: the additive form X^2 sits in the ideal, not among the generators") {
  // Hasse derivatives of order one are Z and Y; X^2 itself is only reached as
  // F - Y*Z inside the degree-2 slice of the ideal.  The directrix must still
  // have codimension 3.
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("X,Y,Z", 64);
  Poly F = parse_poly("X^2 + Y*Z", F2, fr);
  DirectrixData dd = directrix(F);
  CHECK(dd.r == 3);
  std::vector<Poly> expect = {parse_poly("X", F2, fr), parse_poly("Y", F2, fr),
                              parse_poly("Z", F2, fr)};
  CHECK(same_span(F2, 3, dd.forms, expect));
}

TEST_CASE("directrix of In(x^2+y^4+y^5) over F_2 is the line of the first coordinate") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", F2, fr);
  DirectrixData dd = directrix(initial_form(f));
  REQUIRE(dd.r == 1);
  CHECK(dd.forms[0] == parse_poly("x", F2, fr));
}

TEST_CASE("directrix of Y1^4+Y1^2*Y2^2+Y3^4 over Q has codimension 3") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y1,y2,y3", 64);
  DirectrixData dd = directrix(parse_poly("y1^4 + y1^2*y2^2 + y3^4", Q, fr));
  CHECK(dd.r == 3);
}

TEST_CASE("ridge over the imperfect field F_2(t) is rejected") {
  const Field* Ft = Field::get(parse_field_spec("Fpt:2"));
  Frame fr = parse_frame("X,Y", 64);
  Poly F = parse_poly("X^2 + t*Y^2", Ft, fr);
  CHECK_THROWS_AS(ridge(F), Error);
  try {
    directrix(F);
    FAIL("directrix accepted an imperfect coefficient field");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::Unsupported);
  }
}

TEST_CASE("ridge input validation") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("X,Y", 64);
  CHECK_THROWS_AS(ridge(parse_poly("X^2 + Y", Q, fr)), Error);
  CHECK_THROWS_AS(ridge(Poly(Q, 2)), Error);
}

TEST_CASE("extremal: x^2+y^4+y^5 in characteristic 2") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("x,y", 64);
  ExtremalWitness w = is_extremal(parse_poly("x^2 + y^4 + y^5", F2, fr));
  REQUIRE(w.extremal);
  CHECK(F2->is_one(w.c));
  CHECK(w.L == parse_poly("x", F2, fr));
}

TEST_CASE("non-extremal: y1^4+y1^2*y2^2+y3^4") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("y1,y2,y3", 64);
  CHECK(!is_extremal(parse_poly("y1^4 + y1^2*y2^2 + y3^4", Q, fr)).extremal);
}

TEST_CASE("extremal: a perfect cube over Q with higher-order noise") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  ExtremalWitness w = is_extremal(parse_poly("(x+y)^3 + x^4", Q, fr));
  REQUIRE(w.extremal);
  CHECK(Q->is_one(w.c));
  CHECK(w.L == parse_poly("x + y", Q, fr));
}

TEST_CASE("extremal over F_4 reads a Frobenius root of the coefficient") {
  // w = (w^2)^2 in F_4, so x^2 + w*y^2 = (x + w^2*y)^2.
  const Field* F4 = Field::get(parse_field_spec("Fq:2^2"));
  Frame fr = parse_frame("x,y", 64);
  ExtremalWitness w = is_extremal(parse_poly("x^2 + w*y^2", F4, fr));
  REQUIRE(w.extremal);
  CHECK(F4->is_one(w.c));
  CHECK(w.L == parse_poly("x + w^2*y", F4, fr));
  CHECK(w.L.pow(2).scale(w.c) == parse_poly("x^2 + w*y^2", F4, fr));
}

TEST_CASE("extremal over F_2(t): scaled squares work, non-square scales do not") {
  const Field* Ft = Field::get(parse_field_spec("Fpt:2"));
  Frame fr = parse_frame("x,y", 64);
  ExtremalWitness w = is_extremal(parse_poly("t*x^2 + t*y^2 + x^3", Ft, fr));
  REQUIRE(w.extremal);  // t*(x+y)^2
  CHECK(w.c == parse_poly("t", Ft, fr).coeff(Exponent{}));
  CHECK(w.L == parse_poly("x + y", Ft, fr));
  // x^2 + t*y^2 would need a square root of t.
  CHECK(!is_extremal(parse_poly("x^2 + t*y^2", Ft, fr)).extremal);
}

TEST_CASE("extremal-case test rejects multiplicity below 2") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  try {
    is_extremal(parse_poly("x + x^2", Q, fr));
    FAIL("accepted a regular point");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::Precondition);
  }
  CHECK_THROWS_AS(is_extremal(parse_poly("1 + x", Q, fr)), Error);
}

TEST_CASE("normalize_frame sends (x+y)^2 + noise to a pure square in the last coordinate") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("(x+y)^2 + x^4", Q, fr);
  NormalizedFrame nf = normalize_frame(f, fr);
  CHECK(nf.r == 1);
  CHECK(nf.frame.split == 1);
  REQUIRE(nf.frame.names.size() == 2);
  CHECK(nf.frame.names[0] == "y");  // the untouched coordinate keeps its name
  Poly in_f = initial_form(nf.f);
  Exponent sq;
  sq.e[1] = 2;
  CHECK(in_f == Poly::monomial(Q, 2, sq, Q->one()));
}

TEST_CASE("normalize_frame is the identity on an already-normalized input") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  Frame fr = parse_frame("u1|y1", 64);
  Poly f = parse_poly("y1^2 + u1^5", Q, fr);
  NormalizedFrame nf = normalize_frame(f, fr);
  CHECK(nf.r == 1);
  CHECK(nf.frame.split == 1);
  CHECK(nf.frame.names == std::vector<std::string>{"u1", "y1"});
  CHECK(nf.f == f);
  CHECK(mats_equal(nf.change, Mat::identity(Q, 2)));
}

TEST_CASE("normalize_frame swaps the coordinates of x^2+y^4+y^5") {
  const Field* F2 = Field::get(parse_field_spec("F2"));
  Frame fr = parse_frame("x,y", 64);
  Poly f = parse_poly("x^2 + y^4 + y^5", F2, fr);
  NormalizedFrame nf = normalize_frame(f, fr);
  CHECK(nf.r == 1);
  CHECK(nf.frame.split == 1);
  CHECK(nf.frame.names == std::vector<std::string>{"y", "x"});
  Frame out = nf.frame;
  CHECK(nf.f == parse_poly("x^2 + y^4 + y^5", F2, out));
}

TEST_CASE("directrix span transforms contravariantly under a linear substitution") {
  Rng rng(2026);
  struct Case {
    const char* field;
    const char* vars;
    const char* form;
  };
  const Case cases[] = {
      {"F2", "X,Y,Z", "X^2 + Y*Z"},
      {"Q", "y1,y2,y3", "y1^4 + y1^2*y2^2 + y3^4"},
      {"F3", "X,Y,Z", "X^3 + Y^3"},
      {"F5", "X,Y,Z", "X^2*Y + Y^2*X"},
  };
  for (const Case& cs : cases) {
    const Field* F = Field::get(parse_field_spec(cs.field));
    Frame fr = parse_frame(cs.vars, 64);
    Poly G = parse_poly(cs.form, F, fr);
    unsigned n = G.nvars();
    DirectrixData base = directrix(G);
    for (int rep = 0; rep < 4; ++rep) {
      Mat T = random_invertible(F, n, rng);
      DirectrixData moved = directrix(linear_substitute(G, T));
      REQUIRE(moved.r == base.r);
      // Forms of G pulled through T must span the same space as the forms
      // computed on G∘T.
      std::vector<Poly> pulled;
      for (const Poly& L : base.forms) pulled.push_back(linear_substitute(L, T));
      CHECK(same_span(F, n, pulled, moved.forms));
    }
  }
}

TEST_CASE("characteristic zero: directrix span equals the span of order m-1 Hasse derivatives") {
  const Field* Q = Field::get(parse_field_spec("Q"));
  const char* cases[] = {"y1^4 + y1^2*y2^2 + y3^4", "(y1+y2)^3 + y3^3", "y1^2 + y1*y2 + y2^2",
                         "(y1 + 2*y2 - y3)^2"};
  Frame fr = parse_frame("y1,y2,y3", 64);
  for (const char* text : cases) {
    Poly G = parse_poly(text, Q, fr);
    unsigned m = G.degree();
    unsigned n = G.nvars();
    std::vector<Poly> derivs;
    for (const Exponent& a : all_multi_indices(n, m - 1)) {
      Poly d = hasse_derivative_multi(G, a);
      if (!d.is_zero()) derivs.push_back(std::move(d));
    }
    DirectrixData dd = directrix(G);
    CHECK(same_span(Q, n, dd.forms, derivs));
  }
}

TEST_CASE("a singularity is extremal exactly when its directrix has codimension one") {
  struct Case {
    const char* field;
    const char* vars;
    const char* poly;
  };
  const Case corpus[] = {
      {"F2", "x,y", "x^2 + y^4 + y^5"},
      {"Q", "x,y", "(x+y)^3 + x^4"},
      {"Q", "y1,y2,y3", "y1^4 + y1^2*y2^2 + y3^4"},
      {"F2", "X,Y,Z", "X^2 + Y*Z"},
      {"F2", "X,Y", "X^2 + Y^2"},
      {"F3", "X,Y", "X^3 + Y^3"},
      {"Q", "X,Y", "X^3 + Y^3"},
      {"Q", "X,Y", "X^2 + 2*Y^2"},
      {"Fq:2^2", "x,y", "x^2 + w*y^2"},
      {"F5", "x,y,z", "x^2 + x*y + z^2"},
  };
  for (const Case& cs : corpus) {
    const Field* F = Field::get(parse_field_spec(cs.field));
    Frame fr = parse_frame(cs.vars, 64);
    Poly f = parse_poly(cs.poly, F, fr);
    bool ext = is_extremal(f).extremal;
    unsigned r = directrix(initial_form(f)).r;
    CHECK(ext == (r == 1));
  }
}

/**
 * @file poly.cpp
 * @brief Sparse polynomial arithmetic implementation.
 */
#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace sing {

Exponent exp_of(std::initializer_list<unsigned> xs) {
  Exponent a;
  unsigned i = 0;
  for (unsigned x : xs) {
    check_internal(i < kMaxVars && x <= 0xffff, "exponent literal out of range");
    a.e[i++] = static_cast<uint16_t>(x);
  }
  return a;
}

int Frame::index_of(const std::string& name) const {
  for (unsigned i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Constructors and canonical-form maintenance
// ---------------------------------------------------------------------------

Poly Poly::monomial(const Field* F, unsigned n, const Exponent& a, const Scalar& c) {
  Poly f(F, n);
  f.add_term(a, c);
  return f;
}

Poly Poly::constant(const Field* F, unsigned n, const Scalar& c) {
  return monomial(F, n, Exponent{}, c);
}

Poly Poly::variable(const Field* F, unsigned n, unsigned i) {
  check_internal(i < n, "variable index out of range");
  Exponent a;
  a.e[i] = 1;
  return monomial(F, n, a, F->one());
}

void Poly::add_term(const Exponent& a, const Scalar& c) {
  if (F_->is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(a, c);
  if (!fresh) {
    it->second = F_->add(it->second, c);
    if (F_->is_zero(it->second)) terms_.erase(it);
  }
}

Scalar Poly::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? F_->zero() : it->second;
}

void Poly::require_compatible(const Poly& g) const {
  if (F_ != g.F_ || n_ != g.n_)
    fail(ErrCode::InvalidArg, "polynomials from different rings mixed in one operation");
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

Poly Poly::operator+(const Poly& g) const {
  require_compatible(g);
  Poly r = *this;
  for (const auto& [a, c] : g.terms_) r.add_term(a, c);
  return r;
}

Poly Poly::operator-(const Poly& g) const {
  require_compatible(g);
  Poly r = *this;
  for (const auto& [a, c] : g.terms_) r.add_term(a, F_->neg(c));
  return r;
}

Poly Poly::operator-() const {
  Poly r(F_, n_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, F_->neg(c));
  return r;
}

Poly Poly::operator*(const Poly& g) const {
  require_compatible(g);
  Poly r(F_, n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : g.terms_) r.add_term(a.plus(b), F_->mul(ca, cb));
  return r;
}

bool Poly::operator==(const Poly& g) const {
  if (F_ != g.F_ || n_ != g.n_) return false;
  if (terms_.size() != g.terms_.size()) return false;
  auto it = terms_.begin(), jt = g.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || !F_->eq(it->second, jt->second)) return false;
  }
  return true;
}

Poly Poly::scale(const Scalar& c) const {
  Poly r(F_, n_);
  if (F_->is_zero(c)) return r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(a, F_->mul(x, c));
  return r;
}

Poly Poly::mul_monomial(const Exponent& a, const Scalar& c) const {
  Poly r(F_, n_);
  if (F_->is_zero(c)) return r;
  for (const auto& [b, x] : terms_) r.terms_.emplace(b.plus(a), F_->mul(x, c));
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(F_, n_, F_->one());
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Degree bookkeeping and slicing
// ---------------------------------------------------------------------------

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
  return d;
}

unsigned Poly::degree_in(unsigned var) const {
  unsigned d = 0;
  for (const auto& [a, c] : terms_) d = std::max<unsigned>(d, a.e[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [a, c] : terms_)
    if (a.degree() != d) return false;
  return true;
}

bool Poly::pure_u(unsigned split) const {
  for (const auto& [a, c] : terms_)
    for (unsigned i = split; i < n_; ++i)
      if (a.e[i]) return false;
  return true;
}

Poly Poly::truncate(unsigned N) const {
  Poly r(F_, n_);
  for (const auto& [a, c] : terms_)
    if (a.degree() <= N) r.terms_.emplace(a, c);
  return r;
}

Poly Poly::homogeneous_part(unsigned d) const {
  Poly r(F_, n_);
  for (const auto& [a, c] : terms_)
    if (a.degree() == d) r.terms_.emplace(a, c);
  return r;
}

Poly Poly::coeff_in_var(unsigned var, unsigned k) const {
  Poly r(F_, n_);
  for (const auto& [a, c] : terms_) {
    if (a.e[var] != k) continue;
    Exponent b = a;
    b.e[var] = 0;
    r.terms_.emplace(b, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Order and initial form
// ---------------------------------------------------------------------------

std::optional<unsigned> ord_origin(const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  unsigned d = ~0u;
  for (const auto& [a, c] : f.terms()) d = std::min(d, a.degree());
  return d;
}

Poly initial_form(const Poly& f) {
  auto d = ord_origin(f);
  if (!d) fail(ErrCode::InvalidArg, "initial form of the zero polynomial");
  return f.homogeneous_part(*d);
}

// ---------------------------------------------------------------------------
// Hasse derivatives
// ---------------------------------------------------------------------------

Poly hasse_derivative(const Poly& f, unsigned var, unsigned i) {
  check_internal(var < f.nvars(), "derivative direction out of range");
  if (i == 0) return f;
  const Field* F = f.field();
  Poly r(F, f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (a.e[var] < i) continue;
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), a.e[var], i);
    Scalar k = F->mul(c, F->from_mpz(bin));
    if (F->is_zero(k)) continue;
    Exponent b = a;
    b.e[var] = static_cast<uint16_t>(a.e[var] - i);
    r.add_term(b, k);
  }
  return r;
}

Poly hasse_derivative_multi(const Poly& f, const Exponent& a) {
  Poly r = f;
  for (unsigned i = 0; i < f.nvars(); ++i)
    if (a.e[i]) r = hasse_derivative(r, i, a.e[i]);
  return r;
}

// ---------------------------------------------------------------------------
// Composition, substitution, evaluation
// ---------------------------------------------------------------------------

Poly compose(const Poly& f, const std::vector<Poly>& images) {
  if (images.size() != f.nvars())
    fail(ErrCode::InvalidArg, "composition needs one image per variable");
  if (images.empty()) return f;
  const Field* F = images[0].field();
  unsigned tn = images[0].nvars();
  for (const auto& g : images)
    if (g.field() != F || g.nvars() != tn)
      fail(ErrCode::InvalidArg, "composition images live in different rings");
  if (F != f.field()) fail(ErrCode::InvalidArg, "composition across coefficient fields");

  // Per-variable power cache; exponents repeat heavily across terms.
  std::vector<std::vector<Poly>> pw(f.nvars());
  auto power = [&](unsigned i, unsigned k) -> const Poly& {
    auto& col = pw[i];
    if (col.empty()) col.push_back(Poly::constant(F, tn, F->one()));
    while (col.size() <= k) col.push_back(col.back() * images[i]);
    return col[k];
  };

  Poly r(F, tn);
  for (const auto& [a, c] : f.terms()) {
    Poly t = Poly::constant(F, tn, c);
    for (unsigned i = 0; i < f.nvars(); ++i)
      if (a.e[i]) t = t * power(i, a.e[i]);
    r = r + t;
  }
  return r;
}

Poly compose_trunc(const Poly& f, const std::vector<Poly>& images, unsigned N) {
  if (images.size() != f.nvars())
    fail(ErrCode::InvalidArg, "composition needs one image per variable");
  if (images.empty()) return f.truncate(N);
  const Field* F = images[0].field();
  unsigned tn = images[0].nvars();
  for (const auto& g : images)
    if (g.field() != F || g.nvars() != tn)
      fail(ErrCode::InvalidArg, "composition images live in different rings");
  if (F != f.field()) fail(ErrCode::InvalidArg, "composition across coefficient fields");

  std::vector<std::vector<Poly>> pw(f.nvars());
  auto power = [&](unsigned i, unsigned k) -> const Poly& {
    auto& col = pw[i];
    if (col.empty()) col.push_back(Poly::constant(F, tn, F->one()));
    while (col.size() <= k) col.push_back((col.back() * images[i]).truncate(N));
    return col[k];
  };

  Poly r(F, tn);
  for (const auto& [a, c] : f.terms()) {
    Poly t = Poly::constant(F, tn, c);
    for (unsigned i = 0; i < f.nvars() && !t.is_zero(); ++i)
      if (a.e[i]) t = (t * power(i, a.e[i])).truncate(N);
    r = r + t;
  }
  return r;
}

Poly substitute(const Poly& f, const std::vector<std::pair<unsigned, Poly>>& assignment) {
  std::vector<Poly> images;
  images.reserve(f.nvars());
  for (unsigned i = 0; i < f.nvars(); ++i)
    images.push_back(Poly::variable(f.field(), f.nvars(), i));
  for (const auto& [var, g] : assignment) {
    check_internal(var < f.nvars(), "substituted variable out of range");
    images[var] = g;
  }
  return compose(f, images);
}

Scalar eval_at(const Poly& f, const std::vector<Scalar>& point) {
  if (point.size() != f.nvars()) fail(ErrCode::InvalidArg, "evaluation point has wrong arity");
  const Field* F = f.field();
  Scalar acc = F->zero();
  for (const auto& [a, c] : f.terms()) {
    Scalar t = c;
    for (unsigned i = 0; i < f.nvars(); ++i)
      if (a.e[i]) t = F->mul(t, F->pow(point[i], a.e[i]));
    acc = F->add(acc, t);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Exact division and resultants
// ---------------------------------------------------------------------------

namespace {

/// Graded-lex maximal term (total degree first, then the exponent order).
std::map<Exponent, Scalar>::const_iterator grlex_leading(const Poly& f) {
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
    unsigned db = best->first.degree(), di = it->first.degree();
    if (di > db || (di == db && best->first < it->first)) best = it;
  }
  return best;
}

}  // namespace

Poly divide_exact(const Poly& a, const Poly& b) {
  check_internal(!b.is_zero(), "exact division by zero");
  const Field* F = a.field();
  Poly q(F, a.nvars());
  Poly r = a;
  auto ltb = grlex_leading(b);
  while (!r.is_zero()) {
    auto ltr = grlex_leading(r);
    check_internal(ltb->first.divides(ltr->first), "non-exact division in elimination step");
    Exponent m = ltr->first.minus(ltb->first);
    Scalar c = F->div(ltr->second, ltb->second);
    q.add_term(m, c);
    r = r - b.mul_monomial(m, c);
  }
  return q;
}

Poly resultant_in(const Poly& f, const Poly& g, unsigned var) {
  unsigned df = f.degree_in(var), dg = g.degree_in(var);
  if (df == 0 || dg == 0)
    fail(ErrCode::InvalidArg, "resultant needs positive degree in the eliminated variable");
  const Field* F = f.field();
  unsigned n = f.nvars();
  unsigned s = df + dg;

  // Sylvester matrix over the remaining variables.
  std::vector<std::vector<Poly>> M(s, std::vector<Poly>(s, Poly(F, n)));
  for (unsigned i = 0; i < dg; ++i)
    for (unsigned j = 0; j <= df; ++j) M[i][i + j] = f.coeff_in_var(var, df - j);
  for (unsigned i = 0; i < df; ++i)
    for (unsigned j = 0; j <= dg; ++j) M[dg + i][i + j] = g.coeff_in_var(var, dg - j);

  // Fraction-free elimination: every division below is exact over a domain.
  int sign = 1;
  Poly prev = Poly::constant(F, n, F->one());
  for (unsigned k = 0; k + 1 < s; ++k) {
    unsigned piv = k;
    while (piv < s && M[piv][k].is_zero()) ++piv;
    if (piv == s) return Poly(F, n);  // singular: resultant is zero
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (unsigned i = k + 1; i < s; ++i) {
      for (unsigned j = k + 1; j < s; ++j)
        M[i][j] = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly(F, n);
    }
    prev = M[k][k];
  }
  Poly det = M[s - 1][s - 1];
  return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Series inversion and roots
// ---------------------------------------------------------------------------

TruncSeries invert_unit(const Poly& f, const Frame& frame) {
  const Field* F = f.field();
  Scalar c0 = f.coeff(Exponent{});
  if (F->is_zero(c0)) fail(ErrCode::Precondition, "inverting a non-unit (zero constant term)");
  unsigned N = frame.N;
  Poly one = Poly::constant(F, f.nvars(), F->one());
  Poly g = Poly::constant(F, f.nvars(), F->inv(c0));
  // Newton step g <- g*(1 + e) with e = 1 - f*g doubles the order of e and
  // works in every characteristic.
  Poly e = (one - f * g).truncate(N);
  while (!e.is_zero()) {
    g = (g * (one + e)).truncate(N);
    e = (one - f * g).truncate(N);
  }
  return {g, N};
}

std::optional<Poly> poly_pth_root(const Poly& f, unsigned long p) {
  const Field* F = f.field();
  Poly r(F, f.nvars());
  for (const auto& [a, c] : f.terms()) {
    Exponent b;
    for (unsigned i = 0; i < kMaxVars; ++i) {
      if (a.e[i] % p) return std::nullopt;
      b.e[i] = static_cast<uint16_t>(a.e[i] / p);
    }
    auto rc = F->maybe_root(c, p);
    if (!rc) return std::nullopt;
    r.add_term(b, *rc);
  }
  return r;
}

Poly embed_poly(const Poly& f, const Field* target) {
  if (f.field() == target) return f;
  Poly r(target, f.nvars());
  for (const auto& [a, c] : f.terms()) r.add_term(a, target->embed(c));
  return r;
}

Poly extend_ring(const Poly& f, unsigned new_n) {
  check_internal(new_n >= f.nvars() && new_n <= kMaxVars, "ring extension shrinks or overflows");
  Poly r(f.field(), new_n);
  for (const auto& [a, c] : f.terms()) r.add_term(a, c);
  return r;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string Poly::str(const Frame& frame) const { return str(frame.names); }

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  check_internal(names.size() >= n_, "not enough variable names to print");

  std::vector<std::pair<Exponent, Scalar>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    unsigned dx = x.first.degree(), dy = y.first.degree();
    if (dx != dy) return dx < dy;
    return y.first < x.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : ts) {
    std::string cs = F_->str(c);
    bool negated = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    std::string mono;
    for (unsigned i = 0; i < n_; ++i) {
      if (!a.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (a.e[i] > 1) mono += "^" + std::to_string(a.e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else {
      bool needs_parens = cs.find_first_of("+-/") != std::string::npos;
      term = (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (first) {
      os << (negated ? "-" : "") << term;
      first = false;
    } else {
      os << (negated ? " - " : " + ") << term;
    }
  }
  return os.str();
}

}  // namespace sing

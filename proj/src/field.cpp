/**
 * @file field.cpp
 * @brief Field arithmetic: mpq rationals, word-sized mod-p, F_p[w]/(f), and
 *        reduced fractions over F_p[t].
 */
#include "field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace sing {

// ---------------------------------------------------------------------------
// mod-p word arithmetic (p < 2^31, so products fit in uint64_t)
// ---------------------------------------------------------------------------

namespace {

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t powm(uint64_t a, uint64_t k, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    k >>= 1;
  }
  return r;
}

uint64_t invm(uint64_t a, uint64_t p) {
  if (a % p == 0) fail(ErrCode::InvalidArg, "division by zero in F_p");
  // Fermat: p is validated prime.
  return powm(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for n < 3.3e24 with these bases; far beyond 2^31.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powm(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulm(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// --- dense univariate arithmetic over F_p ---------------------------------

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = addm(x, y, p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = subm(x, y, p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, uint64_t c, uint64_t p) {
  FpPoly r = a;
  for (auto& x : r) x = mulm(x, c, p);
  fp_trim(r);
  return r;
}

/// Division with remainder; b nonzero.
void fp_divrem(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& q, FpPoly& r) {
  r = a;
  q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  uint64_t binv = invm(b.back(), p);
  while (r.size() >= b.size()) {
    uint64_t c = mulm(r.back(), binv, p);
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = subm(r[shift + i], mulm(c, b[i], p), p);
    fp_trim(r);
    if (r.size() >= b.size() && r.size() + b.size() == 0) break;  // unreachable guard
  }
  fp_trim(q);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, uint64_t p) {
  FpPoly q, r;
  fp_divrem(a, b, p, q, r);
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = fp_scale(a, invm(a.back(), p), p);
  return a;
}

/// Extended gcd restricted to what inversion needs: returns s with
/// s*a = gcd (mod m).
FpPoly fp_inv_mod(const FpPoly& a, const FpPoly& m, uint64_t p) {
  FpPoly r0 = m, r1 = fp_mod(a, m, p);
  FpPoly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    FpPoly q, r2;
    fp_divrem(r0, r1, p, q, r2);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(ErrCode::InvalidArg, "division by a zero divisor in F_q");
  return fp_mod(fp_scale(s0, invm(r0[0], p), p), m, p);
}

FpPoly fp_powmod(FpPoly a, uint64_t k, const FpPoly& m, uint64_t p) {
  FpPoly r = {1};
  a = fp_mod(a, m, p);
  while (k) {
    if (k & 1) r = fp_mod(fp_mul(r, a, p), m, p);
    a = fp_mod(fp_mul(a, a, p), m, p);
    k >>= 1;
  }
  return r;
}

bool fp_irreducible(const FpPoly& f, uint64_t p) {
  // Distinct-degree criterion: f (monic, degree e) is irreducible iff
  // x^(p^e) = x mod f and gcd(x^(p^d) - x, f) = 1 for every proper divisor d.
  unsigned e = static_cast<unsigned>(f.size() - 1);
  if (e == 0) return false;
  FpPoly x = {0, 1};
  FpPoly fr = fp_mod(x, f, p);  // Frobenius iterate x^(p^i)
  for (unsigned i = 1; i <= e; ++i) {
    fr = fp_powmod(fr, p, f, p);
    bool divides_e = (e % i) == 0;
    if (i < e && divides_e) {
      FpPoly g = fp_gcd(fp_sub(fr, x, p), f, p);
      if (g.size() != 1) return false;
    }
    if (i == e) {
      if (!fp_sub(fr, x, p).empty()) return false;
    }
  }
  return true;
}

std::string fp_poly_str(const FpPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0) {
      if (a[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "Fp:" + std::to_string(p);
    case FieldKind::ExtField:
      return "Fq:" + std::to_string(p) + "^" + std::to_string(e);
    case FieldKind::RationalFunctions:
      return "Fpt:" + std::to_string(p);
  }
  return "?";
}

FpPoly default_modulus(uint64_t p, unsigned e) {
  // Enumerate monic degree-e polynomials by their coefficient vector read as
  // a base-p number (constant digit least significant); first irreducible wins.
  uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) {
    count *= p;
    if (count > (1ULL << 40)) fail(ErrCode::Unsupported, "extension field too large for modulus search");
  }
  for (uint64_t code = 0; code < count; ++code) {
    FpPoly f(e + 1, 0);
    uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[e] = 1;
    if (fp_irreducible(f, p)) return f;
  }
  fail(ErrCode::Internal, "no irreducible modulus found");
}

FieldSpec parse_field_spec(const std::string& text) {
  auto parse_u64 = [&](const std::string& s) -> uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrCode::Parse, "bad number in field spec: '" + text + "'");
    return std::stoull(s);
  };
  FieldSpec spec;
  if (text == "Q") {
    spec.kind = FieldKind::Rationals;
    return spec;
  }
  if (text.rfind("Fp:", 0) == 0) {
    spec.kind = FieldKind::PrimeField;
    spec.p = parse_u64(text.substr(3));
    return spec;
  }
  if (text.rfind("Fpt:", 0) == 0) {
    spec.kind = FieldKind::RationalFunctions;
    spec.p = parse_u64(text.substr(4));
    return spec;
  }
  if (text.rfind("Fq:", 0) == 0) {
    auto caret = text.find('^');
    if (caret == std::string::npos) fail(ErrCode::Parse, "Fq spec needs p^e: '" + text + "'");
    spec.kind = FieldKind::ExtField;
    spec.p = parse_u64(text.substr(3, caret - 3));
    spec.e = static_cast<unsigned>(parse_u64(text.substr(caret + 1)));
    return spec;
  }
  if (text.size() > 1 && text[0] == 'F' &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    spec.kind = FieldKind::PrimeField;
    spec.p = parse_u64(text.substr(1));
    return spec;
  }
  fail(ErrCode::Parse, "unrecognized field spec: '" + text + "'");
}

// ---------------------------------------------------------------------------
// Field interning and validation
// ---------------------------------------------------------------------------

const Field* Field::get(const FieldSpec& spec_in) {
  FieldSpec spec = spec_in;
  if (spec.kind != FieldKind::Rationals) {
    if (spec.p >= (1ULL << 31)) fail(ErrCode::Unsupported, "characteristic must be < 2^31");
    if (!is_prime_u64(spec.p)) fail(ErrCode::InvalidArg, "characteristic is not prime: " + std::to_string(spec.p));
  }
  if (spec.kind == FieldKind::ExtField) {
    if (spec.e < 1 || spec.e > 16) fail(ErrCode::Unsupported, "extension degree out of range");
    if (spec.modulus.empty()) spec.modulus = default_modulus(spec.p, spec.e);
    if (spec.modulus.size() != spec.e + 1 || spec.modulus.back() != 1 || !fp_irreducible(spec.modulus, spec.p))
      fail(ErrCode::InvalidArg, "modulus is not monic irreducible of the declared degree");
  } else {
    spec.e = 1;
    spec.modulus.clear();
  }

  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Field>>* cache =
      new std::map<std::string, std::unique_ptr<Field>>;
  std::string key = spec.str();
  if (spec.kind == FieldKind::ExtField) {
    key += "/";
    for (uint64_t c : spec.modulus) key += std::to_string(c) + ",";
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(key);
  if (it == cache->end()) it = cache->emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
  return it->second.get();
}

const Field* common_field(const Scalar& a, const Scalar& b) {
  if (a.F != b.F) fail(ErrCode::InvalidArg, "scalars from different fields mixed in one operation");
  return a.F;
}

uint64_t Field::size() const {
  if (spec_.kind == FieldKind::PrimeField) return spec_.p;
  if (spec_.kind == FieldKind::ExtField) {
    uint64_t n = 1;
    for (unsigned i = 0; i < spec_.e; ++i) {
      if (n > (1ULL << 40)) return 0;
      n *= spec_.p;
    }
    return n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Element constructors
// ---------------------------------------------------------------------------

Scalar Field::zero() const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, Rat(0)};
    case FieldKind::PrimeField:
      return {this, uint64_t{0}};
    case FieldKind::ExtField:
      return {this, FqVal{std::vector<uint64_t>(spec_.e, 0)}};
    case FieldKind::RationalFunctions:
      return {this, FptVal{{}, {1}}};
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, Rat(n)};
    case FieldKind::PrimeField: {
      long m = n % static_cast<long>(spec_.p);
      if (m < 0) m += static_cast<long>(spec_.p);
      return {this, static_cast<uint64_t>(m)};
    }
    case FieldKind::ExtField: {
      FqVal v{std::vector<uint64_t>(spec_.e, 0)};
      long m = n % static_cast<long>(spec_.p);
      if (m < 0) m += static_cast<long>(spec_.p);
      v.c[0] = static_cast<uint64_t>(m);
      return {this, v};
    }
    case FieldKind::RationalFunctions: {
      long m = n % static_cast<long>(spec_.p);
      if (m < 0) m += static_cast<long>(spec_.p);
      FptVal v;
      if (m != 0) v.num = {static_cast<uint64_t>(m)};
      v.den = {1};
      return {this, v};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (spec_.kind == FieldKind::Rationals) return {this, Rat(n)};
  uint64_t m = mpz_fdiv_ui(n.get_mpz_t(), spec_.p);
  switch (spec_.kind) {
    case FieldKind::PrimeField:
      return {this, m};
    case FieldKind::ExtField: {
      FqVal v{std::vector<uint64_t>(spec_.e, 0)};
      v.c[0] = m;
      return {this, v};
    }
    case FieldKind::RationalFunctions: {
      FptVal v;
      if (m) v.num = {m};
      v.den = {1};
      return {this, v};
    }
    default:
      fail(ErrCode::Internal, "bad field kind");
  }
}

Scalar Field::from_rat(const Rat& r) const {
  if (spec_.kind != FieldKind::Rationals) fail(ErrCode::InvalidArg, "from_rat on a non-rational field");
  Rat c = r;
  c.canonicalize();
  return {this, c};
}

Scalar Field::fpt_t() const {
  if (spec_.kind != FieldKind::RationalFunctions) fail(ErrCode::InvalidArg, "t is only a constant over F_p(t)");
  return {this, FptVal{{0, 1}, {1}}};
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

namespace {
FptVal fpt_reduce(FpPoly num, FpPoly den, uint64_t p) {
  if (den.empty()) fail(ErrCode::InvalidArg, "division by zero in F_p(t)");
  if (num.empty()) return {{}, {1}};
  FpPoly g = fp_gcd(num, den, p);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    FpPoly q, r;
    fp_divrem(num, g, p, q, r);
    num = q;
    fp_divrem(den, g, p, q, r);
    den = q;
  }
  uint64_t lc = den.back();
  if (lc != 1) {
    uint64_t il = invm(lc, p);
    num = fp_scale(num, il, p);
    den = fp_scale(den, il, p);
  }
  return {num, den};
}
}  // namespace

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, std::get<Rat>(a.v) + std::get<Rat>(b.v)};
    case FieldKind::PrimeField:
      return {this, addm(std::get<uint64_t>(a.v), std::get<uint64_t>(b.v), spec_.p)};
    case FieldKind::ExtField: {
      FqVal r = std::get<FqVal>(a.v);
      const FqVal& y = std::get<FqVal>(b.v);
      for (unsigned i = 0; i < spec_.e; ++i) r.c[i] = addm(r.c[i], y.c[i], spec_.p);
      return {this, r};
    }
    case FieldKind::RationalFunctions: {
      const FptVal& x = std::get<FptVal>(a.v);
      const FptVal& y = std::get<FptVal>(b.v);
      FpPoly num = fp_add(fp_mul(x.num, y.den, spec_.p), fp_mul(y.num, x.den, spec_.p), spec_.p);
      return {this, fpt_reduce(std::move(num), fp_mul(x.den, y.den, spec_.p), spec_.p)};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::neg(const Scalar& a) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, Rat(-std::get<Rat>(a.v))};
    case FieldKind::PrimeField:
      return {this, subm(0, std::get<uint64_t>(a.v), spec_.p)};
    case FieldKind::ExtField: {
      FqVal r = std::get<FqVal>(a.v);
      for (auto& c : r.c) c = subm(0, c, spec_.p);
      return {this, r};
    }
    case FieldKind::RationalFunctions: {
      FptVal r = std::get<FptVal>(a.v);
      r.num = fp_scale(r.num, spec_.p - 1, spec_.p);
      return {this, r};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, std::get<Rat>(a.v) * std::get<Rat>(b.v)};
    case FieldKind::PrimeField:
      return {this, mulm(std::get<uint64_t>(a.v), std::get<uint64_t>(b.v), spec_.p)};
    case FieldKind::ExtField: {
      const FqVal& x = std::get<FqVal>(a.v);
      const FqVal& y = std::get<FqVal>(b.v);
      FpPoly prod = fp_mul(FpPoly(x.c.begin(), x.c.end()), FpPoly(y.c.begin(), y.c.end()), spec_.p);
      FpPoly red = fp_mod(prod, spec_.modulus, spec_.p);
      FqVal r{std::vector<uint64_t>(spec_.e, 0)};
      for (size_t i = 0; i < red.size(); ++i) r.c[i] = red[i];
      return {this, r};
    }
    case FieldKind::RationalFunctions: {
      const FptVal& x = std::get<FptVal>(a.v);
      const FptVal& y = std::get<FptVal>(b.v);
      return {this, fpt_reduce(fp_mul(x.num, y.num, spec_.p), fp_mul(x.den, y.den, spec_.p), spec_.p)};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) fail(ErrCode::InvalidArg, "inverse of zero");
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return {this, Rat(1) / std::get<Rat>(a.v)};
    case FieldKind::PrimeField:
      return {this, invm(std::get<uint64_t>(a.v), spec_.p)};
    case FieldKind::ExtField: {
      const FqVal& x = std::get<FqVal>(a.v);
      FpPoly xi(x.c.begin(), x.c.end());
      fp_trim(xi);
      FpPoly r = fp_inv_mod(xi, spec_.modulus, spec_.p);
      FqVal out{std::vector<uint64_t>(spec_.e, 0)};
      for (size_t i = 0; i < r.size(); ++i) out.c[i] = r[i];
      return {this, out};
    }
    case FieldKind::RationalFunctions: {
      const FptVal& x = std::get<FptVal>(a.v);
      return {this, fpt_reduce(x.den, x.num, spec_.p)};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, unsigned long k) const {
  Scalar r = one(), base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool Field::is_zero(const Scalar& a) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return std::get<Rat>(a.v) == 0;
    case FieldKind::PrimeField:
      return std::get<uint64_t>(a.v) == 0;
    case FieldKind::ExtField: {
      for (uint64_t c : std::get<FqVal>(a.v).c)
        if (c) return false;
      return true;
    }
    case FieldKind::RationalFunctions:
      return std::get<FptVal>(a.v).num.empty();
  }
  fail(ErrCode::Internal, "bad field kind");
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const { return a.v == b.v; }

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

Scalar Field::pth_root(const Scalar& a, unsigned e) const {
  if (spec_.kind == FieldKind::Rationals || spec_.kind == FieldKind::RationalFunctions)
    fail(ErrCode::Unsupported, "p-th roots via Frobenius need a perfect field of characteristic p (" +
                                   spec_.str() + " given)");
  if (spec_.kind == FieldKind::PrimeField) return a;  // Frobenius is the identity on F_p
  // F_{p^e'}: Frobenius has order e'; the inverse of its k-fold power is the
  // (e' - k mod e')-fold power.
  unsigned order = spec_.e;
  unsigned k = e % order;
  Scalar r = a;
  for (unsigned i = 0; i < (order - k) % order; ++i) r = pow(r, spec_.p);
  return r;
}

std::optional<Scalar> Field::maybe_root(const Scalar& a, unsigned long p) const {
  if (p == 1 || is_zero(a)) return a;
  switch (spec_.kind) {
    case FieldKind::Rationals: {
      const Rat& r = std::get<Rat>(a.v);
      if (sgn(r) < 0 && p % 2 == 0) return std::nullopt;
      mpz_class num = r.get_num(), den = r.get_den();
      bool negate = sgn(num) < 0;
      if (negate) num = -num;
      mpz_class rn, rd;
      if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), p)) return std::nullopt;
      if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), p)) return std::nullopt;
      Rat out(negate ? -rn : rn, rd);
      out.canonicalize();
      return Scalar{this, out};
    }
    case FieldKind::PrimeField:
    case FieldKind::ExtField: {
      if (p != spec_.p) {
        // Only characteristic-power roots needed; fall back to brute force on
        // small fields for exotic requests.
        uint64_t n = size();
        if (n == 0 || n > 65536) return std::nullopt;
        for (uint64_t i = 0; i < n; ++i) {
          Scalar c = element(i);
          if (eq(pow(c, p), a)) return c;
        }
        return std::nullopt;
      }
      return pth_root(a, 1);
    }
    case FieldKind::RationalFunctions: {
      if (p != spec_.p) return std::nullopt;
      const FptVal& x = std::get<FptVal>(a.v);
      auto root_poly = [&](const FpPoly& f) -> std::optional<FpPoly> {
        FpPoly r;
        for (size_t i = 0; i < f.size(); ++i) {
          if (f[i] == 0) continue;
          if (i % p != 0) return std::nullopt;
          if (r.size() <= i / p) r.resize(i / p + 1, 0);
          r[i / p] = f[i];  // Frobenius fixes F_p coefficients
        }
        return r;
      };
      auto rn = root_poly(x.num), rd = root_poly(x.den);
      if (!rn || !rd) return std::nullopt;
      return Scalar{this, fpt_reduce(std::move(*rn), std::move(*rd), spec_.p)};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

// ---------------------------------------------------------------------------
// Sampling / enumeration / embedding / printing
// ---------------------------------------------------------------------------

Scalar Field::sample(Rng& rng) const {
  switch (spec_.kind) {
    case FieldKind::Rationals: {
      long num = rng.centered(1000);
      long den = static_cast<long>(rng.below(1000)) + 1;
      Rat r(num, den);
      r.canonicalize();
      return {this, r};
    }
    case FieldKind::PrimeField:
      return {this, rng.below(spec_.p)};
    case FieldKind::ExtField: {
      FqVal v{std::vector<uint64_t>(spec_.e)};
      for (auto& c : v.c) c = rng.below(spec_.p);
      return {this, v};
    }
    case FieldKind::RationalFunctions: {
      // Low-degree numerator over a trivial denominator: cheap, and distinct
      // draws are plentiful because the degree grows with collisions elsewhere.
      FpPoly num(3, 0);
      for (auto& c : num) c = rng.below(spec_.p);
      fp_trim(num);
      return {this, FptVal{num, {1}}};
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

Scalar Field::element(uint64_t index) const {
  switch (spec_.kind) {
    case FieldKind::PrimeField:
      return {this, index % spec_.p};
    case FieldKind::ExtField: {
      FqVal v{std::vector<uint64_t>(spec_.e, 0)};
      for (unsigned i = 0; i < spec_.e; ++i) {
        v.c[i] = index % spec_.p;
        index /= spec_.p;
      }
      return {this, v};
    }
    default:
      fail(ErrCode::InvalidArg, "element enumeration needs a finite field");
  }
}

Scalar Field::embed(const Scalar& a) const {
  if (a.F == this) return a;
  const FieldSpec& from = a.F->spec();
  if (from.kind == FieldKind::PrimeField && spec_.p == from.p) {
    if (spec_.kind == FieldKind::ExtField) {
      FqVal v{std::vector<uint64_t>(spec_.e, 0)};
      v.c[0] = std::get<uint64_t>(a.v);
      return {this, v};
    }
    if (spec_.kind == FieldKind::RationalFunctions) {
      uint64_t c = std::get<uint64_t>(a.v);
      FptVal v;
      if (c) v.num = {c};
      v.den = {1};
      return {this, v};
    }
  }
  fail(ErrCode::Unsupported,
       "no embedding " + from.str() + " -> " + spec_.str());
}

std::string Field::str(const Scalar& a) const {
  switch (spec_.kind) {
    case FieldKind::Rationals:
      return std::get<Rat>(a.v).get_str();
    case FieldKind::PrimeField:
      return std::to_string(std::get<uint64_t>(a.v));
    case FieldKind::ExtField: {
      FpPoly c(std::get<FqVal>(a.v).c.begin(), std::get<FqVal>(a.v).c.end());
      fp_trim(c);
      return fp_poly_str(c, "w");
    }
    case FieldKind::RationalFunctions: {
      const FptVal& x = std::get<FptVal>(a.v);
      std::string n = fp_poly_str(x.num, "t");
      if (x.den.size() == 1 && x.den[0] == 1) return n;
      return "(" + n + ")/(" + fp_poly_str(x.den, "t") + ")";
    }
  }
  fail(ErrCode::Internal, "bad field kind");
}

}  // namespace sing

/**
 * @file field.hpp
 * @brief Exact coefficient fields and their elements.
 *
 * Four field families are supported:
 *   - Q              : rationals (GMP mpq),
 *   - Fp:<p>         : prime fields, p an odd-or-even prime < 2^31,
 *   - Fq:<p>^<e>     : finite extension fields F_p[w]/(modulus),
 *   - Fpt:<p>        : rational functions F_p(t), reduced fractions of dense
 *                      univariate polynomials with monic denominator.
 *
 * Field objects are interned: one immutable instance per spec, safe to share
 * across threads.  A Scalar carries a pointer to its field plus the value;
 * mixing scalars of different fields in one operation is an error, never a
 * silent coercion.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "rat.hpp"
#include "rng.hpp"

namespace sing {

enum class FieldKind { Rationals, PrimeField, ExtField, RationalFunctions };

/// Dense univariate polynomial over F_p: coefficient of t^i at index i,
/// no trailing (highest-degree) zeros, empty vector = 0.
using FpPoly = std::vector<uint64_t>;

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  uint64_t p = 0;        ///< characteristic (0 for Q)
  unsigned e = 1;        ///< extension degree (ExtField only)
  FpPoly modulus;        ///< ExtField only: monic irreducible, degree e

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p && e == o.e && modulus == o.modulus;
  }
  std::string str() const;  ///< canonical text form ("Q", "Fp:5", "Fq:2^2", "Fpt:3")
};

/// Extension-field element: e coefficients over F_p (dense, fixed length e).
struct FqVal {
  std::vector<uint64_t> c;
  bool operator==(const FqVal& o) const { return c == o.c; }
};

/// Rational-function element: num/den with den monic and gcd(num, den) = 1.
struct FptVal {
  FpPoly num, den;
  bool operator==(const FptVal& o) const { return num == o.num && den == o.den; }
};

class Field;

struct Scalar {
  const Field* F = nullptr;
  std::variant<Rat, uint64_t, FqVal, FptVal> v;
};

class Field {
public:
  /// Interned lookup; validates the spec (primality, modulus irreducibility)
  /// on first use.  The returned pointer lives for the process lifetime.
  static const Field* get(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  uint64_t characteristic() const { return spec_.kind == FieldKind::Rationals ? 0 : spec_.p; }
  bool is_finite() const {
    return spec_.kind == FieldKind::PrimeField || spec_.kind == FieldKind::ExtField;
  }
  bool is_perfect() const { return spec_.kind != FieldKind::RationalFunctions; }
  /// Number of elements for finite fields (0 = infinite or too large to fit).
  uint64_t size() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_mpz(const mpz_class& n) const;  ///< image of an integer in any field
  Scalar from_rat(const Rat& r) const;        ///< Q only

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  ///< errors on zero
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, unsigned long k) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  /// Iterated Frobenius inverse a^(1/p^e).  Defined on perfect fields of
  /// positive characteristic only; calling it on Q or F_p(t) is an error.
  Scalar pth_root(const Scalar& a, unsigned e) const;

  /// Best-effort single-step p-th root for any field where the question makes
  /// sense: exact rational root over Q (p arbitrary), Frobenius inverse over
  /// F_p / F_q, and the t-power test over F_p(t).  Returns nullopt when the
  /// element is not a p-th power in the field.
  std::optional<Scalar> maybe_root(const Scalar& a, unsigned long p) const;

  /// Seeded sample.  Q: numerator and denominator bounded by 1000.
  /// F_p(t): low-degree polynomial numerators so distinct draws abound.
  Scalar sample(Rng& rng) const;

  /// Deterministic enumeration of the field (finite fields only): index in
  /// [0, size()).  Used by the small-field exhaustive solver.
  Scalar element(uint64_t index) const;

  /// Embed a scalar of a smaller compatible field (F_p into F_{p^e} or
  /// F_p(t); identity embedding otherwise).  Errors when no embedding exists.
  Scalar embed(const Scalar& a) const;

  std::string str(const Scalar& a) const;

  // --- F_p(t) internals shared with the parser (t as a reserved constant) ---
  Scalar fpt_t() const;  ///< the transcendental t as a scalar (Fpt only)

private:
  explicit Field(const FieldSpec& s) : spec_(s) {}
  FieldSpec spec_;
};

// Convenience operators; both operands must belong to the same field.
const Field* common_field(const Scalar& a, const Scalar& b);
inline Scalar operator+(const Scalar& a, const Scalar& b) { return common_field(a, b)->add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return common_field(a, b)->sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return common_field(a, b)->mul(a, b); }
inline Scalar operator-(const Scalar& a) { return a.F->neg(a); }
inline bool operator==(const Scalar& a, const Scalar& b) { return common_field(a, b)->eq(a, b); }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

/// Parse the field grammar: Q | Fp:<p> | Fq:<p>^<e> | Fpt:<p>, plus the
/// F<digits> shorthand for prime fields.
FieldSpec parse_field_spec(const std::string& text);

/// Lexicographically least monic irreducible of degree e over F_p (the
/// deterministic default modulus for Fq specs that do not pin one).
FpPoly default_modulus(uint64_t p, unsigned e);

}  // namespace sing

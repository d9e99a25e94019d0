/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over an exact field: arithmetic,
 *        Hasse derivatives, composition, Sylvester resultants, and truncated
 *        power-series inversion.
 *
 * A Poly is a canonical finite map exponent -> nonzero Scalar.  Exponents are
 * fixed-width vectors (at most kMaxVars variables); the active variable count
 * n lives on the Poly and every operation insists its operands agree on both
 * the field and n.  Variable *names* are not part of a Poly — the Frame type
 * carries names plus the u/y split and the working precision, and the parser
 * and printers consult it.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace sing {

inline constexpr unsigned kMaxVars = 16;

/// Exponent vector, zero-padded to the fixed width.  Ordering is plain
/// lexicographic on the padded array, giving every Poly a deterministic term
/// order independent of insertion history.
struct Exponent {
  std::array<uint16_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (uint16_t x : e) d += x;
    return d;
  }
  bool operator==(const Exponent& o) const { return e == o.e; }
  bool operator<(const Exponent& o) const { return e < o.e; }
  /// Componentwise a <= b (the divisibility order on monomials).
  bool divides(const Exponent& o) const {
    for (unsigned i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Exponent plus(const Exponent& o) const {
    Exponent r;
    for (unsigned i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
      check_internal(s <= 0xffff, "exponent overflow");
      r.e[i] = static_cast<uint16_t>(s);
    }
    return r;
  }
  Exponent minus(const Exponent& o) const {
    Exponent r;
    for (unsigned i = 0; i < kMaxVars; ++i) {
      check_internal(e[i] >= o.e[i], "negative exponent");
      r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
    }
    return r;
  }
};

/// Build an exponent from a brace list (trailing variables default to 0).
Exponent exp_of(std::initializer_list<unsigned> xs);

/// Named coordinate system: u-block (indices [0, split)) then y-block
/// ([split, n)), plus the truncation degree used by series-level steps.
struct Frame {
  std::vector<std::string> names;
  unsigned split = 0;  ///< index of the first y-variable
  unsigned N = 64;     ///< precision: series results certified through degree N

  unsigned n() const { return static_cast<unsigned>(names.size()); }
  unsigned r() const { return n() - split; }  ///< y-block size
  int index_of(const std::string& name) const;  ///< -1 when absent
};

class Poly {
public:
  Poly() = default;
  Poly(const Field* F, unsigned n) : F_(F), n_(n) { check_internal(n <= kMaxVars, "too many variables"); }

  static Poly monomial(const Field* F, unsigned n, const Exponent& a, const Scalar& c);
  static Poly constant(const Field* F, unsigned n, const Scalar& c);
  static Poly variable(const Field* F, unsigned n, unsigned i);

  const Field* field() const { return F_; }
  unsigned nvars() const { return n_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Accumulate c * x^a, dropping the entry if the sum cancels.
  void add_term(const Exponent& a, const Scalar& c);
  /// Coefficient of x^a (zero scalar when absent).
  Scalar coeff(const Exponent& a) const;

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly operator-() const;
  bool operator==(const Poly& g) const;
  bool operator!=(const Poly& g) const { return !(*this == g); }

  Poly scale(const Scalar& c) const;
  Poly mul_monomial(const Exponent& a, const Scalar& c) const;
  Poly pow(unsigned k) const;

  /// Maximum total degree (-1 cast avoided: zero poly -> 0 by convention,
  /// callers guard with is_zero when the distinction matters).
  unsigned degree() const;
  unsigned degree_in(unsigned var) const;
  bool is_homogeneous() const;
  /// True when no term involves any variable with index >= split.
  bool pure_u(unsigned split) const;

  /// Terms of total degree <= N.
  Poly truncate(unsigned N) const;
  /// Homogeneous part of exact total degree d.
  Poly homogeneous_part(unsigned d) const;
  /// Coefficient of var^k, as a polynomial in the same ring with var absent.
  Poly coeff_in_var(unsigned var, unsigned k) const;

  std::string str(const Frame& frame) const;
  std::string str(const std::vector<std::string>& names) const;

private:
  const Field* F_ = nullptr;
  unsigned n_ = 0;
  std::map<Exponent, Scalar> terms_;

  void require_compatible(const Poly& g) const;
};

/// min{|a| : a in supp f}; nullopt iff f = 0.
std::optional<unsigned> ord_origin(const Poly& f);

/// Homogeneous part of degree ord_origin(f); error on f = 0.
Poly initial_form(const Poly& f);

/// i-th Hasse (divided-power) derivative in the given variable: coefficient
/// of T^i in f(..., x_var + T, ...).  Binomials are computed exactly and
/// mapped into the coefficient field, so characteristic-p collapse is exact.
Poly hasse_derivative(const Poly& f, unsigned var, unsigned i);

/// Multi-direction Hasse derivative, one variable at a time.
Poly hasse_derivative_multi(const Poly& f, const Exponent& a);

/// Image of f under x_i -> images[i]; all images share one (field, n) ring,
/// which becomes the ring of the result and may differ from f's.
Poly compose(const Poly& f, const std::vector<Poly>& images);

/// compose followed by truncation at total degree N, with the truncation
/// pushed inside every product so intermediate degrees never exceed N.
Poly compose_trunc(const Poly& f, const std::vector<Poly>& images, unsigned N);

/// Partial substitution: listed variables get replaced, others stay
/// themselves.  Images must live in f's own ring.
Poly substitute(const Poly& f, const std::vector<std::pair<unsigned, Poly>>& assignment);

/// Full evaluation at a scalar point.
Scalar eval_at(const Poly& f, const std::vector<Scalar>& point);

/// Sylvester resultant eliminating the given variable, computed by
/// fraction-free (Bareiss) elimination with exact polynomial division.
/// Errors unless both inputs have positive degree in var.
Poly resultant_in(const Poly& f, const Poly& g, unsigned var);

/// Exact quotient a/b; internal error if b does not divide a (used only where
/// divisibility is guaranteed, e.g. fraction-free elimination steps).
Poly divide_exact(const Poly& a, const Poly& b);

/// Polynomial with certified truncation degree: all terms of total degree
/// <= certified are exact, everything higher has been dropped.
struct TruncSeries {
  Poly value;
  unsigned certified = 0;
};

/// Power-series inverse of a unit (nonzero constant term), certified through
/// degree frame.N.  Constant polynomials invert exactly.
TruncSeries invert_unit(const Poly& f, const Frame& frame);

/// Exact p-th root when one exists: every exponent divisible by p and every
/// coefficient a p-th power (checked via the field's root machinery).
std::optional<Poly> poly_pth_root(const Poly& f, unsigned long p);

/// Coefficient-wise embedding into a ring over a larger field (same n).
Poly embed_poly(const Poly& f, const Field* target);

/// Same exponents, read in a ring with more variables.
Poly extend_ring(const Poly& f, unsigned new_n);

}  // namespace sing

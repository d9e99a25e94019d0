/**
 * @file cpx.hpp
 * @brief Minimal-support expansions: the support set S(f), unit-coefficient
 *        expansions, (u)-expansion detection, monomial valuations, and the
 *        truncated support-stability check under parameter translation.
 *
 * For f in the local ring at the origin there is a unique antichain S(f) of
 * componentwise-minimal exponents such that f = sum_{a in S(f)} c_a x^a with
 * every c_a a unit.  S(f) is canonical; the units depend on how non-minimal
 * terms are attributed, which is steered by a monomial order.
 */
#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"

namespace sing {

enum class MonomialOrder { Grlex, Lex };

/// Strict comparison under the chosen order.
bool mono_less(const Exponent& a, const Exponent& b, MonomialOrder order);

struct CPExpansion {
  std::vector<Exponent> support;   ///< S(f), sorted under the chosen order
  std::vector<Poly> units;         ///< unit c_a per support entry, same index
};

/// Componentwise-minimal exponents of the support (an antichain).
/// Errors on f = 0.
std::vector<Exponent> support_min(const Poly& f);

/// Expansion f = sum c_a x^a over S(f): each non-minimal term is attributed
/// to the order-least minimal exponent dividing it, so every c_a has nonzero
/// constant term and the expansion reassembles f exactly.
CPExpansion cp_expand(const Poly& f, MonomialOrder order = MonomialOrder::Grlex);

/// True iff every exponent of S(f) is supported on the u-block alone.
bool has_u_expansion(const Poly& f, const Frame& frame);

/// min over the support of the weighted degree; nullopt iff f = 0.
/// All weights must be >= 1 (so the minimum over S(f) equals the minimum
/// over the full support).
std::optional<unsigned long> monomial_valuation(const Poly& f, const std::vector<unsigned>& weights);

/// S(f) relative to the regular parameter system given by params (one
/// polynomial per variable, zero constant term, invertible linear part),
/// intersected with {|a| <= N}: f is rewritten in the parameters modulo
/// degree N+1 via fixpoint inversion and the minimal exponents are taken.
std::vector<Exponent> truncated_support(const Poly& f, const std::vector<Poly>& params, unsigned N);

/// Executable form of the support-stability law: two parameter systems that
/// agree modulo degree N+1 yield the same S(f) below degree N.  Errors when
/// some z_j - y_j has order <= N.
bool check_truncated_support_equality(const Poly& f, const std::vector<Poly>& ys,
                                      const std::vector<Poly>& zs, unsigned N);

}  // namespace sing

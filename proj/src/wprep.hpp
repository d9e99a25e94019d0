/**
 * @file wprep.hpp
 * @brief Pseudo-Weierstrass preparation with respect to a frame (u | y):
 *        v*f = y^l + a_1(u) y^(l-1) + ... + a_l(u), certified through the
 *        frame's precision, plus the certified orders of the coefficients.
 */
#pragma once

#include <optional>
#include <vector>

#include "nuvalue.hpp"
#include "poly.hpp"

namespace sing {

struct PseudoWeierstrass {
  unsigned ell = 0;            ///< preparation degree
  unsigned yvar = 0;           ///< index of the distinguished variable
  std::vector<TruncSeries> a;  ///< a[i-1] = a_i, free of the distinguished
                               ///< variable, certified to degree N - (ell - i)
  TruncSeries v;               ///< the unit multiplier, certified to degree N
  unsigned certified = 0;      ///< N: v*f = normal modulo total degree N+1
  bool exact = false;          ///< v*f equals normal as polynomials
  Poly normal;                 ///< y^ell + sum a_i y^(ell-i)
};

/// The unique l with a pure power y^l in the minimal support of f, or nullopt
/// exactly when f lies in the ideal of the u-variables.  The frame must have a
/// single distinguished variable.
std::optional<unsigned> weierstrass_degree(const Poly& f, const Frame& frame);

/// Fold f into pseudo-Weierstrass form at the frame's precision.  Fails when
/// no pure power of the distinguished variable occurs, or when the precision
/// is below the preparation degree.
PseudoWeierstrass prepare(const Poly& f, const Frame& frame);

/// Certified order of each coefficient a_1 .. a_l: exact below the per-
/// coefficient certification degree, a lower bound at it, infinite only for a
/// coefficient that vanishes identically in an exactly terminated preparation.
std::vector<NuValue> coefficient_orders(const PseudoWeierstrass& w);

}  // namespace sing

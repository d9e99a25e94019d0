/**
 * @file cone.hpp
 * @brief Tangent-cone analysis: ridge and directrix of the cone of a
 *        homogeneous form, extremal-case detection, and the linear change of
 *        coordinates that places the directrix on the trailing variable
 *        block.
 */
#pragma once

#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace sing {

/// One additive generator form^(p^e) of the ridge ideal (e = 0 in
/// characteristic zero, where the generator is the linear form itself).
struct RidgeGenerator {
  Poly form;       ///< linear form L
  unsigned e = 0;  ///< Frobenius exponent
};

struct RidgeData {
  std::vector<RidgeGenerator> gens;  ///< independent generating set
  bool char_zero = false;
};

/// Ridge of the cone F = 0: the ideal generated by the Hasse derivatives
/// Delta_{X^a}F, |a| < deg F, is generated by additive forms L^(p^e); this
/// computes an independent set of them by slicing the ideal degree by degree
/// at q = p^e and intersecting with the span of the q-th powers of the
/// variables.  Requires a perfect coefficient field and homogeneous F.
RidgeData ridge(const Poly& F);

struct DirectrixData {
  unsigned r = 0;           ///< codimension: rank of the span of the forms
  std::vector<Poly> forms;  ///< independent linear forms L_1..L_r
  Mat change;               ///< invertible A: new coordinates z = A x,
                            ///< rows = completion block then L_1..L_r
  Mat change_inv;           ///< A^{-1}
};

/// Directrix as the reduced ridge: the span of the ridge generators' linear
/// forms.  The returned change of coordinates moves the span onto the last r
/// variables; the rewritten initial form is verified to involve only those,
/// and a failure raises an internal-consistency error.
DirectrixData directrix(const Poly& F);

struct ExtremalWitness {
  bool extremal = false;
  Scalar c;  ///< scale factor
  Poly L;    ///< linear form with In(f) = c * L^m
};

/// Decides whether the initial form of f is a scaled m-th power of a linear
/// form over the given coefficient field (any of the four families).
/// Errors unless ord_origin(f) >= 2.
ExtremalWitness is_extremal(const Poly& f);

struct NormalizedFrame {
  Poly f;         ///< the input rewritten in the new coordinates
  Frame frame;    ///< u-block then y-block naming the new coordinates
  unsigned r = 0;
  Mat change;     ///< z = A x
  Mat change_inv;
};

/// Applies the directrix change of coordinates to f so that the directrix
/// ideal becomes <y_1..y_r>; variable names surviving from the input frame
/// keep their names, the new y-block is named freshly.
NormalizedFrame normalize_frame(const Poly& f, const Frame& in);

}  // namespace sing

/**
 * @file hpoly.hpp
 * @brief Newton-type polyhedron of a singularity with respect to a (u, y)
 *        frame: generating points and exact vertices, the delta invariant,
 *        initial forms at vertices, vertex solvability, and the dissolution
 *        loop that makes delta independent of the y-choice.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"
#include "nuvalue.hpp"
#include "poly.hpp"

namespace sing {

/// Point with exact rational coordinates, one per u-variable.
using QPoint = std::vector<Rat>;

struct HPolyhedron {
  unsigned dim = 0;                ///< number of u-variables
  unsigned m = 0;                  ///< order of f along the y-block
  std::vector<QPoint> generators;  ///< alpha/(m-|beta|) points, sorted, unique
  std::vector<QPoint> vertices;    ///< extreme points of conv(generators) + positive orthant
  NuValue delta;                   ///< least coordinate sum; Infinite when no generators
};

/// The polyhedron of f in the given frame.  Built from the minimal support
/// pairs (alpha, beta) of f — the antichain whose members absorb everything
/// above them into unit coefficients — keeping those with |beta| < m and
/// mapping each to alpha/(m-|beta|).  Requires f nonzero mod the u-ideal with
/// the same order there as at the origin.
HPolyhedron polyhedron(const Poly& f, const Frame& frame);

/// Initial data of f at a vertex v: the order-m initial form plus the sum of
/// the residues at the minimal support pairs sitting exactly at v.
struct VertexInitialForm {
  QPoint v;
  unsigned m = 0;
  Poly in_m;     ///< homogeneous part of degree m
  Poly in_plus;  ///< sum of c * u^alpha y^beta over minimal pairs at v
  Poly in_v;     ///< in_m + in_plus
};

VertexInitialForm initial_form_at_vertex(const Poly& f, const Frame& frame, const QPoint& v);

/// Witness that a vertex dissolves: the translation y_j -> y_j - c_j u^v
/// removes every support pair at v.  uexp is v as a (necessarily integral)
/// u-monomial exponent.
struct VertexSolution {
  std::vector<Scalar> c;  ///< one scalar per y-variable
  Exponent uexp;
};

/// Decides whether In_v(f) = In_m(f)(Y + c u^v) for some scalar vector c, and
/// returns the unique such c when it exists.  Candidates are derived from the
/// ridge ladder of In_m: in coordinates where each ridge generator becomes a
/// coordinate q-th power, In_m is a polynomial in those powers, and matching
/// graded slices of the translation identity determines c by linear solves
/// and q-th roots, smallest q first.  The candidate is only returned after
/// the translation identity is verified by full expansion.  Requires In_m to
/// live on the y-block and the ridge to fill it.
std::optional<VertexSolution> solve_vertex(const VertexInitialForm& ivf, const RidgeData& ridge,
                                           const Frame& frame);

enum class PrepStatus {
  WellPreparedAtDelta,  ///< every least-sum vertex is unsolvable: delta is final
  PrecisionExhausted,   ///< delta climbed past the certified range
  Degenerate,           ///< f became a unit times a y-power: empty polyhedron
};

struct PrepStep {
  QPoint v;                    ///< dissolved vertex
  std::vector<Scalar> lambda;  ///< translation scalars (y_j -> y_j - lambda_j u^v)
  Poly f_after;
};

struct PreparationTrace {
  std::vector<PrepStep> steps;
  PrepStatus status = PrepStatus::WellPreparedAtDelta;
  Poly f_final;
};

struct PrepResult {
  NuValue delta;
  PreparationTrace trace;
};

/// Dissolution loop: repeatedly translate away solvable least-sum vertices
/// until none is solvable (delta exact), the polyhedron empties (delta
/// infinite), or delta outgrows the frame precision.  The frame must be
/// normalized: the order-m initial form lives on the y-block and its ridge
/// has exactly r generators.  f is carried exactly — no truncation — so the
/// Exact and Infinite outcomes are unconditional.
PrepResult prepare_delta(const Poly& f, const Frame& frame);

/// Same loop with the ridge ladder of In_m(f) supplied by the caller, for
/// coefficient fields where it cannot be recomputed (an embedded image of a
/// prime-field input keeps the ladder of its source).
PrepResult prepare_delta_with(const Poly& f, const Frame& frame, const RidgeData& ridge);

/// Executable form of the stability of delta under coefficient-field growth:
/// rerun prepare_delta with scalars embedded into F_p(t) and report whether
/// delta is unchanged.  Infinite coefficient fields return true outright;
/// proper extension fields F_{p^e} with e > 1 return true vacuously (no
/// rational-function field over them is available).
bool extend_residue_field_check(const Poly& f, const Frame& frame);

/// Plain-text record of a polyhedron: generators, vertices, delta.
std::string polyhedron_text(const HPolyhedron& P);

}  // namespace sing

/**
 * @file hpoly.cpp
 *
 * Vertex solvability.  A vertex v is solvable when the translation
 * y_j -> y_j + c_j u^v turns In_m into In_m + In_v+, and the c found here is
 * unique: if c and c' both worked, translating by (c - c') u^v would fix In_m,
 * so specializing u would place a nonzero point of the base field on the ridge
 * group scheme of In_m — whose points over any field extension reduce to the
 * origin, because its reduced part is the directrix and the frame puts the
 * directrix at the origin of the y-block.
 *
 * The candidate is derived, not searched for.  Write W = L(Y) with L the
 * matrix of ridge forms, q_i = p^{e_i} the ladder of Frobenius heights.  In_m
 * is invariant under translation by the ridge group scheme, which forces
 * every W_i-exponent of In_m to be divisible by q_i; substituting V_i = W_i^{q_i}
 * yields a polynomial P with three properties used below:
 *   - the translation identity becomes P(V + b U^{q v}) = P + Q with
 *     b_i = (L c)_i^{q_i}, componentwise weights q_i;
 *   - matching the U^{q v}-graded slice for each distinct q gives
 *       sum_{q_i = q} b_i Delta_{V_i} P  =  Q_q - (cross terms in smaller-q b's),
 *     and every cross monomial involves only weights strictly below q, so the
 *     slices solve in ascending q order;
 *   - the first Hasse derivatives Delta_{V_i} P are linearly independent: a
 *     dependence would, after a linear change, make P free of one variable's
 *     p-th-power class, lifting to a translation invariance of In_m beyond its
 *     ridge.
 * Independence makes each slice's linear system uniquely solvable whenever it
 * is consistent, q_i-th roots recover L c (unique in characteristic p, exact
 * over Q where all q_i = 1), and L is invertible.  Any failure along the way —
 * non-integral v, an exponent not divisible by its q_i, an inconsistent slice,
 * a missing root over F_p(t) — certifies unsolvability, and a surviving
 * candidate is accepted only after the translation identity is re-expanded and
 * compared exactly.
 */
#include "hpoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <variant>

#include "error.hpp"

namespace sing {

namespace {

const Field* rationals() { return Field::get(FieldSpec{}); }

/// Minimal elements of the support under the componentwise order.  Everything
/// above a minimal exponent is absorbed into that term's unit coefficient, so
/// these are exactly the pairs whose residues the vertex machinery reads.
std::vector<Exponent> minimal_support(const Poly& f) {
  std::vector<Exponent> supp;
  supp.reserve(f.size());
  for (const auto& [a, c] : f.terms()) supp.push_back(a);
  std::vector<Exponent> out;
  for (const Exponent& a : supp) {
    bool minimal = true;
    for (const Exponent& b : supp)
      if (!(b == a) && b.divides(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

unsigned y_degree(const Exponent& a, unsigned split) {
  unsigned d = 0;
  for (unsigned i = split; i < kMaxVars; ++i) d += a.e[i];
  return d;
}

/// alpha/(m-|beta|) for a support pair with |beta| < m.
QPoint generator_point(const Exponent& a, unsigned split, unsigned m) {
  unsigned denom = m - y_degree(a, split);
  QPoint p(split);
  for (unsigned i = 0; i < split; ++i) p[i] = rat(a.e[i], denom);
  return p;
}

Rat point_sum(const QPoint& p) {
  Rat s = 0;
  for (const Rat& c : p) s += c;
  return s;
}

std::string point_str(const QPoint& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(p[i]);
  }
  return s + ")";
}

/// Visit every size-s index combination of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(unsigned n, unsigned s, Fn fn) {
  if (s > n) return;
  std::vector<unsigned> idx(s);
  for (unsigned i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    unsigned i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (unsigned j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Extreme points of conv(C) + the positive orthant, by exact rational
/// elimination: g is redundant iff it is a convex combination of at most
/// dim+1 other generators and axis rays (conic Caratheodory bound after
/// lifting points to height one).  Affinely independent witness sets have a
/// unique coefficient vector, so testing the single solution of each
/// subsystem for nonnegativity decides membership exactly.
std::vector<QPoint> extreme_points(const std::vector<QPoint>& C, unsigned dim) {
  if (C.size() <= 1) return C;
  const Field* QF = rationals();
  std::vector<QPoint> out;
  for (size_t gi = 0; gi < C.size(); ++gi) {
    const QPoint& g = C[gi];
    std::vector<const QPoint*> others;
    for (size_t j = 0; j < C.size(); ++j)
      if (j != gi) others.push_back(&C[j]);

    bool redundant = false;
    // Fast path: any other generator componentwise below g dominates it.
    for (const QPoint* o : others) {
      bool below = true;
      for (unsigned k = 0; k < dim && below; ++k) below = (*o)[k] <= g[k];
      if (below) {
        redundant = true;
        break;
      }
    }

    unsigned pool = static_cast<unsigned>(others.size()) + dim;  // points then rays
    for (unsigned s = 1; s <= dim + 1 && !redundant; ++s) {
      for_each_combination(pool, s, [&](const std::vector<unsigned>& idx) {
        bool has_point = false;
        for (unsigned t : idx) has_point |= (t < others.size());
        if (!has_point) return true;
        Mat A(QF, dim + 1, s);
        for (unsigned col = 0; col < s; ++col) {
          unsigned t = idx[col];
          if (t < others.size()) {
            for (unsigned k = 0; k < dim; ++k) A.at(k, col) = QF->from_rat((*others[t])[k]);
            A.at(dim, col) = QF->one();
          } else {
            A.at(t - static_cast<unsigned>(others.size()), col) = QF->one();
          }
        }
        std::vector<Scalar> b;
        for (unsigned k = 0; k < dim; ++k) b.push_back(QF->from_rat(g[k]));
        b.push_back(QF->one());
        auto sol = solve_linear(A, b);
        if (sol) {
          bool nonneg = true;
          for (const Scalar& x : *sol) nonneg &= (sgn(std::get<Rat>(x.v)) >= 0);
          if (nonneg) {
            redundant = true;
            return false;
          }
        }
        return true;
      });
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Shared front half of the polyhedron builders: hypothesis checks, the order
/// m, and the minimal support.
unsigned check_and_order(const Poly& f, const Frame& frame) {
  if (f.nvars() != frame.n()) fail(ErrCode::InvalidArg, "polynomial/frame variable count mismatch");
  if (f.is_zero()) fail(ErrCode::Precondition, "zero polynomial has no polyhedron");
  unsigned m = *ord_origin(f);
  // order of f modulo the u-ideal: least y-degree among pure-y terms
  bool any = false;
  unsigned m_mod = 0;
  for (const auto& [a, c] : f.terms()) {
    bool pure = true;
    for (unsigned i = 0; i < frame.split && pure; ++i) pure = (a.e[i] == 0);
    if (!pure) continue;
    unsigned d = a.degree();
    if (!any || d < m_mod) m_mod = d;
    any = true;
  }
  if (!any) fail(ErrCode::Precondition, "f lies in the u-ideal: order along the y-block is undefined");
  if (m_mod != m)
    fail(ErrCode::Precondition, "order of f modulo the u-ideal differs from its order at the origin");
  return m;
}

HPolyhedron build_polyhedron(const Poly& f, const Frame& frame, std::vector<Exponent>* support_out) {
  unsigned m = check_and_order(f, frame);
  std::vector<Exponent> S = minimal_support(f);
  HPolyhedron P;
  P.dim = frame.split;
  P.m = m;
  for (const Exponent& a : S)
    if (y_degree(a, frame.split) < m) P.generators.push_back(generator_point(a, frame.split, m));
  std::sort(P.generators.begin(), P.generators.end());
  P.generators.erase(std::unique(P.generators.begin(), P.generators.end()), P.generators.end());
  P.vertices = extreme_points(P.generators, P.dim);
  if (P.generators.empty()) {
    P.delta = NuValue::infinite();
  } else {
    Rat best = point_sum(P.generators.front());
    for (const QPoint& g : P.generators) best = std::min(best, point_sum(g));
    P.delta = NuValue::exact(best);
  }
  if (support_out) *support_out = std::move(S);
  return P;
}

VertexInitialForm build_initial_form(const Poly& f, const Frame& frame, unsigned m,
                                     const std::vector<Exponent>& S, const QPoint& v) {
  VertexInitialForm out;
  out.v = v;
  out.m = m;
  out.in_m = f.homogeneous_part(m);
  out.in_plus = Poly(f.field(), f.nvars());
  for (const Exponent& a : S) {
    if (y_degree(a, frame.split) >= m) continue;
    if (generator_point(a, frame.split, m) == v) out.in_plus.add_term(a, f.coeff(a));
  }
  out.in_v = out.in_m + out.in_plus;
  return out;
}

/// p^e with a guard against ladders that could not have come from a ridge.
unsigned long ladder_power(unsigned long p, unsigned e) {
  unsigned long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    check_internal(q <= (1ul << 40) / std::max<unsigned long>(p, 2), "ridge ladder overflow");
    q *= p;
  }
  return q;
}

/// In_m of a y-block power shape c*y^m over any field: the single ridge
/// generator is the variable itself at the Frobenius height of m.
std::optional<RidgeData> power_shape_ladder(const Poly& in_m, const Frame& frame) {
  if (frame.r() != 1 || in_m.size() != 1) return std::nullopt;
  const auto& [a, c] = *in_m.terms().begin();
  unsigned m = a.degree();
  if (a.e[frame.split] != m) return std::nullopt;
  unsigned long p = in_m.field()->characteristic();
  unsigned e = 0;
  if (p > 0) {
    unsigned long mm = m;
    while (mm % p == 0) {
      mm /= p;
      ++e;
    }
  }
  RidgeData rd;
  rd.char_zero = (p == 0);
  rd.gens.push_back({Poly::variable(in_m.field(), in_m.nvars(), frame.split), e});
  return rd;
}

RidgeData ladder_of(const Poly& in_m, const Frame& frame) {
  if (in_m.field()->is_perfect()) return ridge(in_m);
  auto rd = power_shape_ladder(in_m, frame);
  if (!rd)
    fail(ErrCode::Unsupported,
         "ridge over a rational-function field is only available for a single y-power initial form");
  return *rd;
}

}  // namespace

HPolyhedron polyhedron(const Poly& f, const Frame& frame) { return build_polyhedron(f, frame, nullptr); }

VertexInitialForm initial_form_at_vertex(const Poly& f, const Frame& frame, const QPoint& v) {
  std::vector<Exponent> S;
  HPolyhedron P = build_polyhedron(f, frame, &S);
  if (v.size() != frame.split) fail(ErrCode::InvalidArg, "vertex dimension mismatch");
  if (std::find(P.vertices.begin(), P.vertices.end(), v) == P.vertices.end())
    fail(ErrCode::InvalidArg, "not a vertex of the polyhedron");
  return build_initial_form(f, frame, P.m, S, v);
}

std::optional<VertexSolution> solve_vertex(const VertexInitialForm& ivf, const RidgeData& ridge,
                                           const Frame& frame) {
  const Field* F = ivf.in_m.field();
  unsigned n = ivf.in_m.nvars();
  unsigned split = frame.split, r = frame.r();
  if (n != frame.n()) fail(ErrCode::InvalidArg, "initial form/frame variable count mismatch");
  if (ivf.v.size() != split) fail(ErrCode::InvalidArg, "vertex dimension mismatch");
  for (const auto& [a, c] : ivf.in_m.terms())
    for (unsigned i = 0; i < split; ++i)
      if (a.e[i] != 0) fail(ErrCode::Precondition, "initial form is not supported on the y-block");
  if (ridge.gens.size() != r)
    fail(ErrCode::Precondition, "ridge ladder does not fill the y-block");

  // Integrality gate: the translation scalars multiply the monomial u^v.
  Exponent uexp;
  for (unsigned i = 0; i < split; ++i) {
    const Rat& c = ivf.v[i];
    if (c.get_den() != 1) return std::nullopt;
    check_internal(c.get_num().fits_ulong_p() && c.get_num().get_ui() <= 0xffff,
                   "vertex coordinate exceeds the exponent range");
    uexp.e[i] = static_cast<uint16_t>(c.get_num().get_ui());
  }

  std::vector<Scalar> zero_c(r, F->zero());
  if (ivf.in_plus.is_zero()) return VertexSolution{zero_c, uexp};

  unsigned long p = F->characteristic();
  std::vector<unsigned long> q(r);
  for (unsigned i = 0; i < r; ++i) q[i] = ladder_power(p, ridge.gens[i].e);

  // L: rows are the ridge forms restricted to the y-block.
  Mat L(F, r, r);
  for (unsigned i = 0; i < r; ++i) {
    const Poly& form = ridge.gens[i].form;
    check_internal(form.field() == F && form.nvars() == n, "ridge form ring mismatch");
    for (unsigned j = 0; j < r; ++j) {
      Exponent unit;
      unit.e[split + j] = 1;
      L.at(i, j) = form.coeff(unit);
    }
  }
  auto Linv = mat_inverse(L);
  check_internal(Linv.has_value(), "ridge forms are not independent");

  // W-coordinates: y_j -> sum_c Linv[j][c] W_c, u fixed.
  std::vector<Poly> images;
  for (unsigned k = 0; k < n; ++k) images.push_back(Poly::variable(F, n, k));
  for (unsigned j = 0; j < r; ++j) {
    Poly im(F, n);
    for (unsigned c = 0; c < r; ++c) {
      Exponent w;
      w.e[split + c] = 1;
      im.add_term(w, Linv->at(j, c));
    }
    images[split + j] = im;
  }
  Poly Fw = compose(ivf.in_m, images);
  Poly Iw = compose(ivf.in_plus, images);

  // Divide the W-exponents by the ladder; a failure for In_m contradicts the
  // ridge computation, a failure for the vertex part certifies unsolvability.
  auto ladder_divide = [&](const Poly& g, bool* ok) {
    Poly out(F, n);
    for (const auto& [a, c] : g.terms()) {
      Exponent b = a;
      for (unsigned i = 0; i < r; ++i) {
        if (a.e[split + i] % q[i] != 0) {
          *ok = false;
          return out;
        }
        b.e[split + i] = static_cast<uint16_t>(a.e[split + i] / q[i]);
      }
      out.add_term(b, c);
    }
    return out;
  };
  bool ok = true;
  Poly P = ladder_divide(Fw, &ok);
  check_internal(ok, "initial form is not constant on its ridge ladder");
  Poly Q = ladder_divide(Iw, &ok);
  if (!ok) return std::nullopt;

  // Ascending-q slices.
  std::vector<Scalar> b(r, F->zero());
  std::vector<char> known(r, 0);
  std::set<unsigned long> heights(q.begin(), q.end());
  for (unsigned long h : heights) {
    std::vector<unsigned> cur, done;
    for (unsigned i = 0; i < r; ++i) (q[i] == h ? cur : done).push_back(i);
    done.erase(std::remove_if(done.begin(), done.end(), [&](unsigned i) { return !known[i]; }),
               done.end());

    // Slice of Q at u-part h*v, read off in the V-variables.
    Poly R(F, n);
    for (const auto& [a, c] : Q.terms()) {
      bool match = true;
      for (unsigned i = 0; i < split && match; ++i)
        match = (static_cast<unsigned long>(a.e[i]) == h * uexp.e[i]);
      if (!match) continue;
      Exponent y_only;
      for (unsigned i = split; i < n; ++i) y_only.e[i] = a.e[i];
      R.add_term(y_only, c);
    }

    // Subtract the cross terms: monomials in already-solved b's whose ladder
    // weights sum to h.
    std::vector<unsigned> beta(done.size(), 0);
    auto cross = [&](auto&& self, size_t pos, unsigned long remaining) -> void {
      if (pos == done.size()) {
        if (remaining != 0) return;
        unsigned total = 0;
        for (unsigned x : beta) total += x;
        if (total < 2) return;
        Scalar coef = F->one();
        Exponent bexp;
        for (size_t t = 0; t < done.size(); ++t) {
          coef = F->mul(coef, F->pow(b[done[t]], beta[t]));
          bexp.e[split + done[t]] = static_cast<uint16_t>(beta[t]);
        }
        R = R - hasse_derivative_multi(P, bexp).scale(coef);
        return;
      }
      unsigned i = done[pos];
      for (unsigned long k = 0; k * q[i] <= remaining; ++k) {
        beta[pos] = static_cast<unsigned>(k);
        self(self, pos + 1, remaining - k * q[i]);
      }
      beta[pos] = 0;
    };
    cross(cross, 0, h);

    // Linear slice: sum over current-height i of b_i * Delta_{V_i} P = R.
    std::vector<Poly> cols;
    for (unsigned i : cur) cols.push_back(hasse_derivative(P, split + i, 1));
    std::map<Exponent, unsigned> row_of;
    for (const Poly& cpoly : cols)
      for (const auto& [a, c] : cpoly.terms()) row_of.emplace(a, 0);
    for (const auto& [a, c] : R.terms()) row_of.emplace(a, 0);
    unsigned nrows = 0;
    for (auto& [a, idx] : row_of) idx = nrows++;
    Mat A(F, nrows, static_cast<unsigned>(cur.size()));
    for (unsigned col = 0; col < cur.size(); ++col)
      for (const auto& [a, c] : cols[col].terms()) A.at(row_of[a], col) = c;
    std::vector<Scalar> rhs(nrows, F->zero());
    for (const auto& [a, c] : R.terms()) rhs[row_of[a]] = c;
    auto sol = solve_linear(A, rhs);
    if (!sol) return std::nullopt;
    for (unsigned t = 0; t < cur.size(); ++t) {
      b[cur[t]] = (*sol)[t];
      known[cur[t]] = 1;
    }
  }

  // Undo the Frobenius heights, then the linear change.
  std::vector<Scalar> ct(r, F->zero());
  for (unsigned i = 0; i < r; ++i) {
    Scalar x = b[i];
    for (unsigned s = 0; s < ridge.gens[i].e; ++s) {
      auto root = F->maybe_root(x, p);
      if (!root) return std::nullopt;
      x = *root;
    }
    ct[i] = x;
  }
  std::vector<Scalar> c(r, F->zero());
  for (unsigned j = 0; j < r; ++j) {
    Scalar acc = F->zero();
    for (unsigned k = 0; k < r; ++k) acc = F->add(acc, F->mul(Linv->at(j, k), ct[k]));
    c[j] = acc;
  }

  // Final arbiter: re-expand the translation and compare exactly.
  std::vector<std::pair<unsigned, Poly>> assignment;
  for (unsigned j = 0; j < r; ++j) {
    if (F->is_zero(c[j])) continue;
    Poly im = Poly::variable(F, n, split + j);
    im.add_term(uexp, c[j]);
    assignment.emplace_back(split + j, im);
  }
  Poly shifted = substitute(ivf.in_m, assignment);
  if (!(shifted == ivf.in_v)) return std::nullopt;
  return VertexSolution{c, uexp};
}

PrepResult prepare_delta_with(const Poly& f, const Frame& frame, const RidgeData& ridge) {
  unsigned m = check_and_order(f, frame);
  Poly in_m = initial_form(f);
  for (const auto& [a, c] : in_m.terms())
    for (unsigned i = 0; i < frame.split; ++i)
      if (a.e[i] != 0)
        fail(ErrCode::Precondition, "frame is not normalized: initial form leaves the y-block");
  if (ridge.gens.size() != frame.r())
    fail(ErrCode::Precondition, "frame is not normalized: ridge ladder does not fill the y-block");

  PrepResult out;
  Poly cur = f;
  unsigned iter = 0;
  const unsigned max_iter = 4 * frame.N;
  while (true) {
    std::vector<Exponent> S;
    HPolyhedron P = build_polyhedron(cur, frame, &S);
    if (P.generators.empty()) {
      out.trace.status = PrepStatus::Degenerate;
      out.delta = NuValue::infinite();
      break;
    }
    Rat d = P.delta.value;  // Exact whenever generators exist
    if (d * m > static_cast<long>(frame.N)) {
      out.trace.status = PrepStatus::PrecisionExhausted;
      out.delta = NuValue::at_least(rat(frame.N, m));
      break;
    }
    if (iter >= max_iter) {
      out.trace.status = PrepStatus::PrecisionExhausted;
      out.delta = NuValue::at_least(d);
      break;
    }
    bool dissolved = false;
    for (const QPoint& v : P.vertices) {
      if (point_sum(v) != d) continue;
      VertexInitialForm ivf = build_initial_form(cur, frame, m, S, v);
      check_internal(!ivf.in_plus.is_zero(), "vertex carries no support pair");
      auto sol = solve_vertex(ivf, ridge, frame);
      if (!sol) continue;
      std::vector<std::pair<unsigned, Poly>> assignment;
      for (unsigned j = 0; j < frame.r(); ++j) {
        if (f.field()->is_zero(sol->c[j])) continue;
        Poly im = Poly::variable(f.field(), f.nvars(), frame.split + j);
        im.add_term(sol->uexp, f.field()->neg(sol->c[j]));
        assignment.emplace_back(frame.split + j, im);
      }
      cur = substitute(cur, assignment);
      check_internal(cur.homogeneous_part(m) == in_m, "translation disturbed the initial form");
      out.trace.steps.push_back({v, sol->c, cur});
      dissolved = true;
      ++iter;
      break;
    }
    if (dissolved) continue;
    out.trace.status = PrepStatus::WellPreparedAtDelta;
    out.delta = NuValue::exact(d);
    break;
  }
  out.trace.f_final = cur;
  return out;
}

PrepResult prepare_delta(const Poly& f, const Frame& frame) {
  if (f.is_zero()) fail(ErrCode::Precondition, "zero polynomial has no polyhedron");
  return prepare_delta_with(f, frame, ladder_of(initial_form(f), frame));
}

bool extend_residue_field_check(const Poly& f, const Frame& frame) {
  const Field* F = f.field();
  if (!F->is_finite()) return true;  // the coefficient field is already infinite
  if (F->spec().kind == FieldKind::ExtField) return true;  // no F_{p^e}(t) scalars available
  PrepResult base = prepare_delta(f, frame);
  const Field* Ft = Field::get(FieldSpec{FieldKind::RationalFunctions, F->spec().p, 1, {}});
  Poly fE = embed_poly(f, Ft);
  RidgeData rd = ladder_of(initial_form(f), frame);
  RidgeData rdE;
  rdE.char_zero = false;
  for (const RidgeGenerator& g : rd.gens) rdE.gens.push_back({embed_poly(g.form, Ft), g.e});
  PrepResult ext = prepare_delta_with(fE, frame, rdE);
  return base.delta == ext.delta;
}

std::string polyhedron_text(const HPolyhedron& P) {
  std::string s = "m = " + std::to_string(P.m) + ", dim = " + std::to_string(P.dim) + "\n";
  s += "delta = " + P.delta.str() + "\n";
  s += "generators:";
  if (P.generators.empty()) s += " none";
  for (const QPoint& g : P.generators) s += " " + point_str(g);
  s += "\nvertices:";
  if (P.vertices.empty()) s += " none";
  for (const QPoint& v : P.vertices) s += " " + point_str(v);
  s += "\n";
  return s;
}

}  // namespace sing

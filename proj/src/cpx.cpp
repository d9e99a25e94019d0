/**
 * @file cpx.cpp
 * @brief Support sets and unit-coefficient expansions.
 */
#include "cpx.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace sing {

bool mono_less(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::Grlex) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
  }
  return a < b;
}

std::vector<Exponent> support_min(const Poly& f) {
  if (f.is_zero()) fail(ErrCode::InvalidArg, "support of the zero polynomial");
  std::vector<Exponent> supp;
  supp.reserve(f.size());
  for (const auto& [a, c] : f.terms()) supp.push_back(a);
  std::vector<Exponent> out;
  for (const Exponent& a : supp) {
    bool minimal = true;
    for (const Exponent& b : supp) {
      if (!(b == a) && b.divides(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CPExpansion cp_expand(const Poly& f, MonomialOrder order) {
  CPExpansion e;
  e.support = support_min(f);
  std::sort(e.support.begin(), e.support.end(),
            [order](const Exponent& a, const Exponent& b) { return mono_less(a, b, order); });
  const Field* F = f.field();
  e.units.assign(e.support.size(), Poly(F, f.nvars()));
  for (const auto& [b, c] : f.terms()) {
    bool assigned = false;
    for (size_t i = 0; i < e.support.size(); ++i) {
      if (e.support[i].divides(b)) {
        e.units[i].add_term(b.minus(e.support[i]), c);
        assigned = true;
        break;
      }
    }
    check_internal(assigned, "support term escaped every minimal exponent");
  }
  for (const Poly& u : e.units)
    check_internal(!F->is_zero(u.coeff(Exponent{})), "expansion coefficient is not a unit");
  return e;
}

bool has_u_expansion(const Poly& f, const Frame& frame) {
  check_internal(frame.split <= f.nvars(), "frame does not match the polynomial ring");
  for (const Exponent& a : support_min(f))
    for (unsigned i = frame.split; i < f.nvars(); ++i)
      if (a.e[i]) return false;
  return true;
}

std::optional<unsigned long> monomial_valuation(const Poly& f, const std::vector<unsigned>& weights) {
  if (weights.size() != f.nvars()) fail(ErrCode::InvalidArg, "one weight per variable required");
  for (unsigned w : weights)
    if (w < 1) fail(ErrCode::InvalidArg, "monomial-valuation weights must be positive");
  if (f.is_zero()) return std::nullopt;
  unsigned long best = ~0ul;
  for (const auto& [a, c] : f.terms()) {
    unsigned long w = 0;
    for (unsigned i = 0; i < f.nvars(); ++i) w += static_cast<unsigned long>(a.e[i]) * weights[i];
    best = std::min(best, w);
  }
  return best;
}

std::vector<Exponent> truncated_support(const Poly& f, const std::vector<Poly>& params, unsigned N) {
  const Field* F = f.field();
  unsigned n = f.nvars();
  if (params.size() != n) fail(ErrCode::InvalidArg, "one parameter per variable required");

  // Split each parameter into linear part (a matrix row) and higher terms.
  Mat L(F, n, n);
  std::vector<Poly> higher;
  higher.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    const Poly& p = params[j];
    if (p.field() != F || p.nvars() != n)
      fail(ErrCode::InvalidArg, "parameter lives in the wrong ring");
    if (!F->is_zero(p.coeff(Exponent{})))
      fail(ErrCode::Precondition, "parameter has a nonzero constant term");
    Poly h(F, n);
    for (const auto& [a, c] : p.terms()) {
      if (a.degree() == 1) {
        for (unsigned i = 0; i < n; ++i)
          if (a.e[i]) L.at(j, i) = c;
      } else {
        h.add_term(a, c);
      }
    }
    higher.push_back(std::move(h));
  }
  auto Linv = mat_inverse(L);
  if (!Linv) fail(ErrCode::Precondition, "parameters do not form a regular system (singular linear part)");

  // Fixpoint inversion: X expresses the original coordinates in terms of the
  // parameters, exact modulo degree N+1.  Each pass gains one degree.
  auto apply_linv = [&](const std::vector<Poly>& rhs) {
    std::vector<Poly> out;
    out.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      Poly acc(F, n);
      for (unsigned k = 0; k < n; ++k) acc = acc + rhs[k].scale(Linv->at(i, k));
      out.push_back(std::move(acc));
    }
    return out;
  };

  std::vector<Poly> id;
  for (unsigned i = 0; i < n; ++i) id.push_back(Poly::variable(F, n, i));
  std::vector<Poly> X = apply_linv(id);
  for (unsigned pass = 0; pass < N + 1; ++pass) {
    std::vector<Poly> rhs;
    rhs.reserve(n);
    for (unsigned j = 0; j < n; ++j)
      rhs.push_back(id[j] - compose_trunc(higher[j], X, N));
    std::vector<Poly> next = apply_linv(rhs);
    if (next == X) break;
    X = std::move(next);
  }

  Poly fy = compose_trunc(f, X, N);
  if (fy.is_zero()) return {};
  return support_min(fy);
}

bool check_truncated_support_equality(const Poly& f, const std::vector<Poly>& ys,
                                      const std::vector<Poly>& zs, unsigned N) {
  if (ys.size() != zs.size() || ys.size() != f.nvars())
    fail(ErrCode::InvalidArg, "parameter lists must match the variable count");
  if (N < 1) fail(ErrCode::Precondition, "support comparison needs N >= 1");
  for (size_t j = 0; j < ys.size(); ++j) {
    Poly d = zs[j] - ys[j];
    auto o = ord_origin(d);
    if (o && *o <= N)
      fail(ErrCode::Precondition, "parameter systems differ at or below the comparison degree");
  }
  return truncated_support(f, ys, N) == truncated_support(f, zs, N);
}

}  // namespace sing

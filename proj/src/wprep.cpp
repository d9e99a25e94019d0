/**
 * @file wprep.cpp
 * @brief Preparation by iterated folding of the leading y-block.
 *
 * Write f = A + B*y^l with A the part of y-degree < l and B the shifted
 * leading block.  B has a nonzero constant term, so g <- B^(-1)*g replaces the
 * leading block by 1 plus a correction whose order in the u-variables grows by
 * one per iteration: every term of A carries a u-variable (a pure power of y
 * below y^l would contradict the minimality of l), and the correction is
 * always a product of a y-positive part of B^(-1) with A.  At precision N the
 * correction therefore vanishes after at most N+1 rounds.
 */
#include "wprep.hpp"

#include "error.hpp"

namespace sing {

namespace {

/// Split off the terms of degree >= l in the distinguished variable, shifted
/// down by y^l; the remainder (y-degree < l) is returned through `low`.
Poly leading_block(const Poly& g, unsigned yvar, unsigned ell, Poly& low) {
  const Field* F = g.field();
  Poly high(F, g.nvars());
  low = Poly(F, g.nvars());
  for (const auto& [a, c] : g.terms()) {
    if (a.e[yvar] >= ell) {
      Exponent b = a;
      b.e[yvar] = static_cast<uint16_t>(b.e[yvar] - ell);
      high.add_term(b, c);
    } else {
      low.add_term(a, c);
    }
  }
  return high;
}

}  // namespace

std::optional<unsigned> weierstrass_degree(const Poly& f, const Frame& frame) {
  if (frame.n() != f.nvars())
    fail(ErrCode::InvalidArg, "frame does not match the number of variables");
  if (frame.r() != 1)
    fail(ErrCode::Precondition, "preparation needs exactly one distinguished variable");
  unsigned yvar = frame.split;
  std::optional<unsigned> best;
  for (const auto& [a, c] : f.terms()) {
    bool pure = true;
    for (unsigned i = 0; i < f.nvars(); ++i)
      if (i != yvar && a.e[i] != 0) pure = false;
    if (pure && (!best || a.e[yvar] < *best)) best = a.e[yvar];
  }
  return best;
}

PseudoWeierstrass prepare(const Poly& f, const Frame& frame) {
  const Field* F = f.field();
  unsigned n = f.nvars();
  auto lo = weierstrass_degree(f, frame);
  if (!lo)
    fail(ErrCode::Precondition,
         "no pure power of the distinguished variable: not pseudo-Weierstrass");
  unsigned ell = *lo;
  unsigned N = frame.N;
  if (N < ell) fail(ErrCode::Precondition, "precision is below the preparation degree");
  unsigned yvar = frame.split;

  Poly one = Poly::constant(F, n, F->one());
  Poly g = f.truncate(N);
  Poly v = one;
  bool settled = false;
  for (unsigned round = 0; round <= N + 1; ++round) {
    Poly low(F, n);
    Poly high = leading_block(g, yvar, ell, low);
    if (high == one) {
      settled = true;
      break;
    }
    TruncSeries binv = invert_unit(high, frame);
    v = (binv.value * v).truncate(N);
    g = (binv.value * g).truncate(N);
  }
  check_internal(settled, "folding did not stabilize within the precision bound");

  PseudoWeierstrass w;
  w.ell = ell;
  w.yvar = yvar;
  w.certified = N;
  w.normal = g;
  w.v = TruncSeries{v, N};

  Poly low(F, n);
  leading_block(g, yvar, ell, low);
  for (unsigned i = 1; i <= ell; ++i) {
    Poly ai = low.coeff_in_var(yvar, ell - i);
    w.a.push_back(TruncSeries{ai, N - (ell - i)});
  }

  Poly prod = v * f;
  w.exact = (prod == g);
  check_internal(prod.truncate(N) == g, "prepared form does not match v*f at the precision");
  return w;
}

std::vector<NuValue> coefficient_orders(const PseudoWeierstrass& w) {
  std::vector<NuValue> out;
  for (const TruncSeries& ai : w.a) {
    if (ai.value.is_zero()) {
      out.push_back(w.exact ? NuValue::infinite() : NuValue::at_least(ai.certified));
      continue;
    }
    unsigned o = *ord_origin(ai.value);
    if (w.exact || o <= ai.certified)
      out.push_back(NuValue::exact(o));
    else
      out.push_back(NuValue::at_least(ai.certified));
  }
  return out;
}

}  // namespace sing

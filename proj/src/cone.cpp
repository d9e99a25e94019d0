/**
 * @file cone.cpp
 * @brief Ridge, directrix, and extremal-case detection.
 */
#include "cone.hpp"

#include <algorithm>
#include <map>

namespace sing {

namespace {

/// All exponent vectors of the given total degree supported on the listed
/// variables.
void enumerate_degree(const std::vector<unsigned>& vars, unsigned degree, size_t at, Exponent cur,
                      std::vector<Exponent>& out) {
  if (at == vars.size()) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  if (at + 1 == vars.size()) {
    cur.e[vars[at]] = static_cast<uint16_t>(degree);
    out.push_back(cur);
    return;
  }
  for (unsigned d = 0; d <= degree; ++d) {
    Exponent next = cur;
    next.e[vars[at]] = static_cast<uint16_t>(d);
    enumerate_degree(vars, degree - d, at + 1, next, out);
  }
}

std::vector<Exponent> exponents_of_degree(const std::vector<unsigned>& vars, unsigned degree) {
  std::vector<Exponent> out;
  enumerate_degree(vars, degree, 0, Exponent{}, out);
  return out;
}

Exponent unit_exp(unsigned i) {
  Exponent a;
  a.e[i] = 1;
  return a;
}

/// Row space of the linear forms found so far, for independence testing.
struct SpanTracker {
  const Field* F;
  unsigned n;
  Mat rows;
  unsigned rank = 0;

  SpanTracker(const Field* field, unsigned nvars) : F(field), n(nvars), rows(field, 0, 0) {}

  bool insert(const std::vector<Scalar>& v) {
    Mat next(F, rank + 1, n);
    for (unsigned i = 0; i < rank; ++i)
      for (unsigned j = 0; j < n; ++j) next.at(i, j) = rows.at(i, j);
    for (unsigned j = 0; j < n; ++j) next.at(rank, j) = v[j];
    unsigned r2 = row_reduce(next);
    if (r2 == rank) return false;
    rows = std::move(next);
    rank = r2;
    return true;
  }
};

std::vector<Scalar> linear_coeffs(const Poly& L) {
  std::vector<Scalar> v(L.nvars(), L.field()->zero());
  for (const auto& [a, c] : L.terms()) {
    check_internal(a.degree() == 1, "expected a linear form");
    for (unsigned i = 0; i < L.nvars(); ++i)
      if (a.e[i]) v[i] = c;
  }
  return v;
}

}  // namespace

RidgeData ridge(const Poly& F_in) {
  const Field* F = F_in.field();
  if (!F->is_perfect())
    fail(ErrCode::Unsupported, "ridge computation needs a perfect coefficient field");
  if (F_in.is_zero() || !F_in.is_homogeneous())
    fail(ErrCode::InvalidArg, "ridge expects a nonzero homogeneous form");
  unsigned m = F_in.degree();
  unsigned n = F_in.nvars();
  uint64_t p = F->characteristic();

  // Variables actually present in F; every additive form of the ideal is
  // supported there (set the active variables to zero: the generators vanish,
  // so a q-th power of an absent variable cannot appear).
  std::vector<unsigned> active;
  for (unsigned i = 0; i < n; ++i)
    if (F_in.degree_in(i) > 0) active.push_back(i);

  RidgeData out;
  out.char_zero = (p == 0);

  // Hasse derivatives of order |a| < m, grouped by degree d = m - |a|.
  std::vector<std::vector<Poly>> by_degree(m + 1);
  for (unsigned o = 1; o < m; ++o) {
    for (const Exponent& a : exponents_of_degree(active, o)) {
      Poly d = hasse_derivative_multi(F_in, a);
      if (!d.is_zero()) by_degree[m - o].push_back(std::move(d));
    }
  }
  by_degree[m].push_back(F_in);

  SpanTracker span(F, n);

  // Degrees q = p^e (q = 1 alone in characteristic zero).
  std::vector<std::pair<unsigned, unsigned>> qs;  // (q, e)
  if (p == 0) {
    qs.push_back({1, 0});
  } else {
    unsigned e = 0;
    for (uint64_t q = 1; q <= m; q *= p, ++e) qs.push_back({static_cast<unsigned>(q), e});
  }

  for (auto [q, e] : qs) {
    // Monomial coordinates for the degree-q graded piece on the active
    // variables.
    std::vector<Exponent> monos = exponents_of_degree(active, q);
    std::map<Exponent, unsigned> index;
    for (const Exponent& a : monos) index.emplace(a, static_cast<unsigned>(index.size()));
    unsigned nm = static_cast<unsigned>(monos.size());

    // The degree-q slice of the ideal: monomial shifts of every derivative of
    // degree d <= q, reduced to a row basis.
    std::vector<Poly> slice;
    for (unsigned d = 1; d <= q && d <= m; ++d) {
      for (const Poly& g : by_degree[d])
        for (const Exponent& ga : exponents_of_degree(active, q - d))
          slice.push_back(g.mul_monomial(ga, F->one()));
    }
    if (slice.empty()) continue;
    Mat rowsm(F, static_cast<unsigned>(slice.size()), nm);
    for (unsigned i = 0; i < slice.size(); ++i)
      for (const auto& [a, c] : slice[i].terms()) rowsm.at(i, index.at(a)) = c;
    unsigned rank = row_reduce(rowsm);

    // Solve sum_i c_i X_i^q in the slice span: kernel of [basis^T | -pure].
    unsigned na = static_cast<unsigned>(active.size());
    Mat sys(F, nm, rank + na);
    for (unsigned j = 0; j < rank; ++j)
      for (unsigned i = 0; i < nm; ++i) sys.at(i, j) = rowsm.at(j, i);
    for (unsigned i = 0; i < na; ++i) {
      Exponent a;
      a.e[active[i]] = static_cast<uint16_t>(q);
      sys.at(index.at(a), rank + i) = F->neg(F->one());
    }

    for (const auto& ker : nullspace(sys)) {
      std::vector<Scalar> c(na);
      bool nonzero = false;
      for (unsigned i = 0; i < na; ++i) {
        c[i] = ker[rank + i];
        if (!F->is_zero(c[i])) nonzero = true;
      }
      if (!nonzero) continue;
      // sum c_i X_i^q = (sum c_i^(1/q) X_i)^q over a perfect field.
      std::vector<Scalar> l(n, F->zero());
      for (unsigned i = 0; i < na; ++i)
        l[active[i]] = (e == 0) ? c[i] : F->pth_root(c[i], e);
      if (!span.insert(l)) continue;
      Poly L(F, n);
      for (unsigned i = 0; i < n; ++i)
        if (!F->is_zero(l[i])) L.add_term(unit_exp(i), l[i]);
      out.gens.push_back({std::move(L), e});
    }
  }
  return out;
}

DirectrixData directrix(const Poly& F_in) {
  RidgeData rd = ridge(F_in);
  const Field* F = F_in.field();
  unsigned n = F_in.nvars();

  DirectrixData out;
  for (const RidgeGenerator& g : rd.gens) out.forms.push_back(g.form);
  out.r = static_cast<unsigned>(out.forms.size());

  // Rows of L, reduced, to find pivot columns; completed by unit vectors on
  // the non-pivot columns (ascending) to an invertible matrix with the
  // directrix forms on the trailing rows.
  Mat L(F, out.r, n);
  for (unsigned i = 0; i < out.r; ++i) {
    std::vector<Scalar> v = linear_coeffs(out.forms[i]);
    for (unsigned j = 0; j < n; ++j) L.at(i, j) = v[j];
  }
  Mat red = L;
  std::vector<unsigned> pivots;
  unsigned rank = row_reduce(red, &pivots);
  check_internal(rank == out.r, "ridge produced dependent directrix forms");

  std::vector<bool> is_pivot(n, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  Mat A(F, n, n);
  unsigned row = 0;
  for (unsigned j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    A.at(row, j) = F->one();
    ++row;
  }
  check_internal(row == n - out.r, "completion block has the wrong size");
  for (unsigned i = 0; i < out.r; ++i)
    for (unsigned j = 0; j < n; ++j) A.at(row + i, j) = L.at(i, j);

  auto inv = mat_inverse(A);
  check_internal(inv.has_value(), "directrix change of coordinates is singular");
  out.change = A;
  out.change_inv = *inv;

  // Verify: the form rewritten in the new coordinates must involve only the
  // trailing r variables.
  std::vector<Poly> images;
  images.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    Poly img(F, n);
    for (unsigned j = 0; j < n; ++j)
      if (!F->is_zero(out.change_inv.at(i, j))) img.add_term(unit_exp(j), out.change_inv.at(i, j));
    images.push_back(std::move(img));
  }
  Poly rewritten = compose(F_in, images);
  for (const auto& [a, c] : rewritten.terms())
    for (unsigned i = 0; i < n - out.r; ++i)
      check_internal(a.e[i] == 0, "initial form escapes the directrix variables after the change");
  return out;
}

ExtremalWitness is_extremal(const Poly& f) {
  const Field* F = f.field();
  auto mo = ord_origin(f);
  if (!mo || *mo < 2)
    fail(ErrCode::Precondition, "extremal-case test needs multiplicity at least 2");
  unsigned m = *mo;
  unsigned n = f.nvars();
  Poly G = initial_form(f);

  ExtremalWitness w;
  w.c = F->zero();
  w.L = Poly(F, n);

  // If G = c L^m and l_i != 0 then X_i^m carries coefficient c l_i^m != 0, so
  // some pure power must be present.
  int pivot = -1;
  for (unsigned i = 0; i < n && pivot < 0; ++i) {
    Exponent a;
    a.e[i] = static_cast<uint16_t>(m);
    if (!F->is_zero(G.coeff(a))) pivot = static_cast<int>(i);
  }
  if (pivot < 0) return w;
  Exponent piva;
  piva.e[pivot] = static_cast<uint16_t>(m);
  Scalar c = G.coeff(piva);
  Poly H = G.scale(F->inv(c));

  // Strip Frobenius layers: m = p^a * m' with p not dividing m'; each layer
  // must be an exact p-th power or the form is no m-th power at all.
  unsigned long p = F->characteristic();
  unsigned mp = m;
  if (p > 0) {
    while (mp % p == 0) {
      auto root = poly_pth_root(H, p);
      if (!root) return w;
      H = *root;
      mp = static_cast<unsigned>(mp / p);
    }
  }

  // Now H should be L^mp with the pivot coefficient normalized to 1; read the
  // coefficients off the X_pivot^(mp-1) X_j slice (mp is invertible here).
  Poly L(F, n);
  L.add_term(unit_exp(static_cast<unsigned>(pivot)), F->one());
  Scalar mp_inv = F->inv(F->from_int(static_cast<long>(mp)));
  for (unsigned j = 0; j < n; ++j) {
    if (static_cast<int>(j) == pivot) continue;
    Exponent a;
    a.e[pivot] = static_cast<uint16_t>(mp - 1);
    a.e[j] = 1;
    Scalar lj = F->mul(H.coeff(a), mp_inv);
    if (!F->is_zero(lj)) L.add_term(unit_exp(j), lj);
  }

  if (L.pow(m).scale(c) == G) {
    w.extremal = true;
    w.c = c;
    w.L = L;
  }
  return w;
}

NormalizedFrame normalize_frame(const Poly& f, const Frame& in) {
  const Field* F = f.field();
  unsigned n = f.nvars();
  if (in.names.size() != n)
    fail(ErrCode::InvalidArg, "frame does not match the number of variables");
  DirectrixData dd = directrix(initial_form(f));

  NormalizedFrame out;
  out.r = dd.r;
  out.change = dd.change;
  out.change_inv = dd.change_inv;

  std::vector<Poly> images;
  images.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    Poly img(F, n);
    for (unsigned j = 0; j < n; ++j)
      if (!F->is_zero(dd.change_inv.at(i, j))) img.add_term(unit_exp(j), dd.change_inv.at(i, j));
    images.push_back(std::move(img));
  }
  out.f = compose(f, images);

  // Names: a coordinate row that is a unit vector keeps the original name;
  // every other row gets a fresh synthetic name.
  out.frame.N = in.N;
  out.frame.split = n - dd.r;
  std::vector<std::string> names(n);
  std::vector<bool> used(n, false);
  for (unsigned i = 0; i < n; ++i) {
    int src = -1;
    unsigned nonzero = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (!F->is_zero(out.change.at(i, j))) {
        ++nonzero;
        if (F->is_one(out.change.at(i, j))) src = static_cast<int>(j);
      }
    }
    if (nonzero == 1 && src >= 0 && !used[src]) {
      names[i] = in.names[src];
      used[src] = true;
    }
  }
  unsigned fresh = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (!names[i].empty()) continue;
    std::string cand;
    do {
      cand = (i >= out.frame.split ? "y" : "u") + std::to_string(fresh++);
    } while (std::find(names.begin(), names.end(), cand) != names.end() ||
             std::find(in.names.begin(), in.names.end(), cand) != in.names.end());
    names[i] = cand;
  }
  out.frame.names = std::move(names);
  return out;
}

}  // namespace sing

/**
 * @file rat.hpp
 * @brief Exact rational numbers (GMP-backed) used for orders, slopes and
 *        polyhedron coordinates, plus tiny helpers shared across modules.
 */
#pragma once

#include <gmpxx.h>

#include <string>

namespace sing {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace sing

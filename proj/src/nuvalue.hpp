/**
 * @file nuvalue.hpp
 * @brief Certified order values: exact rationals, lower bounds produced by a
 *        finite-precision computation, and infinity.
 */
#pragma once

#include <string>

#include "field.hpp"

namespace sing {

/// A value of an order-like function, together with what the computation
/// actually certified about it.  `AtLeast` carries the certification degree
/// that produced it: the true value is >= `value`, and nothing sharper is
/// known at the precision used.
struct NuValue {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Exact;
  Rat value = 0;  // meaningless for Infinite

  static NuValue exact(const Rat& v) { return {Kind::Exact, v}; }
  static NuValue at_least(const Rat& v) { return {Kind::AtLeast, v}; }
  static NuValue infinite() { return {Kind::Infinite, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_infinite() const { return kind == Kind::Infinite; }

  /// Divide a finite value by a positive integer (exactness preserved).
  NuValue over(unsigned d) const {
    if (kind == Kind::Infinite) return *this;
    return {kind, value / static_cast<long>(d)};
  }

  bool operator==(const NuValue& o) const {
    if (kind != o.kind) return false;
    return kind == Kind::Infinite || value == o.value;
  }

  std::string str() const {
    if (kind == Kind::Infinite) return "inf";
    std::string s = value.get_str();
    return kind == Kind::AtLeast ? ">=" + s : s;
  }
};

/// Minimum of two certified values.  An exact value below the other's bound
/// stays exact; otherwise the bound wins and exactness is lost.
inline NuValue nu_min(const NuValue& a, const NuValue& b) {
  using K = NuValue::Kind;
  if (a.kind == K::Infinite) return b;
  if (b.kind == K::Infinite) return a;
  if (a.kind == K::Exact && b.kind == K::Exact)
    return NuValue::exact(a.value < b.value ? a.value : b.value);
  if (a.kind == K::Exact && b.kind == K::AtLeast)
    return a.value <= b.value ? a : NuValue::at_least(b.value);
  if (a.kind == K::AtLeast && b.kind == K::Exact)
    return b.value <= a.value ? b : NuValue::at_least(a.value);
  return NuValue::at_least(a.value < b.value ? a.value : b.value);
}

}  // namespace sing

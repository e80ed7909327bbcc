#ifndef FPS_VERDICT_HPP
#define FPS_VERDICT_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "fps/rational.hpp"

namespace fps {

/// Outcome of a property check over a finite index range. A passing verdict
/// carries no witness; a failing one points at the first index violating the
/// defining inequality, together with the values that exhibit the violation
/// (which three values depends on the check, see each function's contract).
struct PropertyVerdict {
  bool holds = true;
  std::optional<std::int64_t> witness_index;
  std::optional<std::array<Rational, 3>> witness_values;

  static PropertyVerdict pass() { return {}; }

  static PropertyVerdict fail(std::int64_t index, Rational u, Rational v, Rational w) {
    PropertyVerdict r;
    r.holds = false;
    r.witness_index = index;
    r.witness_values = {std::move(u), std::move(v), std::move(w)};
    return r;
  }
};

/// Shape classes of a positive log-convex sequence: it is either monotone
/// or falls to a valley at index k and rises from there on.
struct ShapeClass {
  enum class Kind { NonDecreasing, NonIncreasing, Valley };

  Kind kind = Kind::NonDecreasing;
  int valley_index = -1;  // set only for Kind::Valley

  static ShapeClass non_decreasing() { return {Kind::NonDecreasing, -1}; }
  static ShapeClass non_increasing() { return {Kind::NonIncreasing, -1}; }
  static ShapeClass valley_at(int k) { return {Kind::Valley, k}; }

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

}  // namespace fps

#endif

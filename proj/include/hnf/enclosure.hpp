#pragma once

#include "hnf/extreal.hpp"

namespace hnf {

/// Certified two-sided bound on a nonnegative quantity.  Finite enclosures
/// satisfy hi - lo <= tolerance; an infinite supremum is reported exactly as
/// lo = hi = +inf.
struct Enclosure {
  ExtReal lo, hi;
  Rat tolerance;

  bool exact() const { return lo == hi; }
};

}  // namespace hnf

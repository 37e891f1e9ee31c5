#pragma once

#include "meridian/presentation.hpp"

namespace meridian {

inline constexpr long long kDefaultTietzeBudget = 100000;

/// Presentation of the same group with total relator length <= the input's.
/// Applies only length-nonincreasing moves: dropping trivial and duplicate
/// relators, eliminating generators defined by relators of length <= 2, and
/// rewriting a relator with another one when that shortens it. Surviving
/// generators keep their names; budget exhaustion returns the best so far.
Presentation tietze_simplify(const Presentation& p, long long budget = kDefaultTietzeBudget);

}  // namespace meridian

#pragma once

#include <cstddef>
#include <vector>

#include "weylsym/rational.hpp"

namespace weylsym {

/// Rank over Q of the given rows (all of equal length). Rows are scaled to
/// integers and reduced by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace weylsym

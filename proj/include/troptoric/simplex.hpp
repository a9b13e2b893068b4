#pragma once

#include "troptoric/exactalg.hpp"

namespace troptoric {

/// Exact phase-1 simplex: decides whether { x >= 0 : A x = b } is nonempty
/// and returns a feasible point when it is. Bland's rule, so it terminates.
std::optional<std::vector<Rat>> lp_feasible_point(const RationalMatrix& a,
                                                  const std::vector<Rat>& b);

}  // namespace troptoric

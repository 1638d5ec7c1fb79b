#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "omsep/signed_set.hpp"

namespace omsep {

// Requires sign(<coeffs, x>) == sign.
struct SignConstraint {
  std::vector<mpq_class> coeffs;
  Sign sign = Sign::Plus;
};

// Decides whether some x in Q^dim satisfies every constraint. Strict rows
// are normalized to sign * <c, x> >= 1, which is exact for homogeneous
// systems; zero rows become equalities. Solved by a dense rational phase-one
// simplex with Bland's rule. Returns a verified witness when feasible.
std::optional<std::vector<mpq_class>> strict_sign_feasibility(const std::vector<SignConstraint>& rows, int dim);

}  // namespace omsep

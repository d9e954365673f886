#pragma once

#include <vector>

#include "holodet/rational.hpp"

namespace holodet {

// Deterministic specialization points for mu. Positive non-integer
// rationals, so they dodge the degenerate integer choices in [-4n-2, 0]
// for every n. Same seed, same points.
std::vector<Rational> seeded_mu_points(unsigned long seed, int count);

}  // namespace holodet

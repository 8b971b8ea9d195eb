#pragma once

// Seeded random graphs for the property suites.

#include "glsmx/graphs.hpp"

#include <random>

namespace glsmx::samples {

// Connected dual graph (d = 5, LG) with every vertex infinity-stable, no
// basepoints and 2g - 2 + n + epsilon beta > 0 overall.  Rational tails of
// small degree are common.
DualGraph random_infinity_stable_graph(std::mt19937& rng, const BigRat& epsilon);

// Stable decorated triple on 1-3 vertices: spanning tree plus at most one
// extra edge, genus <= 1 per vertex, at most 2 legs, beta <= 2, n' <= 1.
DualGraph random_triple(std::mt19937& rng);

}  // namespace glsmx::samples

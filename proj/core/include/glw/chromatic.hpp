#pragma once

#include "glw/graph.hpp"
#include "glw/mpoly.hpp"

namespace glw {

// Chromatic polynomial by deletion-contraction with parallel-edge merging,
// memoized on the exact canonical key of the edge-carrying core. Weights are
// ignored. Thread-safe.
MPoly chromatic_polynomial(const SimpleGraph& g);

}  // namespace glw

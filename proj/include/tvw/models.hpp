#pragma once

#include "tvw/drawing.hpp"

#include <utility>
#include <vector>

namespace tvw {

// Alternating linear model of K_n: vertices at (i,0); edge [i,i+1] straight
// on the axis; edge [i,i+k] (k >= 2) a two-segment tent through apex
// ((2i+k)/2, s k^2), s = +1 for odd i, -1 for even i. Squared apex heights
// keep same-side edges sharing an endpoint non-collinear. The result is
// passed through perturb_to_general_position and validated.
Drawing alternating_linear_model(int n);

// Star-deletion counterexample family: the alternating model of K_{3q-2}
// with the q-1 star edges N = {1,3,...,2q-3} x {3q-2} removed (meeting at
// the right-end vertex). The result admits no q-winding partition. Returns
// the drawing and N.
std::pair<Drawing, std::vector<std::pair<int, int>>> star_deletion_drawing(int q);

} // namespace tvw

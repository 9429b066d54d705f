#pragma once

#include "tvw/point.hpp"

#include <vector>

namespace tvw {

// A labeled point configuration in R^d (labels 0..N-1 by position),
// representing the vertex images of a linear map on the simplex.
struct PointConfiguration {
    int d = 0;
    std::vector<PointD> points;
};

// Throws std::invalid_argument on coordinate-count mismatches or d < 1.
void validate_config(const PointConfiguration& c);

// Unordered partition into pairwise-disjoint nonempty label sets, stored
// canonically: each part ascending, parts ordered by minimum label.
using FacePartition = std::vector<std::vector<int>>;

FacePartition canonical_partition(FacePartition p);

// Definitional general position for configurations: for every family of
// pairwise disjoint label sets, the intersection of their affine hulls has
// codimension at least the sum of the individual codimensions (empty
// intersections pass). Subset rank conditions (no k+2 points in a k-flat,
// k < d) are a necessary pre-filter but not sufficient; the family condition
// is checked by exact affine-hull intersection.
bool check_affine_general_position(const PointConfiguration& c);

} // namespace tvw

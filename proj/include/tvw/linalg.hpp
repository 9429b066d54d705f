#pragma once

#include "tvw/point.hpp"

#include <utility>
#include <vector>

namespace tvw {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

int matrix_rank(RatMat m);

// Dimension of the affine hull of the given points (all of equal dimension).
int affine_dim(const std::vector<PointD>& pts);

// Basis of { a : a . v = 0 for every row v }; rows have length dim.
RatMat nullspace(const RatMat& rows, int dim);

// Incrementally row-reduced system of affine equations a . x = b over Q.
// Tracks rank and consistency; geometrically the solution set is an affine
// subspace of codimension rank() (empty iff inconsistent()).
class LinearSystem {
public:
    explicit LinearSystem(int dim) : dim_(dim) {}

    void add_equation(RatRow a, Rat b);

    int rank() const { return static_cast<int>(rows_.size()); }
    bool inconsistent() const { return inconsistent_; }
    int dim() const { return dim_; }

private:
    int dim_;
    bool inconsistent_ = false;
    std::vector<std::pair<RatRow, Rat>> rows_; // pivot-normalized, ascending pivot column
    std::vector<int> pivots_;
};

} // namespace tvw

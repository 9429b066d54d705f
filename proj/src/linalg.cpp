#include "tvw/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace tvw {

int matrix_rank(RatMat m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

int affine_dim(const std::vector<PointD>& pts) {
    if (pts.empty()) return -1;
    RatMat dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatRow d(pts[0].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[i][c] - pts[0][c];
        dirs.push_back(std::move(d));
    }
    if (dirs.empty()) return 0;
    return matrix_rank(std::move(dirs));
}

RatMat nullspace(const RatMat& rows, int dim) {
    // Reduced row echelon form, then one basis vector per free column.
    RatMat m = rows;
    std::vector<int> pivot_of_row;
    std::size_t row = 0;
    for (int col = 0; col < dim && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Rat inv = m[row][col];
        for (int c = 0; c < dim; ++c) m[row][c] /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = 0; c < dim; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_of_row) is_pivot[c] = true;

    RatMat basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatRow v(dim, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_of_row.size(); ++r)
            v[pivot_of_row[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

void LinearSystem::add_equation(RatRow a, Rat b) {
    if (static_cast<int>(a.size()) != dim_)
        throw std::invalid_argument("equation dimension mismatch");
    if (inconsistent_) return;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int p = pivots_[r];
        if (a[p] == 0) continue;
        const Rat f = a[p];
        for (int c = 0; c < dim_; ++c) a[c] -= f * rows_[r].first[c];
        b -= f * rows_[r].second;
    }
    int pivot = -1;
    for (int c = 0; c < dim_; ++c)
        if (a[c] != 0) { pivot = c; break; }
    if (pivot < 0) {
        if (b != 0) inconsistent_ = true;
        return;
    }
    const Rat inv = a[pivot];
    for (int c = 0; c < dim_; ++c) a[c] /= inv;
    b /= inv;
    rows_.emplace_back(std::move(a), std::move(b));
    pivots_.push_back(pivot);
}

} // namespace tvw

#include "tvw/config.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvw/linalg.hpp"

namespace tvw {

void validate_config(const PointConfiguration& c) {
    if (c.d < 1) throw std::invalid_argument("configuration dimension must be >= 1");
    for (const auto& p : c.points)
        if (static_cast<int>(p.size()) != c.d)
            throw std::invalid_argument("configuration point with wrong coordinate count");
}

FacePartition canonical_partition(FacePartition p) {
    for (auto& part : p) std::sort(part.begin(), part.end());
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

// Equations of the affine hull of the labeled points: normals spanning the
// orthogonal complement of the direction space, each paired with its offset.
std::vector<std::pair<RatRow, Rat>> hull_equations(const PointConfiguration& c,
                                                   const std::vector<int>& part) {
    const int d = c.d;
    const PointD& p0 = c.points[part[0]];
    RatMat dirs;
    for (std::size_t i = 1; i < part.size(); ++i) {
        RatRow row(d);
        for (int k = 0; k < d; ++k) row[k] = c.points[part[i]][k] - p0[k];
        dirs.push_back(std::move(row));
    }
    RatMat normals;
    if (dirs.empty()) {
        normals.assign(d, RatRow(d, Rat(0)));
        for (int k = 0; k < d; ++k) normals[k][k] = 1;
    } else {
        normals = nullspace(dirs, d);
    }
    std::vector<std::pair<RatRow, Rat>> eqs;
    for (auto& a : normals) {
        Rat b = 0;
        for (int k = 0; k < d; ++k) b += a[k] * p0[k];
        eqs.emplace_back(std::move(a), std::move(b));
    }
    return eqs;
}

struct FamilySearch {
    const PointConfiguration& c;
    int n, d;

    // Extends the family by one more part whose minimum label exceeds
    // last_min; returns false once some family violates the codimension
    // inequality. Empty intersections prune their whole superfamily.
    bool extend(std::vector<bool>& used, int last_min, const LinearSystem& sys,
                int sum_codim, int parts) {
        std::vector<int> part;
        for (int l = last_min + 1; l < n; ++l) {
            if (used[l]) continue;
            part.assign(1, l);
            used[l] = true;
            if (!grow(used, l, part, sys, sum_codim, parts)) { used[l] = false; return false; }
            used[l] = false;
        }
        return true;
    }

    // Grows the current part (min label fixed) and, at each size, stacks its
    // hull equations and recurses into further parts.
    bool grow(std::vector<bool>& used, int min_label, std::vector<int>& part,
              const LinearSystem& base, int sum_codim, int parts) {
        LinearSystem sys = base;
        for (const auto& [a, b] : hull_equations(c, part)) sys.add_equation(a, b);
        const int codim = sum_codim + (d - static_cast<int>(part.size()) + 1);
        if (!sys.inconsistent()) {
            if (parts + 1 >= 2 && sys.rank() < codim) return false;
            if (!extend(used, min_label, sys, codim, parts + 1)) return false;
        }
        if (static_cast<int>(part.size()) < d) {
            for (int l = part.back() + 1; l < n; ++l) {
                if (used[l]) continue;
                part.push_back(l);
                used[l] = true;
                const bool ok = grow(used, min_label, part, base, sum_codim, parts);
                used[l] = false;
                part.pop_back();
                if (!ok) return false;
            }
        }
        return true;
    }
};

} // namespace

bool check_affine_general_position(const PointConfiguration& c) {
    validate_config(c);
    const int n = static_cast<int>(c.points.size());
    const int d = c.d;

    // Subset conditions: every subset of at most d+1 points is affinely
    // independent (no k+2 points in a common k-flat for k < d). Necessary
    // but not sufficient; the family condition below completes the check.
    std::vector<int> idx;
    const auto subsets_independent = [&](auto&& self, int start, int remaining) -> bool {
        if (idx.size() >= 2) {
            std::vector<PointD> pts;
            for (int i : idx) pts.push_back(c.points[i]);
            if (affine_dim(pts) != static_cast<int>(idx.size()) - 1) return false;
        }
        if (remaining == 0) return true;
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            if (!self(self, i + 1, remaining - 1)) return false;
            idx.pop_back();
        }
        return true;
    };
    if (!subsets_independent(subsets_independent, 0, d + 1)) return false;

    // Family condition over disjoint parts of size <= d (larger parts span
    // R^d here and contribute nothing to either side).
    FamilySearch search{c, n, d};
    std::vector<bool> used(n, false);
    return search.extend(used, -1, LinearSystem(d), 0, 0);
}

} // namespace tvw

#include "tvw/lp.hpp"

#include <stdexcept>

namespace tvw {

std::optional<std::vector<Rat>> lp_feasible_point(const std::vector<std::vector<Rat>>& A,
                                                  const std::vector<Rat>& b,
                                                  LpStats* stats) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
    const std::size_t n = m ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("lp: ragged matrix");
    if (m == 0) return std::vector<Rat>(n, Rat(0));

    // Tableau over columns [x_0..x_{n-1}, a_0..a_{m-1}], all rows with rhs >= 0.
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(n + m, Rat(0)));
    std::vector<Rat> rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? -A[i][j] : A[i][j];
        rhs[i] = flip ? -b[i] : b[i];
        T[i][n + i] = 1;
        basis[i] = n + i;
    }

    // Phase-1 objective: minimize the artificial sum, expressed in the
    // current basis (artificials basic, so subtract every row).
    std::vector<Rat> obj(n + m, Rat(0));
    Rat obj_val = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) obj[j] -= T[i][j];
        obj_val -= rhs[i];
    }

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter == n + m) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            const Rat cur = rhs[i] * T[leave][enter];
            const Rat best = rhs[leave] * T[i][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m)
            throw std::logic_error("lp: phase-1 objective unbounded");

        if (stats) ++stats->pivots;
        const Rat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rat f = T[i][enter];
            for (std::size_t j = 0; j < n + m; ++j) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (obj[enter] != 0) {
            const Rat f = obj[enter];
            for (std::size_t j = 0; j < n + m; ++j) obj[j] -= f * T[leave][j];
            obj_val -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    if (obj_val != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = rhs[i];
    return x;
}

} // namespace tvw

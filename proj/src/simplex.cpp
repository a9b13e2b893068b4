#include "troptoric/simplex.hpp"

#include <stdexcept>

namespace troptoric {

// Tableau phase 1: minimize sum of artificials for A x = b, x >= 0.
std::optional<std::vector<Rat>> lp_feasible_point(const RationalMatrix& a,
                                                  const std::vector<Rat>& b) {
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("rhs dimension mismatch");

    // Columns: n original + m artificial; rows: m constraints + objective.
    std::size_t total = n + m;
    RationalMatrix t(m + 1, total + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * a.at(i, j);
        t.at(i, n + i) = 1;
        t.at(i, total) = sign * b[i];
    }
    // Objective row: sum of artificial rows (to express z in terms of nonbasics).
    for (std::size_t j = 0; j <= total; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t.at(i, j);
        t.at(m, j) = s;
    }
    for (std::size_t i = 0; i < m; ++i) t.at(m, n + i) = 0;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: entering = lowest-index column with positive reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (t.at(m, j) > 0) { enter = j; break; }
        if (enter == total) break;
        // Ratio test, Bland tie-break on basis variable index.
        std::size_t leave = m;
        Rat best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.at(i, enter) <= 0) continue;
            Rat ratio = t.at(i, total) / t.at(i, enter);
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded phase-1 never happens; defensive exit
        Rat piv = t.at(leave, enter);
        for (std::size_t j = 0; j <= total; ++j) t.at(leave, j) /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t.at(i, enter) == 0) continue;
            Rat f = t.at(i, enter);
            for (std::size_t j = 0; j <= total; ++j) t.at(i, j) -= f * t.at(leave, j);
        }
        basis[leave] = enter;
    }

    if (t.at(m, total) != 0) return std::nullopt;  // infeasible
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t.at(i, total);
    return x;
}

}  // namespace troptoric

#pragma once

#include <vector>

#include "schurcone/errors.hpp"
#include "schurcone/numbers.hpp"

namespace schurcone {

/// Outcome of the phase-1 solve for {Ax = b, x >= 0} with b >= 0.
struct Phase1Result {
    bool feasible = false;
    std::vector<Rational> primal;  // per column; a basic feasible solution when feasible
    std::vector<Rational> dual;    // per row; Farkas vector pi when infeasible:
                                   // <pi, b> > 0 and pi^T A <= 0 componentwise
};

/// Phase-1 simplex over exact rationals: minimizes the sum of artificial
/// variables with Bland's anti-cycling pivot rule (lowest eligible column
/// index enters; ratio ties leave by lowest basic index). Terminates for
/// every input. columns[j][i] is the entry of column j in row i.
inline Phase1Result phase1_simplex(const std::vector<std::vector<Rational>>& columns,
                                   const std::vector<Rational>& rhs) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != m) throw Error("phase1_simplex: ragged column");
    for (const auto& b : rhs)
        if (b < 0) throw Error("phase1_simplex: rhs must be nonnegative");

    // tableau rows: [structural | artificial | rhs]; artificial i is basic in row i
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = columns[j][i];
        tab[i][n + i] = 1;
        tab[i][width - 1] = rhs[i];
    }
    // objective row holds reduced costs for min sum(artificials); canonical
    // form subtracts every constraint row from the cost row
    std::vector<Rational> obj(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j) obj[j] -= tab[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        std::size_t enter = width;  // Bland: lowest index with negative reduced cost
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][width - 1] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) throw Error("phase1_simplex: unbounded phase-1 objective");

        // pivot on (leave, enter)
        Rational piv = tab[leave][enter];
        for (auto& x : tab[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
        }
        if (obj[enter] != 0) {
            Rational f = obj[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (tab[leave][j] != 0) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    Phase1Result out;
    Rational objective = -obj[width - 1];
    out.feasible = objective == 0;
    if (out.feasible) {
        out.primal.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) out.primal[basis[i]] = tab[i][width - 1];
    } else {
        // dual values from the final reduced costs of the artificial columns
        out.dual.assign(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) out.dual[i] = Rational(1) - obj[n + i];
    }
    return out;
}

}  // namespace schurcone

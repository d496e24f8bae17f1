#pragma once

#include <optional>

#include "schurcone/partition.hpp"

namespace schurcone {

/// lambda[rho] for a two-part rho = (r1, r2): increments the FIRST part equal
/// to r1 and decrements the LAST part equal to r2 (these index choices are
/// forced by the defining inequalities lambda_{i-1} > lambda_i = r1 and
/// lambda_j = r2 > lambda_{j+1}), requiring i < j. A part dropping to zero is
/// stripped. Throws BumpUndefinedError when no valid (i, j) exists.
inline Partition bump(const Partition& lambda, const Partition& rho) {
    if (rho.size() != 2) throw Error("bump: rho must have exactly two parts");
    const int r1 = rho.part(1), r2 = rho.part(2);
    int i = 0, j = 0;  // 1-based; 0 = absent
    for (int t = 1; t <= lambda.size(); ++t) {
        if (lambda.part(t) == r1 && i == 0) i = t;
        if (lambda.part(t) == r2) j = t;
    }
    if (i == 0 || j == 0 || i >= j)
        throw BumpUndefinedError("bump undefined for lambda=" + to_string(lambda) +
                                 ", rho=" + to_string(rho));
    auto parts = lambda.parts();
    parts[i - 1] += 1;
    parts[j - 1] -= 1;
    return Partition(std::move(parts));
}

/// lambda[rho^k] with rho = (p,p): k-fold bump. Returns nullopt (the
/// distinguished Undefined value) when some stage has fewer than two parts
/// equal to p. k = 0 returns lambda itself, always defined.
inline std::optional<Partition> bump_iter(const Partition& lambda, int p, int k) {
    Partition cur = lambda;
    const Partition rho({p, p});
    for (int step = 0; step < k; ++step) {
        int count = static_cast<int>(std::count(cur.parts().begin(), cur.parts().end(), p));
        if (count < 2) return std::nullopt;
        cur = bump(cur, rho);
    }
    return cur;
}

/// x <=_p y: some k >= 0 has y[rho^k] defined and x dominated by it
/// (rho = (p,p)). Each bump consumes two p's, so the search terminates.
inline bool leq_p(const Partition& x, const Partition& y, int p) {
    if (x.weight() != y.weight())
        throw WeightMismatchError("leq_p compares partitions of equal weight");
    Partition cur = y;
    const Partition rho({p, p});
    for (;;) {
        if (dominates(cur, x)) return true;
        int count = static_cast<int>(std::count(cur.parts().begin(), cur.parts().end(), p));
        if (count < 2) return false;
        cur = bump(cur, rho);
    }
}

}  // namespace schurcone

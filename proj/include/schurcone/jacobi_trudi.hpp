#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "schurcone/schur_vector.hpp"
#include "schurcone/tableau.hpp"

namespace schurcone {

namespace jt_detail {

/// h_mu in the Schur basis: h_mu = sum_lam K_{lam,mu} s_lam.
inline SchurVector h_to_schur(const Partition& mu) {
    SchurVector out(mu.weight());
    for (const auto& lam : enumerate_partitions(mu.weight())) {
        Int k = kostka(lam, mu);
        if (k != 0) out.set(lam, k);
    }
    return out;
}

}  // namespace jt_detail

/// Expands det(h_{lam_i + j - i}) as a signed sum over permutations, rewrites
/// each h-product into the Schur basis via Kostka numbers, and checks the
/// result is exactly s_lam.
inline bool jacobi_trudi_check(const Partition& lam, int bound = 8) {
    if (lam.weight() > bound)
        throw BoundExceededError("jacobi_trudi_check: |lam| exceeds bound");
    if (lam.empty()) return true;  // 0x0 determinant is 1 = s_{}
    const int k = lam.size();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, SchurVector> h_cache;
    SchurVector acc(lam.weight());
    do {
        // sign = parity of the permutation
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::vector<int> degrees;
        bool zero = false;
        for (int i = 1; i <= k && !zero; ++i) {
            int d = lam.part(i) + (perm[i - 1] + 1) - i;
            if (d < 0) zero = true;  // h_r = 0 for r < 0
            if (d > 0) degrees.push_back(d);
        }
        if (zero) continue;
        std::sort(degrees.begin(), degrees.end(), std::greater<>());
        Partition mu(degrees);
        auto it = h_cache.find(mu);
        if (it == h_cache.end()) it = h_cache.emplace(mu, jt_detail::h_to_schur(mu)).first;
        if (inversions % 2 == 0)
            acc += it->second;
        else
            acc -= it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));

    SchurVector expected(lam.weight());
    expected.set(lam, 1);
    return acc == expected;
}

}  // namespace schurcone

#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schurcone/multiset.hpp"
#include "schurcone/partition.hpp"
#include "schurcone/schur_vector.hpp"

namespace schurcone {

/// Letters 1..n partitioned into one block per canonical entry of the
/// multiset; block i collects the letters assigned to entry i's parts.
struct BlockAssignment {
    std::vector<std::vector<int>> blocks;  // each sorted ascending
};

/// Tags every part with its source entry, stable-sorts descending by value
/// (ties: canonical entry index, then position within the entry), and
/// assigns letters 1..n in sorted order. content is phi(A).
inline std::pair<Partition, BlockAssignment> block_assignment(const PartitionMultiset& a) {
    struct Slot {
        int value, entry, pos;
    };
    std::vector<Slot> slots;
    const auto& es = a.entries();
    for (int e = 0; e < static_cast<int>(es.size()); ++e)
        for (int p = 0; p < es[e].size(); ++p) slots.push_back({es[e].part(p + 1), e, p});
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
        if (x.value != y.value) return x.value > y.value;
        if (x.entry != y.entry) return x.entry < y.entry;
        return x.pos < y.pos;
    });
    BlockAssignment ba;
    ba.blocks.resize(es.size());
    std::vector<int> content;
    for (int letter = 1; letter <= static_cast<int>(slots.size()); ++letter) {
        ba.blocks[slots[letter - 1].entry].push_back(letter);
        content.push_back(slots[letter - 1].value);
    }
    return {Partition(std::move(content)), std::move(ba)};
}

/// Counts SSYT of the given shape and content whose reading word, restricted
/// to each block's alphabet (relabeled ascending), is Yamanouchi. This is
/// the single-tableau counting model; see lr_multi for the production
/// coefficient path and tests/test_schur.cpp for the model's validity limits.
inline Int block_ballot_count(const Partition& content, const BlockAssignment& assignment,
                              const Partition& shape) {
    if (content.weight() != shape.weight())
        throw WeightMismatchError("block_ballot_count: |content| != |shape|");
    const int n = content.size();
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);  // previous letter in the block
    for (const auto& b : assignment.blocks)
        for (std::size_t i = 1; i < b.size(); ++i) prev[static_cast<std::size_t>(b[i])] = b[i - 1];

    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) remaining[static_cast<std::size_t>(v)] = content.part(v);
    std::vector<int> cnt(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.size()));
    for (int r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);

    Int total = 0;
    // cells in reading order: each row right to left, top row first
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.size()) {
            ++total;
            return;
        }
        int nr = r, nc = c - 1;
        if (nc < 0) {
            nr = r + 1;
            nc = nr < shape.size() ? shape.part(nr + 1) - 1 : 0;
        }
        int lo = r + 1;
        if (r > 0 && c < shape.part(r)) lo = std::max(lo, rows[r - 1][c] + 1);
        int hi = n;
        if (c + 1 < shape.part(r + 1)) hi = std::min(hi, rows[r][c + 1]);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[v] == 0) continue;
            if (prev[v] != 0 && cnt[prev[v]] <= cnt[v]) continue;  // prefix ballot
            rows[r][c] = v;
            --remaining[v];
            ++cnt[v];
            self(self, nr, nc);
            ++remaining[v];
            --cnt[v];
        }
        rows[r][c] = 0;
    };
    if (shape.weight() == 0) return 1;
    rec(rec, 0, shape.part(1) - 1);
    return total;
}

/// Two-factor Littlewood-Richardson coefficient c_{mu,nu}^{lam}: the number
/// of fillings of the cells of lam outside mu with content nu, rows weakly
/// increasing, columns strictly increasing, whose reading word (right to
/// left, top row first) is Yamanouchi. Returns 0 when the weights do not add
/// up or mu is not contained in lam.
inline Int lr_two(const Partition& mu, const Partition& nu, const Partition& lam) {
    if (mu.weight() + nu.weight() != lam.weight()) return 0;
    if (mu.size() > lam.size()) return 0;
    for (int i = 1; i <= mu.size(); ++i)
        if (mu.part(i) > lam.part(i)) return 0;
    if (nu.empty()) return 1;  // containment already checked; lam == mu
    const int n = nu.size();

    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < lam.size(); ++r)
        for (int c = lam.part(r + 1) - 1; c >= mu.part(r + 1); --c) cells.push_back({r, c});

    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) remaining[static_cast<std::size_t>(v)] = nu.part(v);
    std::vector<int> cnt(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lam.size()));
    for (int r = 0; r < lam.size(); ++r) rows[r].assign(static_cast<std::size_t>(lam.part(r + 1)), 0);

    Int total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (r > 0 && c < lam.part(r) && c >= mu.part(r)) lo = rows[r - 1][c] + 1;
        int hi = n;
        if (c + 1 < lam.part(r + 1)) hi = std::min(hi, rows[r][c + 1]);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[v] == 0) continue;
            if (v > 1 && cnt[v - 1] <= cnt[v]) continue;  // prefix ballot
            rows[r][c] = v;
            --remaining[v];
            ++cnt[v];
            self(self, idx + 1);
            ++remaining[v];
            --cnt[v];
        }
        rows[r][c] = 0;
    };
    rec(rec, 0);
    return total;
}

namespace detail {

/// Multiplies a Schur expansion by s_rho via two-factor coefficients.
inline SchurVector schur_multiply(const SchurVector& v, const Partition& rho) {
    SchurVector out(v.degree() + rho.weight());
    if (rho.empty()) {
        for (const auto& [k, c] : v.coeffs()) out.set(k, c);
        return out;
    }
    auto targets = enumerate_partitions(out.degree());
    for (const auto& [kappa, c] : v.coeffs()) {
        for (const auto& lam : targets) {
            if (lam.size() > kappa.size() + rho.size()) continue;
            if (lam.part(1) > kappa.part(1) + rho.part(1)) continue;
            Int t = lr_two(kappa, rho, lam);
            if (t != 0) out.add(lam, c * t);
        }
    }
    return out;
}

}  // namespace detail

/// Expands the product s_A = prod_{rho in A} s_rho in the Schur basis, by
/// folding two-factor expansions over the canonical entries. The support
/// lies in {lam : lam dominates phi(A)} with a unit coefficient at phi(A).
inline SchurVector expand_product(const PartitionMultiset& a) {
    SchurVector v(0);
    v.set(Partition{}, 1);
    for (const auto& e : a.entries()) v = detail::schur_multiply(v, e);
    return v;
}

/// Generalized Littlewood-Richardson coefficient c_A^{lam}, the coefficient
/// of s_lam in s_A. Two-factor queries count directly; larger multisets go
/// through the product expansion.
inline Int lr_multi(const PartitionMultiset& a, const Partition& lam) {
    if (a.total_weight() != lam.weight())
        throw WeightMismatchError("lr_multi: |lam| != total weight of A");
    if (a.size() == 0) return lam.empty() ? 1 : 0;
    if (a.size() == 1) return a.entries()[0] == lam ? 1 : 0;
    if (a.size() == 2) return lr_two(a.entries()[0], a.entries()[1], lam);
    return expand_product(a).coefficient(lam);
}

/// Thread-safe memo of product expansions keyed by canonical multiset.
class ProductCache {
  public:
    std::shared_ptr<const SchurVector> get(const PartitionMultiset& a) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(a);
            if (it != map_.end()) return it->second;
        }
        auto vec = std::make_shared<const SchurVector>(expand_product(a));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace(a, std::move(vec));
        return it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<PartitionMultiset, std::shared_ptr<const SchurVector>> map_;
};

}  // namespace schurcone

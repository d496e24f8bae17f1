#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "schurcone/partition.hpp"

namespace schurcone {

/// A multiset of nonempty partitions, the generator index A of s_A.
/// Canonical storage: entries sorted descending lexicographically. Empty
/// partitions in constructor input are dropped (they contribute nothing to
/// phi or to the product s_A).
class PartitionMultiset {
  public:
    PartitionMultiset() = default;

    explicit PartitionMultiset(std::vector<Partition> entries) {
        entries_ = std::move(entries);
        std::erase_if(entries_, [](const Partition& p) { return p.empty(); });
        std::sort(entries_.begin(), entries_.end(), std::greater<>());
        total_weight_ = 0;
        for (const auto& e : entries_) total_weight_ += e.weight();
    }

    PartitionMultiset(std::initializer_list<Partition> entries)
        : PartitionMultiset(std::vector<Partition>(entries)) {}

    const std::vector<Partition>& entries() const { return entries_; }
    int total_weight() const { return total_weight_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// Smallest k with every entry in P^k.
    int max_parts() const {
        int m = 0;
        for (const auto& e : entries_) m = std::max(m, e.size());
        return m;
    }

    bool contains(const Partition& p) const {
        return std::find(entries_.begin(), entries_.end(), p) != entries_.end();
    }

    int multiplicity(const Partition& p) const {
        return static_cast<int>(std::count(entries_.begin(), entries_.end(), p));
    }

    /// This multiset with one occurrence of p removed (p must be present).
    PartitionMultiset without(const Partition& p) const {
        auto es = entries_;
        auto it = std::find(es.begin(), es.end(), p);
        if (it == es.end()) throw Error("without: entry not present");
        es.erase(it);
        return PartitionMultiset(std::move(es));
    }

    PartitionMultiset with(const Partition& p) const {
        auto es = entries_;
        es.push_back(p);
        return PartitionMultiset(std::move(es));
    }

    friend bool operator==(const PartitionMultiset& a, const PartitionMultiset& b) = default;
    friend auto operator<=>(const PartitionMultiset& a, const PartitionMultiset& b) {
        return a.entries_ <=> b.entries_;
    }

  private:
    std::vector<Partition> entries_;
    int total_weight_ = 0;
};

/// phi(A): the parts of all entries merged and sorted weakly decreasing.
inline Partition phi(const PartitionMultiset& a) {
    std::vector<int> parts;
    for (const auto& e : a.entries())
        parts.insert(parts.end(), e.parts().begin(), e.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

/// Text format: partition strings joined by '|' ("3,2|3,1|4"); empty string
/// is the empty multiset.
inline std::string to_string(const PartitionMultiset& a) {
    std::string s;
    for (const auto& e : a.entries()) {
        if (!s.empty()) s += '|';
        s += to_string(e);
    }
    return s;
}

inline PartitionMultiset parse_multiset(const std::string& text) {
    if (text.empty()) return {};
    std::vector<Partition> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '|')) {
        if (item.empty()) throw ParseError("empty component in multiset '" + text + "'");
        entries.push_back(parse_partition(item));
    }
    if (text.back() == '|') throw ParseError("trailing '|' in multiset '" + text + "'");
    return PartitionMultiset(std::move(entries));
}

/// All multisets of partitions from P^k with total weight n, each exactly
/// once. Order: entries are chosen descending-lexicographically, largest
/// first entry first, so the output sequence is itself descending in the
/// canonical entry-sequence order.
inline std::vector<PartitionMultiset> enumerate_generators(int n, int k) {
    std::vector<Partition> candidates;  // all entries of weight <= n, <= k parts, desc lex
    for (int w = 1; w <= n; ++w)
        for (auto& p : enumerate_partitions(w, std::min(w, k))) candidates.push_back(std::move(p));
    std::sort(candidates.begin(), candidates.end(), std::greater<>());

    std::vector<PartitionMultiset> out;
    std::vector<Partition> acc;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(PartitionMultiset(acc));
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (candidates[i].weight() > remaining) continue;
            acc.push_back(candidates[i]);
            self(self, i, remaining - candidates[i].weight());
            acc.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace schurcone

template <>
struct std::hash<schurcone::PartitionMultiset> {
    std::size_t operator()(const schurcone::PartitionMultiset& a) const noexcept {
        std::size_t h = 14695981039346656037ull;
        std::hash<schurcone::Partition> hp;
        for (const auto& e : a.entries()) {
            h ^= hp(e);
            h *= 1099511628211ull;
            h ^= 0x9e3779b97f4a7c15ull;
        }
        return h;
    }
};

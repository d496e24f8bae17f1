#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurcone/multiset.hpp"

namespace schurcone {

/// Result of the pairwise bad-pair scan over a multiset. Condition labels for
/// the k<=2 conditions are "1", "2", "3"; the k=3 conditions use "k3-1" ..
/// "k3-5".
struct BadPairReport {
    struct Violation {
        int first;   // entry indices into the canonical entry order
        int second;
        std::string condition;
    };
    bool is_nested = true;
    std::vector<Violation> violations;
};

namespace detail {

// condition (1): both two-part, l1 > m1 >= l2 > m2
inline bool bad_cond1(const Partition& l, const Partition& m) {
    return l.size() == 2 && m.size() == 2 &&
           l.part(1) > m.part(1) && m.part(1) >= l.part(2) && l.part(2) > m.part(2);
}

// condition (2): l strictly two-part, m one-part, l1 >= m1 >= l2
inline bool bad_cond2(const Partition& l, const Partition& m) {
    return l.size() == 2 && l.part(1) > l.part(2) && m.size() == 1 &&
           l.part(1) >= m.part(1) && m.part(1) >= l.part(2);
}

}  // namespace detail

/// The bad-pair condition (if any) satisfied by an unordered pair of
/// partitions with at most two parts each, per the k=2 classification.
inline std::optional<std::string> bad_pair_condition(const Partition& a, const Partition& b) {
    if (a.size() > 2 || b.size() > 2)
        throw Error("bad_pair_condition: entries must have at most 2 parts");
    if (detail::bad_cond1(a, b) || detail::bad_cond1(b, a)) return "1";
    if (detail::bad_cond2(a, b) || detail::bad_cond2(b, a)) return "2";
    if (a.size() == 1 && b.size() == 1) return "3";
    return std::nullopt;
}

/// Scans every unordered pair of entries (entries must have <= 2 parts) and
/// reports all bad pairs with their condition labels.
inline BadPairReport nested_report(const PartitionMultiset& a) {
    BadPairReport report;
    const auto& es = a.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].size() > 2) throw Error("nested_report: entry with more than 2 parts");
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (auto c = bad_pair_condition(es[i], es[j]))
                report.violations.push_back({static_cast<int>(i), static_cast<int>(j), *c});
        }
    }
    report.is_nested = report.violations.empty();
    return report;
}

inline bool is_nested(const PartitionMultiset& a) { return nested_report(a).is_nested; }

/// Known k=3 bad-pair conditions. Returns the first matching label among the
/// five k=3 cases, then the k<=2 conditions; nullopt means "not in the known
/// list" and does NOT assert the pair is good (the list is not exhaustive).
inline std::optional<std::string> k3_known_bad_pair(const Partition& lambda, const Partition& mu) {
    if (lambda.size() > 3 || mu.size() > 3)
        throw Error("k3_known_bad_pair: entries must have at most 3 parts");
    auto check = [](const Partition& l, const Partition& m) -> std::optional<std::string> {
        // (k3-1): any two-part with any one-part
        if (l.size() == 2 && m.size() == 1) return "k3-1";
        // (k3-2): (l1, l2, 1) with (m1), l1 > m1 >= l2
        if (l.size() == 3 && l.part(3) == 1 && m.size() == 1 &&
            l.part(1) > m.part(1) && m.part(1) >= l.part(2))
            return "k3-2";
        // (k3-3): three-part with two-part, l1 > m1 >= l2 > m2 >= l3
        if (l.size() == 3 && m.size() == 2 && l.part(1) > m.part(1) &&
            m.part(1) >= l.part(2) && l.part(2) > m.part(2) && m.part(2) >= l.part(3))
            return "k3-3";
        // (k3-4): both three-part, interleaved strict/weak chain
        if (l.size() == 3 && m.size() == 3 && l.part(1) > m.part(1) &&
            m.part(1) >= l.part(2) && l.part(2) > m.part(2) && m.part(2) >= l.part(3) &&
            l.part(3) > m.part(3))
            return "k3-4";
        // (k3-5): both two-part, l1 >= m1 >= m2 >= l2
        if (l.size() == 2 && m.size() == 2 && l.part(1) >= m.part(1) &&
            m.part(1) >= m.part(2) && m.part(2) >= l.part(2))
            return "k3-5";
        return std::nullopt;
    };
    for (int c = 1; c <= 5; ++c) {
        // fixed label order: probe both orientations per condition
        auto pick = [&](const Partition& l, const Partition& m) -> std::optional<std::string> {
            auto r = check(l, m);
            if (r && *r == "k3-" + std::to_string(c)) return r;
            return std::nullopt;
        };
        if (auto r = pick(lambda, mu)) return r;
        if (auto r = pick(mu, lambda)) return r;
    }
    if (lambda.size() <= 2 && mu.size() <= 2)
        if (auto r = bad_pair_condition(lambda, mu)) return r;
    return std::nullopt;
}

namespace detail {

inline void require_pairing_shape(const PartitionMultiset& a, const char* what) {
    Partition f = phi(a);
    if (f.size() % 2 != 0) throw Error(std::string(what) + ": phi(A) must have an even number of parts");
    for (const auto& e : a.entries())
        if (e.size() != 2) throw Error(std::string(what) + ": every entry must have exactly 2 parts");
}

}  // namespace detail

/// A equals the pairing {(l1,l2),(l3,l4),...} of the sorted parts of phi(A).
inline bool completely_separated(const PartitionMultiset& a) {
    detail::require_pairing_shape(a, "completely_separated");
    Partition f = phi(a);
    std::vector<Partition> pairing;
    for (int i = 1; i <= f.size(); i += 2) pairing.push_back(Partition({f.part(i), f.part(i + 1)}));
    return a == PartitionMultiset(std::move(pairing));
}

/// A equals the pairing {(l1,l_{2m}),(l2,l_{2m-1}),...} of the sorted parts
/// of phi(A).
inline bool completely_nested(const PartitionMultiset& a) {
    detail::require_pairing_shape(a, "completely_nested");
    Partition f = phi(a);
    std::vector<Partition> pairing;
    int m = f.size();
    for (int i = 1; i <= m / 2; ++i) pairing.push_back(Partition({f.part(i), f.part(m + 1 - i)}));
    return a == PartitionMultiset(std::move(pairing));
}

}  // namespace schurcone

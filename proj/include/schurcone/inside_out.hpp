#pragma once

#include <vector>

#include "schurcone/nested.hpp"

namespace schurcone {

/// A permutation of the entries of a nested multiset such that each next
/// pair consists of adjacent parts of phi of what remains.
struct InsideOutOrder {
    std::vector<Partition> pairs;
};

/// Deterministic inside-out order: at each step the admissible pair with the
/// smallest adjacency index is removed. Requires A nested with every entry
/// two-part.
inline InsideOutOrder inside_out_order(const PartitionMultiset& a) {
    for (const auto& e : a.entries())
        if (e.size() != 2) throw Error("inside_out_order: every entry must have two parts");
    if (!is_nested(a)) throw Error("inside_out_order: A is not nested");
    InsideOutOrder order;
    PartitionMultiset rest = a;
    while (!rest.empty()) {
        Partition f = phi(rest);
        bool found = false;
        for (int i = 1; i + 1 <= f.size(); ++i) {
            Partition candidate({f.part(i), f.part(i + 1)});
            if (rest.contains(candidate)) {
                order.pairs.push_back(candidate);
                rest = rest.without(candidate);
                found = true;
                break;
            }
        }
        if (!found) throw Error("inside_out_order: no adjacent pair available (unexpected for nested A)");
    }
    return order;
}

/// A and B agree within rho: every two-part mu with rho1 > mu1 > mu2 > rho2
/// occurs in A and B with equal multiplicity.
inline bool agree_within(const PartitionMultiset& a, const PartitionMultiset& b, const Partition& rho) {
    if (rho.size() != 2) throw Error("agree_within: rho must have two parts");
    auto inside = [&](const PartitionMultiset& m) {
        std::vector<Partition> sel;
        for (const auto& e : m.entries())
            if (e.size() == 2 && rho.part(1) > e.part(1) && e.part(1) > e.part(2) &&
                e.part(2) > rho.part(2))
                sel.push_back(e);
        return sel;  // canonical entry order is already sorted
    };
    return inside(a) == inside(b);
}

}  // namespace schurcone

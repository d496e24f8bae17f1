#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "schurcone/errors.hpp"
#include "schurcone/numbers.hpp"

namespace schurcone {

/// An integer partition: weakly decreasing positive parts. Trailing (and
/// interior) zeros in constructor input are stripped; the empty sequence is
/// the unique partition of 0. Immutable after construction.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) {
        parts_ = std::move(parts);
        std::erase(parts_, 0);
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw Error("partition part must be nonnegative");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw Error("partition parts must be weakly decreasing");
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part at 1-based index i; 0 beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
    }

    /// Conjugate partition (column lengths).
    Partition conjugate() const {
        if (empty()) return {};
        std::vector<int> c(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j)
            c[j - 1] = static_cast<int>(std::count_if(
                parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    /// Lexicographic on the part sequences; a proper prefix sorts first.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Text format: comma-separated decreasing positive integers ("4,3,3,2,1");
/// the empty string is the empty partition.
inline std::string to_string(const Partition& p) {
    std::string s;
    for (int x : p.parts()) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

inline Partition parse_partition(const std::string& text) {
    if (text.empty()) return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition component '" + item + "'");
        }
        if (pos != item.size() || v <= 0)
            throw ParseError("bad partition component '" + item + "'");
        parts.push_back(v);
    }
    if (text.back() == ',') throw ParseError("trailing comma in partition '" + text + "'");
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError("'" + text + "': " + e.what());
    }
}

/// Dominance order on partitions of equal weight: every prefix sum of lhs is
/// >= the matching prefix sum of rhs. Unequal weights are a contract
/// violation, not false.
inline bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw WeightMismatchError("dominance compares partitions of equal weight: |" +
                                  to_string(lhs) + "| != |" + to_string(rhs) + "|");
    long sl = 0, sr = 0;
    int n = std::max(lhs.size(), rhs.size());
    for (int i = 1; i <= n; ++i) {
        sl += lhs.part(i);
        sr += rhs.part(i);
        if (sl < sr) return false;
    }
    return true;
}

inline bool strictly_dominates(const Partition& lhs, const Partition& rhs) {
    return lhs != rhs && dominates(lhs, rhs);
}

/// Number of standard Young tableaux of the shape, by the hook-length
/// formula, computed exactly (n! divided by the hook product).
inline Int syt_count(const Partition& shape) {
    if (shape.empty()) throw Error("syt_count: empty shape");
    Partition conj = shape.conjugate();
    Int hooks = 1;
    for (int i = 1; i <= shape.size(); ++i)
        for (int j = 1; j <= shape.part(i); ++j)
            hooks *= shape.part(i) + conj.part(j) - i - j + 1;
    Int num = factorial(shape.weight());
    return num / hooks;  // exact by the formula
}

/// All partitions of n with at most max_parts parts, in descending
/// lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part, int slots) -> void {
        if (remaining == 0) {
            out.push_back(Partition(acc));
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            acc.push_back(p);
            self(self, remaining - p, p, slots - 1);
            acc.pop_back();
        }
    };
    rec(rec, n, n, max_parts);
    return out;
}

inline std::vector<Partition> enumerate_partitions(int n) {
    return enumerate_partitions(n, n == 0 ? 1 : n);
}

}  // namespace schurcone

template <>
struct std::hash<schurcone::Partition> {
    std::size_t operator()(const schurcone::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "schurcone/partition.hpp"

namespace schurcone {

/// A word over positive integers (reading words and their restrictions).
struct Word {
    std::vector<int> letters;
    friend bool operator==(const Word&, const Word&) = default;
};

/// A semistandard filling of a Young diagram: rows weakly increase, columns
/// strictly increase. Enforced at construction.
class Tableau {
  public:
    Tableau() = default;

    Tableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.size())
            throw Error("tableau: row count does not match shape");
        for (int r = 0; r < shape_.size(); ++r) {
            if (static_cast<int>(rows_[r].size()) != shape_.part(r + 1))
                throw Error("tableau: row length does not match shape");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] < 1) throw Error("tableau: entries must be positive");
                if (c > 0 && rows_[r][c - 1] > rows_[r][c])
                    throw Error("tableau: rows must weakly increase");
                if (r > 0 && c < rows_[r - 1].size() && rows_[r - 1][c] >= rows_[r][c])
                    throw Error("tableau: columns must strictly increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// content()[v-1] = number of occurrences of v, up to the largest entry.
    std::vector<int> content() const {
        int maxv = 0;
        for (const auto& row : rows_)
            for (int v : row) maxv = std::max(maxv, v);
        std::vector<int> c(static_cast<std::size_t>(maxv), 0);
        for (const auto& row : rows_)
            for (int v : row) ++c[v - 1];
        return c;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Right to left across the first row, then the second row, and so on.
inline Word reading_word(const Tableau& t) {
    Word w;
    for (const auto& row : t.rows()) w.letters.insert(w.letters.end(), row.rbegin(), row.rend());
    return w;
}

/// Deletes letters outside the alphabet, relabels the alphabet 1..m by
/// increasing value, and checks that every prefix has count(r) >= count(r+1).
inline bool is_yamanouchi(const Word& w, const std::set<int>& alphabet) {
    std::map<int, int> rank;
    int m = 0;
    for (int v : alphabet) rank[v] = ++m;
    std::vector<int> cnt(static_cast<std::size_t>(m) + 1, 0);
    for (int v : w.letters) {
        auto it = rank.find(v);
        if (it == rank.end()) continue;
        int r = it->second;
        if (r > 1 && cnt[r - 1] <= cnt[r]) return false;
        ++cnt[r];
    }
    return true;
}

/// Yamanouchi over the word's full alphabet.
inline bool is_yamanouchi(const Word& w) {
    return is_yamanouchi(w, std::set<int>(w.letters.begin(), w.letters.end()));
}

/// Enumerates SSYT of the given shape and exact content (letter v appears
/// content[v-1] times; the content may be any nonnegative composition).
/// Cells are filled in row-major order, smallest feasible letter first; the
/// visitor may return false to stop early.
inline void enumerate_ssyt(const Partition& shape, const std::vector<int>& content,
                           const std::function<bool(const Tableau&)>& visit) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw Error("enumerate_ssyt: negative content");
        total += c;
    }
    if (total != shape.weight()) throw WeightMismatchError("enumerate_ssyt: content weight != shape weight");
    if (shape.weight() == 0) {
        visit(Tableau(shape, {}));
        return;
    }
    const int n = static_cast<int>(content.size());
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.size()));
    for (int r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);

    bool stop = false;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (stop) return;
        if (r == shape.size()) {
            stop = !visit(Tableau(shape, rows));
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = r + 1;  // column strictness forces entries >= row index + 1
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0 && c < shape.part(r)) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= n && !stop; ++v) {
            if (remaining[v - 1] == 0) continue;
            rows[r][c] = v;
            --remaining[v - 1];
            self(self, nr, nc);
            ++remaining[v - 1];
        }
        rows[r][c] = 0;
    };
    rec(rec, 0, 0);
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
    std::vector<Tableau> out;
    enumerate_ssyt(shape, content, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

/// All standard fillings of the shape (content 1,1,...,1).
inline std::vector<Tableau> enumerate_syt(const Partition& shape) {
    if (shape.weight() == 0) throw Error("enumerate_syt: empty shape");
    return enumerate_ssyt(shape, std::vector<int>(static_cast<std::size_t>(shape.weight()), 1));
}

/// Kostka number: SSYT of the shape with the given (partition) content.
inline Int kostka(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight())
        throw WeightMismatchError("kostka: |shape| != |content|");
    Int count = 0;
    enumerate_ssyt(shape, content.parts(), [&](const Tableau&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace schurcone

#pragma once

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurcone/exec.hpp"
#include "schurcone/lr.hpp"
#include "schurcone/nested.hpp"
#include "schurcone/simplex.hpp"

namespace schurcone {

/// Size caps for the exact solver. Extremality is decided by LP over exact
/// rationals only; there is no floating-point path.
struct SolverConfig {
    int max_degree = 12;        // cap for a single is_extreme call
    int count_bound_k2 = 10;    // count_extreme caps, per k (overridable)
    int count_bound_k3 = 9;
    int count_bound_other = 8;

    int count_bound(int k) const {
        if (k <= 2) return count_bound_k2;
        if (k == 3) return count_bound_k3;
        return count_bound_other;
    }
};

/// Exactly verifiable outcome of an extremality query: either a nonnegative
/// witness combination reproducing the target, or a Farkas functional
/// separating it from the cone of the other generators.
struct ExtremalityCertificate {
    enum class Kind { Witness, Farkas };
    Kind kind = Kind::Witness;
    std::map<PartitionMultiset, Rational> witness;
    std::map<Partition, Rational> farkas;
};

/// The feasibility system for one generator: target = s_A, columns = s_B for
/// every B in SP_N^k with B != A (multiset inequality, not vector).
struct ConeInstance {
    int degree = 0;
    int k = 0;
    PartitionMultiset generator;
    SchurVector target;
    std::vector<std::pair<PartitionMultiset, std::shared_ptr<const SchurVector>>> columns;
};

struct ExtremalityResult {
    bool extreme = false;
    ExtremalityCertificate certificate;
    bool collision = false;  // some column vector coincided with the target
};

inline ConeInstance build_cone_instance(const PartitionMultiset& a, int k, ProductCache& cache) {
    ConeInstance inst;
    inst.degree = a.total_weight();
    inst.k = k;
    inst.generator = a;
    inst.target = *cache.get(a);
    for (auto& b : enumerate_generators(inst.degree, k)) {
        if (b == a) continue;
        auto vec = cache.get(b);
        inst.columns.emplace_back(std::move(b), std::move(vec));
    }
    return inst;
}

/// Exact re-verification of a certificate against the full instance. Plain
/// dot-product arithmetic; shares no code with the simplex.
inline bool verify_certificate(const ConeInstance& inst, const ExtremalityCertificate& cert) {
    if (cert.kind == ExtremalityCertificate::Kind::Witness) {
        bool any_positive = false;
        SchurVectorQ sum(inst.degree);
        for (const auto& [b, w] : cert.witness) {
            if (w < 0) return false;
            if (w > 0) any_positive = true;
            const SchurVector* col = nullptr;
            for (const auto& [cb, cv] : inst.columns)
                if (cb == b) {
                    col = cv.get();
                    break;
                }
            if (col == nullptr) return false;  // not a column of the instance
            for (const auto& [key, c] : col->coeffs()) sum.add(key, w * Rational(c));
        }
        return any_positive && sum == to_rational(inst.target);
    }
    // Farkas: strictly positive on the target, nonpositive on every column
    auto dot = [&](const SchurVector& v) {
        Rational s = 0;
        for (const auto& [key, c] : v.coeffs()) {
            auto it = cert.farkas.find(key);
            if (it != cert.farkas.end()) s += it->second * Rational(c);
        }
        return s;
    };
    if (dot(inst.target) <= 0) return false;
    for (const auto& [b, col] : inst.columns)
        if (dot(*col) > 0) return false;
    return true;
}

namespace cone_detail {

/// Nonnegativity pruning: a column whose support leaves the target support
/// is forced to zero (all entries are nonnegative), so only columns
/// supported inside the target enter the LP.
inline ExtremalityResult solve_pruned(const ConeInstance& inst, bool prune = true) {
    ExtremalityResult res;

    for (const auto& [b, col] : inst.columns) {
        if (*col == inst.target) {
            res.extreme = false;
            res.collision = true;
            res.certificate.kind = ExtremalityCertificate::Kind::Witness;
            res.certificate.witness[b] = 1;
            return res;
        }
    }

    std::vector<Partition> rows;
    for (const auto& [key, c] : inst.target.coeffs()) rows.push_back(key);
    std::map<Partition, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    std::vector<std::size_t> kept;
    std::vector<std::size_t> pruned;
    for (std::size_t j = 0; j < inst.columns.size(); ++j) {
        bool inside = true;
        for (const auto& [key, c] : inst.columns[j].second->coeffs())
            if (!row_index.count(key)) {
                inside = false;
                break;
            }
        (inside || !prune ? kept : pruned).push_back(j);
    }
    if (!prune) {
        // unpruned solve keeps every column and every row that appears anywhere
        std::map<Partition, std::size_t> all_rows = row_index;
        for (const auto& [b, col] : inst.columns)
            for (const auto& [key, c] : col->coeffs()) all_rows.try_emplace(key, 0);
        rows.clear();
        for (auto& [key, idx] : all_rows) {
            idx = rows.size();
            rows.push_back(key);
        }
        row_index = all_rows;
    }

    std::vector<std::vector<Rational>> cols;
    cols.reserve(kept.size());
    for (std::size_t j : kept) {
        std::vector<Rational> c(rows.size(), Rational(0));
        for (const auto& [key, v] : inst.columns[j].second->coeffs()) c[row_index.at(key)] = Rational(v);
        cols.push_back(std::move(c));
    }
    std::vector<Rational> rhs(rows.size(), Rational(0));
    for (const auto& [key, v] : inst.target.coeffs()) rhs[row_index.at(key)] = Rational(v);

    Phase1Result lp = phase1_simplex(cols, rhs);
    if (lp.feasible) {
        res.extreme = false;
        res.certificate.kind = ExtremalityCertificate::Kind::Witness;
        for (std::size_t jj = 0; jj < kept.size(); ++jj)
            if (lp.primal[jj] > 0) res.certificate.witness[inst.columns[kept[jj]].first] = lp.primal[jj];
        return res;
    }

    res.extreme = true;
    res.certificate.kind = ExtremalityCertificate::Kind::Farkas;
    auto& farkas = res.certificate.farkas;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (lp.dual[i] != 0) farkas[rows[i]] = lp.dual[i];

    if (!pruned.empty()) {
        // extend over the rows outside the target support so pruned columns
        // (each carrying at least one unit there) go nonpositive
        Rational max_inside = 0;
        for (std::size_t j : pruned) {
            Rational v = 0;
            for (const auto& [key, c] : inst.columns[j].second->coeffs()) {
                auto it = farkas.find(key);
                if (it != farkas.end()) v += it->second * Rational(c);
            }
            if (v > max_inside) max_inside = v;
        }
        Rational penalty = max_inside + 1;
        for (std::size_t j : pruned)
            for (const auto& [key, c] : inst.columns[j].second->coeffs())
                if (!row_index.count(key)) farkas[key] = -penalty;
    }
    return res;
}

}  // namespace cone_detail

/// Decides feasibility of {sum_B c_B s_B = s_A, c >= 0} over the instance's
/// columns and returns a certificate that has passed exact re-verification.
inline ExtremalityResult solve_feasibility(const ConeInstance& inst, bool prune = true) {
    ExtremalityResult res = cone_detail::solve_pruned(inst, prune);
    if (!verify_certificate(inst, res.certificate))
        throw Error("solve_feasibility: certificate failed exact re-verification (internal bug)");
    if (res.collision)
        std::cerr << "schurcone: collision diagnostic: s_{" << to_string(res.certificate.witness.begin()->first)
                  << "} equals s_{" << to_string(inst.generator) << "} as a vector\n";
    return res;
}

/// Is s_A extreme in the (N,k)-Schur cone? Returns the verified certificate
/// either way.
inline ExtremalityResult is_extreme(const PartitionMultiset& a, int k, const SolverConfig& config,
                                    ProductCache& cache) {
    if (a.max_parts() > k)
        throw Error("is_extreme: entry with more than k parts");
    if (a.total_weight() > config.max_degree)
        throw BoundExceededError("is_extreme: degree " + std::to_string(a.total_weight()) +
                                 " exceeds configured bound " + std::to_string(config.max_degree));
    ConeInstance inst = build_cone_instance(a, k, cache);
    return solve_feasibility(inst);
}

inline ExtremalityResult is_extreme(const PartitionMultiset& a, int k) {
    SolverConfig config;
    ProductCache cache;
    return is_extreme(a, k, config, cache);
}

namespace cone_detail {

struct GeneratorTable {
    std::vector<PartitionMultiset> gens;
    std::vector<std::shared_ptr<const SchurVector>> vecs;
};

inline GeneratorTable generator_table(int n, int k, ProductCache& cache, int jobs) {
    GeneratorTable t;
    t.gens = enumerate_generators(n, k);
    t.vecs.resize(t.gens.size());
    parallel_for(t.gens.size(), jobs, [&](std::size_t i) { t.vecs[i] = cache.get(t.gens[i]); });
    return t;
}

inline ConeInstance instance_from_table(const GeneratorTable& t, std::size_t target, int k,
                                        const std::vector<std::size_t>& column_idx) {
    ConeInstance inst;
    inst.degree = t.gens[target].total_weight();
    inst.k = k;
    inst.generator = t.gens[target];
    inst.target = *t.vecs[target];
    for (std::size_t j : column_idx)
        if (j != target) inst.columns.emplace_back(t.gens[j], t.vecs[j]);
    return inst;
}

}  // namespace cone_detail

/// Number of extreme generators of the (N,k)-Schur cone, one LP per
/// generator, fanned out over `jobs` workers.
inline long count_extreme(int n, int k, const SolverConfig& config, ProductCache& cache, int jobs = 1) {
    if (n > config.count_bound(k))
        throw BoundExceededError("count_extreme: N " + std::to_string(n) + " exceeds bound " +
                                 std::to_string(config.count_bound(k)) + " for k=" + std::to_string(k));
    auto table = cone_detail::generator_table(n, k, cache, jobs);
    std::vector<std::size_t> all(table.gens.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<char> extreme(table.gens.size(), 0);
    parallel_for(table.gens.size(), jobs, [&](std::size_t i) {
        auto inst = cone_detail::instance_from_table(table, i, k, all);
        extreme[i] = solve_feasibility(inst).extreme ? 1 : 0;
    });
    long count = 0;
    for (char e : extreme) count += e;
    return count;
}

inline long count_extreme(int n, int k) {
    SolverConfig config;
    ProductCache cache;
    return count_extreme(n, k, config, cache);
}

/// |{A in SP_N^2 : A is nested}|.
inline long count_nested(int n) {
    long count = 0;
    for (const auto& a : enumerate_generators(n, 2))
        if (is_nested(a)) ++count;
    return count;
}

/// The full extreme-ray count matrix xi[N-1][k-1] for N = 1..max_n,
/// k = 1..N. At fixed N the non-extremality witnesses found at smaller k
/// are reused for larger k (the column set only grows, so a verified
/// witness stays valid); every fresh classification is LP-certified.
inline std::vector<std::vector<long>> extreme_table(int max_n, ProductCache& cache, int jobs = 1,
                                                    bool long_mode = false) {
    if (max_n > 8 && !long_mode)
        throw BoundExceededError("extreme_table: N > 8 requires the long-run flag");
    if (max_n > 10) throw BoundExceededError("extreme_table: N > 10 not supported");
    std::vector<std::vector<long>> xi(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        Deadline::check();
        auto table = cone_detail::generator_table(n, n, cache, jobs);
        std::vector<std::optional<ExtremalityCertificate>> witness(table.gens.size());
        for (int k = 1; k <= n; ++k) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < table.gens.size(); ++i)
                if (table.gens[i].max_parts() <= k) members.push_back(i);
            std::vector<std::size_t> pending;
            for (std::size_t i : members)
                if (!witness[i]) pending.push_back(i);
            std::vector<char> extreme(table.gens.size(), 0);
            parallel_for(pending.size(), jobs, [&](std::size_t pi) {
                std::size_t i = pending[pi];
                auto inst = cone_detail::instance_from_table(table, i, k, members);
                auto res = solve_feasibility(inst);
                if (res.extreme)
                    extreme[i] = 1;
                else
                    witness[i] = res.certificate;
            });
            long count = 0;
            for (std::size_t i : members) {
                if (witness[i]) {
                    // reused witness: every entry was a column at a smaller k,
                    // hence still a column now
                    for (const auto& [b, w] : witness[i]->witness)
                        if (b.max_parts() > k) throw Error("extreme_table: stale witness");
                } else if (extreme[i]) {
                    ++count;
                }
            }
            xi[static_cast<std::size_t>(n - 1)].push_back(count);
        }
    }
    return xi;
}

/// Certificate serialization: values are exact fraction strings.
inline nlohmann::json to_json(const ExtremalityCertificate& cert) {
    nlohmann::json entries = nlohmann::json::object();
    if (cert.kind == ExtremalityCertificate::Kind::Witness) {
        for (const auto& [b, w] : cert.witness) entries[to_string(b)] = rational_to_string(w);
        return {{"kind", "witness"}, {"entries", entries}};
    }
    for (const auto& [p, v] : cert.farkas) entries[to_string(p)] = rational_to_string(v);
    return {{"kind", "farkas"}, {"entries", entries}};
}

inline nlohmann::json to_json(const ExtremalityResult& res) {
    return {{"extreme", res.extreme}, {"certificate", to_json(res.certificate)}};
}

}  // namespace schurcone

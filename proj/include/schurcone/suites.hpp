#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurcone/bump.hpp"
#include "schurcone/cone.hpp"
#include "schurcone/inside_out.hpp"
#include "schurcone/jacobi_trudi.hpp"
#include "schurcone/paper_table.hpp"

namespace schurcone {

struct SuiteConfig {
    int bound = 0;        // 0 = per-suite default
    int jobs = 1;
    std::uint64_t seed = 0;  // only affects randomized property checks; the
                             // shipped suites are exhaustive and ignore it
    SolverConfig solver;
};

struct SuiteViolation {
    std::string case_descriptor;
    std::string expected;
    std::string actual;
    bool finding = false;  // conjecture violation (reportable), not a bug
};

struct SuiteReport {
    std::string suite;
    long cases_run = 0;
    std::vector<SuiteViolation> violations;
    double wall_secs = 0.0;

    bool has_failure() const {
        for (const auto& v : violations)
            if (!v.finding) return true;
        return false;
    }
    bool has_finding() const {
        for (const auto& v : violations)
            if (v.finding) return true;
        return false;
    }
    std::string status() const {
        if (has_failure()) return "failure";
        if (has_finding()) return "finding";
        return "pass";
    }
};

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"case", v.case_descriptor},
                      {"expected", v.expected},
                      {"actual", v.actual},
                      {"kind", v.finding ? "finding" : "failure"}});
    return {{"suite", r.suite},
            {"casesRun", r.cases_run},
            {"violations", vs},
            {"wallTimeSecs", r.wall_secs},
            {"status", r.status()}};
}

/// All multisets of one- and two-part partitions whose parts concatenate to
/// lambda (the SP^2 fiber over lambda).
inline std::vector<PartitionMultiset> enumerate_pairings(const Partition& lambda) {
    std::set<PartitionMultiset> seen;
    std::vector<Partition> acc;
    auto rec = [&](auto&& self, std::vector<int> parts) -> void {
        if (parts.empty()) {
            seen.insert(PartitionMultiset(acc));
            return;
        }
        int head = parts[0];
        std::vector<int> rest(parts.begin() + 1, parts.end());
        acc.push_back(Partition({head}));
        self(self, rest);
        acc.pop_back();
        std::set<int> tried;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (!tried.insert(rest[t]).second) continue;
            std::vector<int> rest2 = rest;
            rest2.erase(rest2.begin() + static_cast<long>(t));
            acc.push_back(Partition({head, rest[t]}));
            self(self, rest2);
            acc.pop_back();
        }
    };
    rec(rec, lambda.parts());
    return {seen.begin(), seen.end()};
}

namespace suite_detail {

struct Context {
    SuiteConfig cfg;
    ProductCache cache;
    SuiteReport report;
    std::map<std::pair<int, int>, std::vector<std::size_t>> extreme_sets;  // (N,k) -> extreme gen indices
    std::map<std::pair<int, int>, std::vector<PartitionMultiset>> gens;

    void fail(std::string what, std::string expected, std::string actual, bool finding = false) {
        report.violations.push_back({std::move(what), std::move(expected), std::move(actual), finding});
    }

    /// LP classification of SP_N^k, memoized per (N, k).
    const std::vector<std::size_t>& extreme_indices(int n, int k) {
        auto key = std::make_pair(n, k);
        auto it = extreme_sets.find(key);
        if (it != extreme_sets.end()) return it->second;
        auto table = cone_detail::generator_table(n, k, cache, cfg.jobs);
        std::vector<std::size_t> all(table.gens.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::vector<char> extreme(table.gens.size(), 0);
        parallel_for(table.gens.size(), cfg.jobs, [&](std::size_t i) {
            auto inst = cone_detail::instance_from_table(table, i, k, all);
            extreme[i] = solve_feasibility(inst).extreme ? 1 : 0;
        });
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < extreme.size(); ++i)
            if (extreme[i]) idx.push_back(i);
        gens[key] = std::move(table.gens);
        return extreme_sets.emplace(key, std::move(idx)).first->second;
    }

    const std::vector<PartitionMultiset>& generators(int n, int k) {
        extreme_indices(n, k);
        return gens.at({n, k});
    }

    bool extreme(const PartitionMultiset& a, int k) {
        return is_extreme(a, k, cfg.solver, cache).extreme;
    }

    Int coeff(const PartitionMultiset& a, const Partition& lam) {
        if (a.total_weight() != lam.weight()) return 0;
        return cache.get(a)->coefficient(lam);
    }
};

inline std::string eq_case(const PartitionMultiset& a, const Partition& lam) {
    return "c_{" + to_string(a) + "}^{" + to_string(lam) + "}";
}

// ---- lr-corollary: nonnegativity, dominance support, unit leading term ----
inline void suite_lr_corollary(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 7;
    for (int n = 1; n <= bound; ++n) {
        Deadline::check();
        auto lams = enumerate_partitions(n);
        for (const auto& a : enumerate_generators(n, n)) {
            ++ctx.report.cases_run;
            const Partition f = phi(a);
            auto vec = ctx.cache.get(a);
            for (const auto& lam : lams) {
                Int c = vec->coefficient(lam);
                if (c < 0) ctx.fail(eq_case(a, lam), ">= 0", c.str());
                if (c > 0 && !dominates(lam, f))
                    ctx.fail(eq_case(a, lam) + " support", "lam dominates phi(A)", "violated");
            }
            if (vec->coefficient(f) != 1)
                ctx.fail(eq_case(a, f), "1", vec->coefficient(f).str());
        }
    }
}

// ---- lemma15: the coupled-coefficient identity over distinct-part shapes ----
inline void suite_lemma15(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 9;
    for (int n = 1; n <= bound; ++n) {
        Deadline::check();
        for (const auto& lam : enumerate_partitions(n)) {
            bool distinct = true;
            for (int i = 1; i + 1 <= lam.size(); ++i)
                if (lam.part(i) == lam.part(i + 1)) distinct = false;
            if (!distinct) continue;
            std::vector<PartitionMultiset> nested_fiber;
            for (const auto& a : enumerate_pairings(lam))
                if (is_nested(a)) nested_fiber.push_back(a);
            for (int i = 1; i <= lam.size(); ++i) {
                for (int j = i + 1; j <= lam.size(); ++j) {
                    Partition rho({lam.part(i), lam.part(j)});
                    Partition bumped = bump(lam, rho);
                    for (const auto& a : nested_fiber) {
                        if (!a.contains(rho)) continue;
                        for (const auto& b : nested_fiber) {
                            if (b.contains(rho) || !agree_within(a, b, rho)) continue;
                            ++ctx.report.cases_run;
                            Int ca = ctx.coeff(a, bumped), cb = ctx.coeff(b, bumped);
                            std::string desc = "lemma15 lam=" + to_string(lam) + " rho=" + to_string(rho) +
                                               " A=" + to_string(a) + " B=" + to_string(b);
                            if (ca + 1 != cb)
                                ctx.fail(desc, "c_A + 1 == c_B", ca.str() + " + 1 != " + cb.str());
                            if (j == i + 1 && (ca != 0 || cb != 1))
                                ctx.fail(desc + " (adjacent)", "c_A=0, c_B=1", ca.str() + ", " + cb.str());
                        }
                    }
                }
            }
        }
    }
}

// ---- separated-claims: the projection coefficients and the binomial law ----
inline void suite_separated_claims(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 12;
    for (int p = 1; p * 2 <= bound; ++p) {
        for (int n = 2; p * n <= bound; ++n) {
            int rest = bound - p * n;
            // distinct parts, none equal to p, weight <= rest
            std::vector<std::vector<int>> tails;
            std::vector<int> acc;
            auto rec = [&](auto&& self, int remaining, int max_part) -> void {
                tails.push_back(acc);
                for (int q = std::min(remaining, max_part); q >= 1; --q) {
                    if (q == p) continue;
                    acc.push_back(q);
                    self(self, remaining - q, q - 1);
                    acc.pop_back();
                }
            };
            rec(rec, rest, rest);
            for (const auto& tail : tails) {
                Deadline::check();
                std::vector<int> lam_parts = tail;
                for (int t = 0; t < n; ++t) lam_parts.push_back(p);
                std::sort(lam_parts.begin(), lam_parts.end(), std::greater<>());
                Partition lam(lam_parts);
                std::vector<int> mu_parts = tail;
                for (int t = 0; t + 2 < n; ++t) mu_parts.push_back(p);
                std::sort(mu_parts.begin(), mu_parts.end(), std::greater<>());
                Partition mu(mu_parts);
                const int m = n / 2;
                const Partition rho({p, p});
                std::vector<Partition> lam_chain;  // lam[rho^j], j = 0..m
                for (int j = 0; j <= m; ++j) lam_chain.push_back(*bump_iter(lam, p, j));
                std::string base = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                   " lam=" + to_string(lam);

                // projection of s_rho * s_{mu[rho^i]}
                for (int i = 0; i + 1 <= m; ++i) {
                    auto eta = bump_iter(mu, p, i);
                    if (!eta) break;
                    PartitionMultiset b({rho, *eta});
                    ++ctx.report.cases_run;
                    for (int j = 0; j <= m; ++j) {
                        Int c = ctx.coeff(b, lam_chain[static_cast<std::size_t>(j)]);
                        Int expected;
                        if (i <= m - 2)
                            expected = (j == i || j == i + 1 || j == i + 2) ? 1 : 0;
                        else  // i == m-1
                            expected = (j == m - 1 || (j == m && n % 2 == 1)) ? 1 : 0;
                        if (c != expected)
                            ctx.fail(base + " proj i=" + std::to_string(i) + " j=" + std::to_string(j),
                                     expected.str(), c.str());
                    }
                }

                // binomial law for every B with phi(B) = lam[rho^i], rho not in B
                for (int i = 0; i <= m; ++i) {
                    for (const auto& b : enumerate_pairings(lam_chain[static_cast<std::size_t>(i)])) {
                        if (b.contains(rho)) continue;
                        ++ctx.report.cases_run;
                        for (int j = 0; j <= m; ++j) {
                            Int c = ctx.coeff(b, lam_chain[static_cast<std::size_t>(j)]);
                            Int expected = binomial(n - 2 * i, j - i) - binomial(n - 2 * i, j - i - 1);
                            if (c != expected)
                                ctx.fail(base + " binom i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                             " B=" + to_string(b),
                                         expected.str(), c.str());
                        }
                    }
                }
            }
        }
    }
}

// ---- add-square: closure under adjoining (p,p), and separated implies extreme ----
inline void suite_add_square(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 10;
    for (int n = 1; n <= std::min(6, bound - 2); ++n) {
        const auto& idx = ctx.extreme_indices(n, 2);
        const auto& gens = ctx.generators(n, 2);
        for (std::size_t i : idx) {
            for (int p = 1; p <= 3 && n + 2 * p <= bound; ++p) {
                Deadline::check();
                ++ctx.report.cases_run;
                PartitionMultiset bigger = gens[i].with(Partition({p, p}));
                if (!ctx.extreme(bigger, 2))
                    ctx.fail("add-square A=" + to_string(gens[i]) + " p=" + std::to_string(p),
                             "extreme", "non-extreme");
            }
        }
    }
    for (int n = 2; n <= bound; ++n) {
        Deadline::check();
        for (const auto& lam : enumerate_partitions(n)) {
            if (lam.size() % 2 != 0) continue;
            std::vector<Partition> pairs;
            for (int t = 1; t <= lam.size(); t += 2) pairs.push_back(Partition({lam.part(t), lam.part(t + 1)}));
            PartitionMultiset a(pairs);
            if (!is_nested(a)) continue;
            ++ctx.report.cases_run;
            if (!ctx.extreme(a, 2))
                ctx.fail("separated A=" + to_string(a), "extreme", "non-extreme");
        }
    }
}

// ---- squared: the eight coefficient values and extremality of {(j,i),(j,i)} ----
inline void suite_squared(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 12;
    for (int j = 2; 2 * j + 2 <= bound; ++j) {
        for (int i = 1; i < j && 2 * (i + j) <= bound; ++i) {
            Deadline::check();
            ++ctx.report.cases_run;
            std::string base = "squared j=" + std::to_string(j) + " i=" + std::to_string(i);
            PartitionMultiset a({Partition({j, i}), Partition({j, i})});
            PartitionMultiset b0({Partition({j, j}), Partition({i, i})});
            PartitionMultiset b1({Partition({j + 1, j - 1}), Partition({i, i})});
            PartitionMultiset b2({Partition({j + 1, i}), Partition({j - 1, i})});
            PartitionMultiset b3({Partition({j, j}), Partition({i + 1, i - 1})});
            PartitionMultiset b4({Partition({j, i + 1}), Partition({j, i - 1})});
            Partition lam({j, j, i, i});
            Partition lam_r1 = bump(lam, Partition({j, j}));
            Partition lam_r2 = bump(lam, Partition({i, i}));
            Partition lam_plus({j + 1, j, i, i - 1});

            auto expect = [&](const PartitionMultiset& m, const Partition& at, const Int& want,
                              const std::string& tag) {
                Int got = ctx.coeff(m, at);
                if (got != want) ctx.fail(base + " " + tag, want.str(), got.str());
            };
            expect(a, lam_r1, ctx.coeff(b0, lam_r1) + 1, "c_A[rho1] = c_B0[rho1]+1");
            expect(a, lam_r2, ctx.coeff(b0, lam_r2) + 1, "c_A[rho2] = c_B0[rho2]+1");
            expect(a, lam_plus, 2, "c_A^{lam+}");
            expect(b0, lam_plus, 1, "c_B0^{lam+}");
            expect(b1, lam_plus, 1, "c_B1^{lam+}");
            expect(b2, lam_plus, 1, "c_B2^{lam+}");
            expect(b3, lam_plus, 1, "c_B3^{lam+}");
            expect(b4, lam_plus, 1, "c_B4^{lam+}");
            if (!ctx.extreme(a, 2)) ctx.fail(base + " extremality", "extreme", "non-extreme");
        }
    }
}

// ---- k3-identities: the five displayed decompositions, the support bound,
// ---- and the remark's identity and extremality check ----
inline void suite_k3_identities(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 12;

    auto product = [&](std::initializer_list<Partition> ps) {
        return *ctx.cache.get(PartitionMultiset(std::vector<Partition>(ps)));
    };
    auto check_identity = [&](const std::string& desc, const SchurVector& lhs, const SchurVector& rhs) {
        ++ctx.report.cases_run;
        if (!(lhs == rhs)) ctx.fail(desc, "LHS == RHS", "expansions differ");
    };

    // case 1: two-part times one-part stays within three rows
    for (int l1 = 1; l1 <= bound; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2)
            for (int m1 = 1; l1 + l2 + m1 <= bound; ++m1) {
                Deadline::check();
                ++ctx.report.cases_run;
                auto vec = product({Partition({l1, l2}), Partition({m1})});
                for (const auto& [key, c] : vec.coeffs())
                    if (key.size() > 3)
                        ctx.fail("k3 case1 support l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                                     ") m=(" + std::to_string(m1) + ")",
                                 "<= 3 parts", to_string(key));
            }

    // case 2
    for (int l1 = 2; l1 <= bound; ++l1)
        for (int l2 = 1; l2 < l1; ++l2)
            for (int m1 = l2; m1 < l1; ++m1) {
                int total = l1 + l2 + 1 + m1;
                if (total > bound) continue;
                Deadline::check();
                check_identity(
                    "k3 case2 l=(" + std::to_string(l1) + "," + std::to_string(l2) + ",1) m=(" +
                        std::to_string(m1) + ")",
                    product({Partition({l1, l2, 1}), Partition({m1})}),
                    product({Partition({l1}), Partition({m1, l2, 1})}) +
                        product({Partition({l2 - 1}), Partition({l1, m1 + 1, 1})}));
            }

    // case 3
    for (int l1 = 1; l1 <= bound; ++l1)
        for (int m1 = 1; m1 < l1; ++m1)
            for (int l2 = 1; l2 <= m1; ++l2)
                for (int m2 = 1; m2 < l2; ++m2)
                    for (int l3 = 1; l3 <= m2; ++l3) {
                        int total = l1 + l2 + l3 + m1 + m2;
                        if (total > bound) continue;
                        Deadline::check();
                        check_identity(
                            "k3 case3 l=(" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                                std::to_string(l3) + ") m=(" + std::to_string(m1) + "," +
                                std::to_string(m2) + ")",
                            product({Partition({l1, l2, l3}), Partition({m1, m2})}),
                            product({Partition({l2 - 1, m2}), Partition({l1, m1 + 1, l3})}) +
                                product({Partition({m1, l2}), Partition({l1, m2, l3})}) +
                                product({Partition({l1, l3 - 1}), Partition({m1, l2, m2 + 1})}));
                    }

    // case 4
    for (int l1 = 1; l1 <= bound; ++l1)
        for (int m1 = 1; m1 < l1; ++m1)
            for (int l2 = 1; l2 <= m1; ++l2)
                for (int m2 = 1; m2 < l2; ++m2)
                    for (int l3 = 1; l3 <= m2; ++l3)
                        for (int m3 = 1; m3 < l3; ++m3) {
                            int total = l1 + l2 + l3 + m1 + m2 + m3;
                            if (total > bound) continue;
                            Deadline::check();
                            check_identity(
                                "k3 case4 l=(" + std::to_string(l1) + "," + std::to_string(l2) + "," +
                                    std::to_string(l3) + ") m=(" + std::to_string(m1) + "," +
                                    std::to_string(m2) + "," + std::to_string(m3) + ")",
                                product({Partition({l1, l2, l3}), Partition({m1, m2, m3})}),
                                product({Partition({l1, m1 + 1, l2 + 1}), Partition({m2 - 1, l3 - 1, m3})}) +
                                    product({Partition({l1, l2, m3}), Partition({m1, m2, l3})}) +
                                    product({Partition({l1, l2, m2 + 1}), Partition({m1, l3 - 1, m3})}));
                        }

    // case 5, branch m1 > l2
    for (int l1 = 1; l1 <= bound; ++l1)
        for (int m1 = 1; m1 <= l1; ++m1)
            for (int m2 = 1; m2 <= m1; ++m2)
                for (int l2 = 1; l2 <= m2 && l2 < m1; ++l2) {
                    int total = l1 + l2 + m1 + m2;
                    if (total > bound) continue;
                    Deadline::check();
                    check_identity(
                        "k3 case5a l=(" + std::to_string(l1) + "," + std::to_string(l2) + ") m=(" +
                            std::to_string(m1) + "," + std::to_string(m2) + ")",
                        product({Partition({l1, l2}), Partition({m1, m2})}),
                        product({Partition({l1, m1, m2}), Partition({l2})}) +
                            product({Partition({l1 + 1, m2}), Partition({m1 - 1, l2})}) +
                            product({Partition({l1 + 1, l2 + 1}), Partition({m1 - 1, m2 - 1})}));
                }

    // case 5, branch m1 = l2 = m2
    for (int l1 = 1; l1 <= bound; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2) {
            int total = l1 + 3 * l2;
            if (total > bound) continue;
            Deadline::check();
            check_identity("k3 case5b l=(" + std::to_string(l1) + "," + std::to_string(l2) + ")",
                           product({Partition({l1, l2}), Partition({l2, l2})}),
                           product({Partition({l1, l2, l2}), Partition({l2})}) +
                               product({Partition({l1 + 1, l2 + 1}), Partition({l2 - 1, l2 - 1})}));
        }

    // remark: the explicit non-listed bad pair, and the extreme (10,3) pair
    check_identity("k3 remark identity",
                   product({Partition({5, 2, 1}), Partition({1, 1})}),
                   product({Partition({1, 1, 1}), Partition({5, 2})}) +
                       product({Partition({5, 2, 2}), Partition({1})}));
    ++ctx.report.cases_run;
    if (!ctx.extreme(PartitionMultiset({Partition({4, 3, 1}), Partition({1, 1})}), 3))
        ctx.fail("k3 remark extremality s_{431}s_{11} in (10,3)", "extreme", "non-extreme");

    // the conclusions behind the displays: every case-constrained pair is
    // LP-certified non-extreme in the k=3 cone (case 4's chain needs weight
    // >= 15, beyond the solver's desk scale, so it is exercised via its
    // display only)
    int lp_bound = std::min(bound, 9);
    auto check_bad = [&](const std::string& desc, const Partition& l, const Partition& m) {
        ++ctx.report.cases_run;
        if (ctx.extreme(PartitionMultiset({l, m}), 3))
            ctx.fail(desc, "non-extreme in the (N,3) cone", "extreme");
    };
    for (int l1 = 1; l1 <= lp_bound; ++l1)
        for (int l2 = 1; l2 <= l1; ++l2)
            for (int m1 = 1; l1 + l2 + m1 <= lp_bound; ++m1)
                check_bad("k3 case1 badness l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                              ") m=(" + std::to_string(m1) + ")",
                          Partition({l1, l2}), Partition({m1}));
    for (int l1 = 2; l1 <= lp_bound; ++l1)
        for (int l2 = 1; l2 < l1; ++l2)
            for (int m1 = l2; m1 < l1 && l1 + l2 + 1 + m1 <= lp_bound; ++m1)
                check_bad("k3 case2 badness l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                              ",1) m=(" + std::to_string(m1) + ")",
                          Partition({l1, l2, 1}), Partition({m1}));
    for (int l1 = 1; l1 <= lp_bound; ++l1)
        for (int m1 = 1; m1 < l1; ++m1)
            for (int l2 = 1; l2 <= m1; ++l2)
                for (int m2 = 1; m2 < l2; ++m2)
                    for (int l3 = 1; l3 <= m2 && l1 + l2 + l3 + m1 + m2 <= lp_bound; ++l3)
                        check_bad("k3 case3 badness l=(" + std::to_string(l1) + "," +
                                      std::to_string(l2) + "," + std::to_string(l3) + ") m=(" +
                                      std::to_string(m1) + "," + std::to_string(m2) + ")",
                                  Partition({l1, l2, l3}), Partition({m1, m2}));
    for (int l1 = 1; l1 <= lp_bound; ++l1)
        for (int m1 = 1; m1 <= l1; ++m1)
            for (int m2 = 1; m2 <= m1; ++m2)
                for (int l2 = 1; l2 <= m2 && l1 + l2 + m1 + m2 <= lp_bound; ++l2)
                    check_bad("k3 case5 badness l=(" + std::to_string(l1) + "," + std::to_string(l2) +
                                  ") m=(" + std::to_string(m1) + "," + std::to_string(m2) + ")",
                              Partition({l1, l2}), Partition({m1, m2}));
}

// ---- jacobi-trudi ----
inline void suite_jacobi_trudi(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 7;
    for (int n = 1; n <= bound; ++n) {
        Deadline::check();
        for (const auto& lam : enumerate_partitions(n)) {
            ++ctx.report.cases_run;
            if (!jacobi_trudi_check(lam, bound))
                ctx.fail("jacobi-trudi lam=" + to_string(lam), "det(h) == s_lam", "mismatch");
        }
    }
}

// ---- conjecture-main: LP-extreme set == nested set for k = 2 ----
inline void suite_conjecture_main(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 8;
    for (int n = 1; n <= bound; ++n) {
        Deadline::check();
        const auto& idx = ctx.extreme_indices(n, 2);
        const auto& gens = ctx.generators(n, 2);
        std::set<std::size_t> ext(idx.begin(), idx.end());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            ++ctx.report.cases_run;
            bool e = ext.count(i) > 0;
            bool nst = is_nested(gens[i]);
            if (e && !nst)
                ctx.fail("N=" + std::to_string(n) + " A=" + to_string(gens[i]),
                         "extreme implies nested", "extreme but not nested");  // proven direction
            if (!e && nst)
                ctx.fail("N=" + std::to_string(n) + " A=" + to_string(gens[i]),
                         "nested implies extreme (conjectured)", "nested but not extreme",
                         /*finding=*/true);
        }
    }
}

// ---- conj-iii: products of separated extreme generators stay extreme.
// The conjecture is about the k=2 pairing structure (the general-k reading
// fails trivially: s_{(2)}s_{(1,1)} = s_{(3,1)} + s_{(2,1,1)} in the (4,3)
// cone, see tests), so the search runs at k = 2. ----
inline void suite_conj_iii(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 8;
    const int k = 2;
    for (int n = 1; n < bound; ++n) {
        for (int m = 1; n + m <= bound; ++m) {
            Deadline::check();
            const auto& idx_a = ctx.extreme_indices(n, k);
            const auto& gens_a = ctx.generators(n, k);
            const auto& idx_b = ctx.extreme_indices(m, k);
            const auto& gens_b = ctx.generators(m, k);
            for (std::size_t ia : idx_a) {
                Partition fa = phi(gens_a[ia]);
                for (std::size_t ib : idx_b) {
                    Partition fb = phi(gens_b[ib]);
                    if (fa.size() % 2 == 1 && fb.size() % 2 == 1) continue;
                    if (!(fa.part(fa.size()) > fb.part(1))) continue;
                    ++ctx.report.cases_run;
                    std::vector<Partition> es = gens_a[ia].entries();
                    for (const auto& e : gens_b[ib].entries()) es.push_back(e);
                    PartitionMultiset joined(es);
                    if (!ctx.extreme(joined, k))
                        ctx.fail("conj-iii A=" + to_string(gens_a[ia]) + " B=" + to_string(gens_b[ib]),
                                 "s_A s_B extreme", "non-extreme", /*finding=*/true);
                }
            }
        }
    }
}

// ---- conj-iv: adjoining an enclosing strict pair stays extreme. Also a
// k=2 pairing statement; A ranges over all-pair generators (adjoining an
// enclosing pair to a one-part entry always creates a bad pair, so the
// odd case is excluded by the pairing structure). ----
inline void suite_conj_iv(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 8;
    const int k = 2;
    for (int n = 1; n < bound; ++n) {
        Deadline::check();
        const auto& idx = ctx.extreme_indices(n, k);
        const auto& gens = ctx.generators(n, k);
        for (std::size_t i : idx) {
            Partition f = phi(gens[i]);
            if (f.size() % 2 != 0) continue;
            for (int r1 = f.part(1); n + r1 + 1 <= bound; ++r1) {
                for (int r2 = 1; r2 < r1 && r2 <= f.part(f.size()) && n + r1 + r2 <= bound; ++r2) {
                    ++ctx.report.cases_run;
                    PartitionMultiset bigger = gens[i].with(Partition({r1, r2}));
                    if (!ctx.extreme(bigger, k))
                        ctx.fail("conj-iv A=" + to_string(gens[i]) + " rho=(" + std::to_string(r1) +
                                     "," + std::to_string(r2) + ")",
                                 "s_A s_rho extreme", "non-extreme", /*finding=*/true);
                }
            }
        }
    }
}

// ---- table: recompute the xi matrix and diff against the reference ----
inline void suite_table(Context& ctx) {
    int bound = ctx.cfg.bound > 0 ? ctx.cfg.bound : 8;
    auto reference = reference_xi_table();
    auto computed = extreme_table(bound, ctx.cache, ctx.cfg.jobs, /*long_mode=*/bound > 8);
    for (int n = 1; n <= bound; ++n) {
        for (int kk = 1; kk <= n; ++kk) {
            ++ctx.report.cases_run;
            long want = reference[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(kk - 1)];
            long got = computed[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(kk - 1)];
            if (want != got)
                ctx.fail("xi N=" + std::to_string(n) + " k=" + std::to_string(kk),
                         std::to_string(want), std::to_string(got));
        }
    }
}

}  // namespace suite_detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lr-corollary",  "lemma15",   "separated-claims", "add-square",
        "squared",       "k3-identities", "jacobi-trudi", "conjecture-main",
        "conj-iii",      "conj-iv",   "table"};
    return names;
}

/// Runs one verification suite and returns its report. Deterministic given
/// the bounds and the fixed enumeration orders.
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
    suite_detail::Context ctx;
    ctx.cfg = cfg;
    ctx.report.suite = name;
    auto t0 = std::chrono::steady_clock::now();
    if (name == "lr-corollary")
        suite_detail::suite_lr_corollary(ctx);
    else if (name == "lemma15")
        suite_detail::suite_lemma15(ctx);
    else if (name == "separated-claims")
        suite_detail::suite_separated_claims(ctx);
    else if (name == "add-square")
        suite_detail::suite_add_square(ctx);
    else if (name == "squared")
        suite_detail::suite_squared(ctx);
    else if (name == "k3-identities")
        suite_detail::suite_k3_identities(ctx);
    else if (name == "jacobi-trudi")
        suite_detail::suite_jacobi_trudi(ctx);
    else if (name == "conjecture-main")
        suite_detail::suite_conjecture_main(ctx);
    else if (name == "conj-iii")
        suite_detail::suite_conj_iii(ctx);
    else if (name == "conj-iv")
        suite_detail::suite_conj_iv(ctx);
    else if (name == "table")
        suite_detail::suite_table(ctx);
    else
        throw Error("unknown suite '" + name + "'");
    ctx.report.wall_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ctx.report;
}

}  // namespace schurcone

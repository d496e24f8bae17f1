// Acceptance suite: one pass/fail line per criterion, equality checks are
// exact (no tolerances anywhere). Run with --criterion N for a single
// criterion, --cli PATH to locate the command-line binary (criterion 1
// drives the real CLI surface). Exit code = number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "schurcone/bump.hpp"
#include "schurcone/cone.hpp"
#include "schurcone/jacobi_trudi.hpp"
#include "schurcone/monomial_oracle.hpp"
#include "schurcone/paper_table.hpp"
#include "schurcone/suites.hpp"

using namespace schurcone;

namespace {

int g_jobs = 4;
std::string g_cli;

struct Criterion {
    int id;
    std::string description;
    bool (*run)(std::string& detail);
};

bool run_cli_ok(const std::string& args) {
    std::string cmd = g_cli + " " + args + " > /dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

// 1. table reproduction through the CLI, exact
bool c1_table(std::string& detail) {
    if (g_cli.empty()) {
        detail = "no --cli path given";
        return false;
    }
    bool ok = run_cli_ok("table --max-N 8 --diff-paper --jobs " + std::to_string(g_jobs));
    detail = ok ? "xi_N^k matches for every N <= 8, k <= N (e.g. xi_6^2=13, xi_7^3=18, xi_8^4=27, xi_8^2=28)"
                : "table differs from the reference (see CLI stderr)";
    return ok;
}

// 2. k=1 sanity: enumeration path for N <= 10, LP path for N <= 6
bool c2_k1(std::string& detail) {
    const long pn[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) {
        long got = static_cast<long>(enumerate_generators(n, 1).size());
        if (got != pn[n - 1]) {
            detail = "|SP_" + std::to_string(n) + "^1| = " + std::to_string(got);
            return false;
        }
    }
    SolverConfig config;
    ProductCache cache;
    for (int n = 1; n <= 6; ++n) {
        long got = count_extreme(n, 1, config, cache, g_jobs);
        if (got != pn[n - 1]) {
            detail = "LP count_extreme(" + std::to_string(n) + ",1) = " + std::to_string(got);
            return false;
        }
    }
    detail = "1,2,3,5,7,11,15,22,30,42 via enumeration (N<=10) and via LP (N<=6)";
    return true;
}

// 3. nested counts equal the xi_N^2 column, N <= 10
bool c3_nested(std::string& detail) {
    const long expected[] = {1, 2, 3, 5, 7, 13, 17, 28, 40, 61};
    for (int n = 1; n <= 10; ++n) {
        long got = count_nested(n);
        if (got != expected[n - 1]) {
            detail = "count_nested(" + std::to_string(n) + ") = " + std::to_string(got) +
                     ", expected " + std::to_string(expected[n - 1]);
            return false;
        }
    }
    detail = "count_nested(N) = 1,2,3,5,7,13,17,28,40,61 for N = 1..10";
    return true;
}

// 4. oracle equivalence, N <= 6, k <= 3
bool c4_oracle(std::string& detail) {
    long cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : enumerate_generators(n, 3)) {
            ++cases;
            if (!(expand_product(a) == expand_product_oracle(a))) {
                detail = "A = " + to_string(a);
                return false;
            }
        }
    }
    detail = "expand_product == monomial oracle on " + std::to_string(cases) + " generators";
    return true;
}

// 5. lemma15 suite, |lambda| <= 9, zero violations
bool c5_lemma15(std::string& detail) {
    SuiteConfig cfg;
    cfg.bound = 9;
    cfg.jobs = g_jobs;
    auto r = run_suite("lemma15", cfg);
    detail = std::to_string(r.cases_run) + " instances, " + std::to_string(r.violations.size()) +
             " violations";
    return r.status() == "pass";
}

// 6. the squared-pair coefficient values and extremality on the pinned grid
bool c6_squared(std::string& detail) {
    SolverConfig config;
    ProductCache cache;
    const std::pair<int, int> grid[] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}};
    for (auto [j, i] : grid) {
        PartitionMultiset a({Partition({j, i}), Partition({j, i})});
        Partition lam_plus({j + 1, j, i, i - 1});
        if (lr_multi(a, lam_plus) != 2) {
            detail = "c_A^{lam+} != 2 at j=" + std::to_string(j) + ", i=" + std::to_string(i);
            return false;
        }
        const PartitionMultiset bs[] = {
            PartitionMultiset({Partition({j, j}), Partition({i, i})}),
            PartitionMultiset({Partition({j + 1, j - 1}), Partition({i, i})}),
            PartitionMultiset({Partition({j + 1, i}), Partition({j - 1, i})}),
            PartitionMultiset({Partition({j, j}), Partition({i + 1, i - 1})}),
            PartitionMultiset({Partition({j, i + 1}), Partition({j, i - 1})})};
        for (const auto& b : bs)
            if (lr_multi(b, lam_plus) != 1) {
                detail = "c_B^{lam+} != 1 for B = " + to_string(b);
                return false;
            }
        if (!is_extreme(a, 2, config, cache).extreme) {
            detail = "s_{(j,i)}^2 not extreme at j=" + std::to_string(j) + ", i=" + std::to_string(i);
            return false;
        }
    }
    detail = "c_A^{lam+} = 2, all five c_B^{lam+} = 1, and extremality on the four (j,i) pairs";
    return true;
}

// 7. the k=3 identity suite at weight <= 12, including the remark checks
bool c7_k3(std::string& detail) {
    SuiteConfig cfg;
    cfg.bound = 12;
    cfg.jobs = g_jobs;
    auto r = run_suite("k3-identities", cfg);
    long case5a = 0;
    for (const auto& v : r.violations)
        if (v.case_descriptor.rfind("k3 case5a ", 0) == 0) ++case5a;
    detail = std::to_string(r.cases_run) + " cases, " + std::to_string(r.violations.size()) +
             " violations";
    if (!r.violations.empty() && case5a == static_cast<long>(r.violations.size()))
        detail += "; all violations are the case-5 general-branch display, which is false as "
                  "printed (minimal counterexample ((2,1),(2,1)), refuted on two independent "
                  "engines; the badness conclusions themselves are LP-certified and pass — see "
                  "tests/test_harness.cpp)";
    else if (!r.violations.empty())
        detail += "; first: " + r.violations[0].case_descriptor;
    return r.status() == "pass";
}

// 8. the binomial coefficient law (via the separated-claims suite, which
// also pins the neighboring projection coefficients)
bool c8_binomial(std::string& detail) {
    SuiteConfig cfg;
    cfg.bound = 12;
    cfg.jobs = g_jobs;
    auto r = run_suite("separated-claims", cfg);
    detail = std::to_string(r.cases_run) + " cases, " + std::to_string(r.violations.size()) +
             " violations";
    if (!r.violations.empty()) detail += "; first: " + r.violations[0].case_descriptor;
    return r.status() == "pass";
}

// 9. adjoining (p,p) preserves extremality (and separated nested generators are extreme)
bool c9_add_square(std::string& detail) {
    SuiteConfig cfg;
    cfg.bound = 10;
    cfg.jobs = g_jobs;
    auto r = run_suite("add-square", cfg);
    detail = std::to_string(r.cases_run) + " cases, " + std::to_string(r.violations.size()) +
             " violations";
    if (!r.violations.empty()) detail += "; first: " + r.violations[0].case_descriptor;
    return r.status() == "pass";
}

// 10. the property suites, one sub-line each
bool c10_properties(std::string& detail) {
    int failures = 0;
    auto item = [&](const std::string& name, bool ok, const std::string& note = "") {
        std::printf("  - %s: %s%s\n", name.c_str(), ok ? "pass" : "FAIL",
                    note.empty() ? "" : ("  [" + note + "]").c_str());
        if (!ok) ++failures;
    };

    {  // hook length vs brute force
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n)
            for (const auto& lam : enumerate_partitions(n))
                if (syt_count(lam) != Int(enumerate_syt(lam).size())) ok = false;
        item("hook-length formula vs enumeration, |lambda| <= 8", ok);
    }
    {  // dominance poset axioms
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n) {
            auto ps = enumerate_partitions(n);
            for (const auto& a : ps) {
                if (!dominates(a, a)) ok = false;
                for (const auto& b : ps) {
                    if (dominates(a, b) && dominates(b, a) && !(a == b)) ok = false;
                    for (const auto& c : ps)
                        if (dominates(a, b) && dominates(b, c) && !dominates(a, c)) ok = false;
                }
            }
        }
        item("dominance poset axioms, N <= 8", ok);
    }
    {  // leq_p poset axioms on 100 random antichains
        bool ok = true;
        std::mt19937_64 rng(20140831);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int n = 3 + static_cast<int>(rng() % 8);
            int p = 1 + static_cast<int>(rng() % 4);
            auto all = enumerate_partitions(n);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<Partition> antichain;
            for (const auto& cand : all) {
                bool comparable = false;
                for (const auto& x : antichain)
                    if (dominates(cand, x) || dominates(x, cand)) comparable = true;
                if (!comparable) antichain.push_back(cand);
            }
            for (const auto& x : antichain) {
                if (!leq_p(x, x, p)) ok = false;
                for (const auto& y : antichain) {
                    if (leq_p(x, y, p) && leq_p(y, x, p) && !(x == y)) ok = false;
                    for (const auto& z : antichain)
                        if (leq_p(x, y, p) && leq_p(y, z, p) && !leq_p(x, z, p)) ok = false;
                }
            }
        }
        item("leq_p poset axioms on 100 random antichains", ok);
    }
    {  // jacobi-trudi
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const auto& lam : enumerate_partitions(n))
                if (!jacobi_trudi_check(lam)) ok = false;
        item("jacobi-trudi identity, |lambda| <= 7", ok);
    }
    {  // LR nonnegativity / support / unit leading
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const auto& a : enumerate_generators(n, n)) {
                auto vec = expand_product(a);
                Partition f = phi(a);
                if (vec.coefficient(f) != 1) ok = false;
                for (const auto& [key, c] : vec.coeffs())
                    if (c < 0 || !dominates(key, f)) ok = false;
            }
        item("LR nonnegativity, dominance support, unit leading term, N <= 7", ok);
    }
    {  // pi-invariance of the block assignment (randomized tie-breaks)
        bool ok = true;
        std::string note;
        std::mt19937_64 rng(1);
        for (int n = 2; n <= 6 && ok; ++n) {
            for (const auto& a : enumerate_generators(n, n)) {
                if (a.size() < 2) continue;
                auto [content, canonical] = block_assignment(a);
                for (int trial = 0; trial < 10 && ok; ++trial) {
                    // permute letters within each equal-value run of phi(A)
                    BlockAssignment shuffled;
                    shuffled.blocks.assign(canonical.blocks.size(), {});
                    std::vector<int> owner(static_cast<std::size_t>(content.size()) + 1, 0);
                    for (std::size_t b = 0; b < canonical.blocks.size(); ++b)
                        for (int letter : canonical.blocks[b]) owner[static_cast<std::size_t>(letter)] = static_cast<int>(b);
                    int start = 1;
                    while (start <= content.size()) {
                        int end = start;
                        while (end + 1 <= content.size() && content.part(end + 1) == content.part(start)) ++end;
                        std::vector<int> run;
                        for (int v = start; v <= end; ++v) run.push_back(v);
                        std::shuffle(run.begin(), run.end(), rng);
                        for (int v = start; v <= end; ++v)
                            shuffled.blocks[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].push_back(
                                run[static_cast<std::size_t>(v - start)]);
                        start = end + 1;
                    }
                    for (auto& b : shuffled.blocks) std::sort(b.begin(), b.end());
                    for (const auto& lam : enumerate_partitions(n)) {
                        Int want = lr_multi(a, lam);
                        Int got = block_ballot_count(content, shuffled, lam);
                        if (want != got) {
                            ok = false;
                            note = "counterexample A={" + to_string(a) + "}, lambda=" + to_string(lam) +
                                   ": block-ballot count " + got.str() + " vs c_A^lambda " + want.str() +
                                   " under a permuted tie-break; the counting model is not "
                                   "pi-invariant (see tests/test_schur.cpp and the ledger)";
                            break;
                        }
                    }
                }
                if (!ok) break;
            }
        }
        item("pi-invariance of block assignment, N <= 6", ok, note);
    }
    {  // certificate re-verification on every solver call
        bool ok = true;
        ProductCache cache;
        for (int n = 1; n <= 6 && ok; ++n)
            for (int k = 1; k <= 3 && ok; ++k)
                for (const auto& a : enumerate_generators(n, k)) {
                    auto inst = build_cone_instance(a, k, cache);
                    auto res = solve_feasibility(inst);
                    if (!verify_certificate(inst, res.certificate)) {
                        ok = false;
                        break;
                    }
                }
        item("independent certificate re-verification on every solver call, N <= 6, k <= 3", ok);
    }
    detail = failures == 0 ? "all property suites pass"
                           : std::to_string(failures) + " property suite(s) failed (see sub-lines)";
    return failures == 0;
}

// 11. conjecture-main consistency at N <= 8
bool c11_main(std::string& detail) {
    SuiteConfig cfg;
    cfg.bound = 8;
    cfg.jobs = g_jobs;
    auto r = run_suite("conjecture-main", cfg);
    detail = std::to_string(r.cases_run) + " generators classified; status " + r.status();
    if (!r.violations.empty()) detail += "; first: " + r.violations[0].case_descriptor;
    return r.status() == "pass";
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) g_cli = argv[++i];
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) g_jobs = std::atoi(argv[++i]);
    }
    if (g_cli.empty())
        if (const char* env = std::getenv("SCHURCONE_CLI")) g_cli = env;

    const Criterion criteria[] = {
        {1, "table reproduction, N <= 8, exact", c1_table},
        {2, "k=1 counts, enumeration (N <= 10) and LP (N <= 6)", c2_k1},
        {3, "nested counts equal xi_N^2, N <= 10", c3_nested},
        {4, "oracle equivalence, N <= 6, k <= 3", c4_oracle},
        {5, "coupled-coefficient identity suite, |lambda| <= 9", c5_lemma15},
        {6, "squared-pair coefficients and extremality on the pinned grid", c6_squared},
        {7, "k=3 identity suite at weight <= 12 with the remark checks", c7_k3},
        {8, "binomial coefficient law at weight <= 12", c8_binomial},
        {9, "adjoining (p,p) preserves extremality, N+2p <= 10", c9_add_square},
        {10, "property suites", c10_properties},
        {11, "LP-extreme set equals nested set, N <= 8", c11_main},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %s — %s%s%s\n", c.id, ok ? "PASS" : "FAIL", c.description.c_str(),
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}

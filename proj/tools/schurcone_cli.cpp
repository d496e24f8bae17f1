// Command-line interface: exact Schur-product expansion, nestedness checks,
// extreme-ray certification, extreme-ray counting/table reproduction, and the
// batch verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurcone/cone.hpp"
#include "schurcone/exec.hpp"
#include "schurcone/lr.hpp"
#include "schurcone/nested.hpp"
#include "schurcone/paper_table.hpp"
#include "schurcone/suites.hpp"

namespace {

constexpr int kExitNonExtreme = 10;
constexpr int kExitFinding = 20;
constexpr int kExitTableMismatch = 21;
constexpr int kExitTimeout = 4;

nlohmann::json report_json(const schurcone::BadPairReport& r) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"entries", {v.first, v.second}}, {"condition", v.condition}});
    return {{"isNested", r.is_nested}, {"violations", vs}};
}

std::string format_table(const std::vector<std::vector<long>>& xi, bool tsv) {
    std::string out;
    if (tsv) {
        for (std::size_t n = 0; n < xi.size(); ++n) {
            out += std::to_string(n + 1);
            for (long v : xi[n]) out += "\t" + std::to_string(v);
            out += "\n";
        }
        return out;
    }
    out = "N\\k";
    for (std::size_t k = 1; k <= xi.size(); ++k) out += "\t" + std::to_string(k);
    out += "\n";
    for (std::size_t n = 0; n < xi.size(); ++n) {
        out += std::to_string(n + 1);
        for (long v : xi[n]) out += "\t" + std::to_string(v);
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace schurcone;
    CLI::App app{"Exact symmetric-function combinatorics and Schur-cone extreme rays"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    int jobs = 1;
    std::uint64_t seed = 0;
    long timeout_secs = 0;
    app.add_option("--jobs", jobs, "Worker threads for fan-out work")->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized property checks (shipped suites are exhaustive)");
    app.add_option("--timeout-secs", timeout_secs, "Abort with an error after this many seconds");

    std::string multiset_text, target_text;
    int opt_k = 2, opt_n = 0, max_n = 8, bound = 0;
    std::string method = "lp", report_path;
    bool tsv = false, diff_paper = false, long_run = false;

    auto* cmd_expand = app.add_subcommand("expand", "Expand s_A in the Schur basis (JSON)");
    cmd_expand->add_option("--multiset", multiset_text, "Generator A, e.g. \"3,2|3,1|4\"")->required();

    auto* cmd_lr = app.add_subcommand("lr", "One Littlewood-Richardson coefficient c_A^lambda");
    cmd_lr->add_option("--multiset", multiset_text)->required();
    cmd_lr->add_option("--target", target_text, "Partition lambda, e.g. \"3,2,1\"")->required();

    auto* cmd_nested = app.add_subcommand("nested", "Bad-pair report for A (JSON)");
    cmd_nested->add_option("--multiset", multiset_text)->required();

    auto* cmd_extreme = app.add_subcommand("extreme", "Certify s_A extreme/non-extreme in the (N,k)-cone");
    cmd_extreme->add_option("--multiset", multiset_text)->required();
    cmd_extreme->add_option("--k", opt_k, "Cone parameter k")->required();

    auto* cmd_count = app.add_subcommand("count", "Count extreme generators of the (N,k)-cone");
    cmd_count->add_option("--N", opt_n)->required();
    cmd_count->add_option("--k", opt_k)->required();
    cmd_count->add_option("--method", method, "lp (certified) or nested (k<=2 predicate path)")
        ->check(CLI::IsMember({"lp", "nested"}));

    auto* cmd_table = app.add_subcommand("table", "Emit the xi_N^k matrix");
    cmd_table->add_option("--max-N", max_n)->capture_default_str();
    cmd_table->add_flag("--tsv", tsv, "Tab-separated rows without header");
    cmd_table->add_flag("--diff-paper", diff_paper, "Diff against the embedded reference table");
    cmd_table->add_flag("--long", long_run, "Allow the N=9,10 rows (long run)");

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite_name;
    cmd_verify->add_option("--suite", suite_name, "One of: lr-corollary lemma15 separated-claims "
                                                  "add-square squared k3-identities jacobi-trudi "
                                                  "conjecture-main conj-iii conj-iv table")
        ->required();
    cmd_verify->add_option("--bound", bound, "Override the suite's default bound");
    cmd_verify->add_option("--report", report_path, "Also write the report JSON to this file");

    CLI11_PARSE(app, argc, argv);
    if (timeout_secs > 0) Deadline::set_seconds(timeout_secs);

    try {
        if (cmd_expand->parsed()) {
            auto a = parse_multiset(multiset_text);
            std::cout << to_json(expand_product(a)).dump(2) << "\n";
            return 0;
        }
        if (cmd_lr->parsed()) {
            auto a = parse_multiset(multiset_text);
            auto lam = parse_partition(target_text);
            std::cout << lr_multi(a, lam).str() << "\n";
            return 0;
        }
        if (cmd_nested->parsed()) {
            auto a = parse_multiset(multiset_text);
            std::cout << report_json(nested_report(a)).dump(2) << "\n";
            return 0;
        }
        if (cmd_extreme->parsed()) {
            auto a = parse_multiset(multiset_text);
            SolverConfig config;
            ProductCache cache;
            auto res = is_extreme(a, opt_k, config, cache);
            std::cout << to_json(res).dump(2) << "\n";
            return res.extreme ? 0 : kExitNonExtreme;
        }
        if (cmd_count->parsed()) {
            if (method == "nested") {
                if (opt_k == 1)
                    std::cout << enumerate_generators(opt_n, 1).size() << "\n";
                else if (opt_k == 2)
                    std::cout << count_nested(opt_n) << "\n";
                else
                    throw Error("count --method nested requires k <= 2 (no predicate is known beyond)");
                return 0;
            }
            SolverConfig config;
            ProductCache cache;
            std::cout << count_extreme(opt_n, opt_k, config, cache, jobs) << "\n";
            return 0;
        }
        if (cmd_table->parsed()) {
            ProductCache cache;
            auto xi = extreme_table(max_n, cache, jobs, long_run);
            std::cout << format_table(xi, tsv);
            if (diff_paper) {
                auto reference = reference_xi_table();
                long mismatches = 0;
                for (std::size_t n = 0; n < xi.size(); ++n)
                    for (std::size_t k = 0; k < xi[n].size(); ++k)
                        if (xi[n][k] != reference[n][k]) {
                            ++mismatches;
                            std::cerr << "mismatch at N=" << n + 1 << " k=" << k + 1 << ": computed "
                                      << xi[n][k] << ", reference " << reference[n][k] << "\n";
                        }
                if (mismatches) return kExitTableMismatch;
                std::cerr << "table matches the reference for N <= " << max_n << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            SuiteConfig cfg;
            cfg.bound = bound;
            cfg.jobs = jobs;
            cfg.seed = seed;
            if (bound > cfg.solver.max_degree) cfg.solver.max_degree = bound;
            auto report = run_suite(suite_name, cfg);
            auto j = to_json(report);
            std::cout << j.dump(2) << "\n";
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << j.dump(2) << "\n";
            }
            if (report.has_failure()) return 1;
            if (report.has_finding()) return kExitFinding;
            return 0;
        }
    } catch (const TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

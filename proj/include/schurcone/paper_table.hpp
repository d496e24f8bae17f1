#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schurcone/errors.hpp"

namespace schurcone {

/// Reference extreme-ray counts, embedded copy of data/paper_xi_table.tsv.
/// Row N lists xi_N^k for k = 1..N.
inline constexpr std::string_view kReferenceXiTableTsv =
    "# xi[N][k] = number of extreme rays of the (N,k)-Schur cone, k = 1..N per row\n"
    "1\t1\n"
    "2\t2\t2\n"
    "3\t3\t3\t3\n"
    "4\t5\t5\t5\t5\n"
    "5\t7\t7\t7\t7\t7\n"
    "6\t11\t13\t13\t11\t11\t11\n"
    "7\t15\t17\t18\t17\t15\t15\t15\n"
    "8\t22\t28\t29\t27\t24\t22\t22\t22\n"
    "9\t30\t40\t47\t41\t36\t32\t30\t30\t30\n"
    "10\t42\t61\t70\t68\t55\t48\t44\t42\t42\t42\n";

/// Parses the TSV into xi[N-1][k-1].
inline std::vector<std::vector<long>> parse_xi_table(std::string_view tsv) {
    std::vector<std::vector<long>> table;
    std::istringstream in{std::string(tsv)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        long n;
        if (!(row >> n)) throw ParseError("xi table: bad row '" + line + "'");
        if (n != static_cast<long>(table.size()) + 1) throw ParseError("xi table: rows must be N=1,2,...");
        std::vector<long> vals;
        long v;
        while (row >> v) vals.push_back(v);
        if (vals.size() != static_cast<std::size_t>(n))
            throw ParseError("xi table: row N=" + std::to_string(n) + " must have N entries");
        table.push_back(std::move(vals));
    }
    return table;
}

inline std::vector<std::vector<long>> reference_xi_table() {
    return parse_xi_table(kReferenceXiTableTsv);
}

}  // namespace schurcone

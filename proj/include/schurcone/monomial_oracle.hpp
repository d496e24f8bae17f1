#pragma once

#include <map>
#include <vector>

#include "schurcone/multiset.hpp"
#include "schurcone/schur_vector.hpp"
#include "schurcone/tableau.hpp"

namespace schurcone {

/// Independent correctness oracle for expand_product: multiplies the factors
/// as explicit polynomials (monomial expansion of each s_rho over N
/// variables, N = total degree), then converts the product back to the Schur
/// basis by back-substitution against the dominance-unitriangular Kostka
/// matrix. Shares no code with the LR counting path.
namespace oracle_detail {

using Monomial = std::vector<int>;          // exponent vector, fixed length
using Polynomial = std::map<Monomial, Int>;

/// Monomial expansion of s_shape in nvars variables: one monomial per SSYT
/// with entries <= nvars (its content vector).
inline Polynomial schur_polynomial(const Partition& shape, int nvars) {
    Polynomial poly;
    if (shape.weight() == 0) {
        poly[Monomial(static_cast<std::size_t>(nvars), 0)] = 1;
        return poly;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.size()));
    for (int r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);
    Monomial content(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.size()) {
            ++poly[content];
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            rows[r][c] = v;
            ++content[v - 1];
            self(self, nr, nc);
            --content[v - 1];
        }
        rows[r][c] = 0;
    };
    rec(rec, 0, 0);
    return poly;
}

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [e1, c1] : p)
        for (const auto& [e2, c2] : q) {
            Monomial e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r[e] += c1 * c2;
        }
    return r;
}

}  // namespace oracle_detail

/// See above. Degree must not exceed the oracle bound (default 8).
inline SchurVector expand_product_oracle(const PartitionMultiset& a, int bound = 8) {
    const int n = a.total_weight();
    if (n > bound)
        throw BoundExceededError("expand_product_oracle: degree " + std::to_string(n) +
                                 " exceeds bound " + std::to_string(bound));
    using namespace oracle_detail;
    const int nvars = std::max(n, 1);
    Polynomial prod = schur_polynomial(Partition{}, nvars);
    for (const auto& e : a.entries()) prod = multiply(prod, schur_polynomial(e, nvars));

    // m-basis coefficients: coefficient of the monomial whose exponents are
    // the partition itself (sorted descending)
    auto lams = enumerate_partitions(n);  // descending lex, refines dominance
    std::map<Partition, Int> m_coeff;
    for (const auto& lam : lams) {
        Monomial key(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < lam.size(); ++i) key[i] = lam.part(i + 1);
        auto it = prod.find(key);
        m_coeff[lam] = it == prod.end() ? Int(0) : it->second;
    }

    // unitriangular back-substitution: s_kappa = sum_{mu} K_{kappa,mu} m_mu
    std::map<std::pair<Partition, Partition>, Int> kost;
    auto K = [&](const Partition& x, const Partition& y) -> const Int& {
        auto it = kost.find({x, y});
        if (it == kost.end()) it = kost.emplace(std::make_pair(x, y), kostka(x, y)).first;
        return it->second;
    };
    SchurVector out(n);
    for (const auto& lam : lams) {
        Int c = m_coeff[lam];
        for (const auto& kappa : lams) {
            if (kappa == lam) break;  // lams descend; dominators come first
            Int ck = out.coefficient(kappa);
            if (ck != 0 && dominates(kappa, lam)) c -= ck * K(kappa, lam);
        }
        if (c != 0) out.set(lam, c);
    }

    // full reconstruction check against the m-basis coefficients
    for (const auto& mu : lams) {
        Int recon = 0;
        for (const auto& [kappa, ck] : out.coeffs())
            if (dominates(kappa, mu)) recon += ck * K(kappa, mu);
        if (recon != m_coeff[mu])
            throw Error("expand_product_oracle: Kostka back-substitution inconsistency");
    }
    return out;
}

}  // namespace schurcone

#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "schurcone/numbers.hpp"
#include "schurcone/partition.hpp"

namespace schurcone {

/// A degree-graded vector in the Schur basis: a map from partitions of the
/// degree to coefficients. Zero coefficients are never stored. The
/// coefficient ring is a template parameter (exact integers for expansions,
/// exact rationals for solver arithmetic).
template <typename Coeff>
class SchurExpansion {
  public:
    SchurExpansion() = default;
    explicit SchurExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Coeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    Coeff coefficient(const Partition& key) const {
        auto it = coeffs_.find(key);
        return it == coeffs_.end() ? Coeff(0) : it->second;
    }

    void set(const Partition& key, Coeff value) {
        check_key(key);
        if (value == 0)
            coeffs_.erase(key);
        else
            coeffs_[key] = std::move(value);
    }

    void add(const Partition& key, const Coeff& value) {
        check_key(key);
        auto [it, inserted] = coeffs_.try_emplace(key, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SchurExpansion& operator+=(const SchurExpansion& other) {
        check_degree(other);
        for (const auto& [k, v] : other.coeffs_) add(k, v);
        return *this;
    }

    SchurExpansion& operator-=(const SchurExpansion& other) {
        check_degree(other);
        for (const auto& [k, v] : other.coeffs_) add(k, Coeff(-v));
        return *this;
    }

    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

  private:
    void check_key(const Partition& key) const {
        if (key.weight() != degree_)
            throw WeightMismatchError("SchurExpansion: key weight " + std::to_string(key.weight()) +
                                      " != degree " + std::to_string(degree_));
    }
    void check_degree(const SchurExpansion& other) const {
        if (other.degree_ != degree_)
            throw WeightMismatchError("SchurExpansion: degree mismatch");
    }

    int degree_ = 0;
    std::map<Partition, Coeff> coeffs_;
};

using SchurVector = SchurExpansion<Int>;
using SchurVectorQ = SchurExpansion<Rational>;

inline SchurVectorQ to_rational(const SchurVector& v) {
    SchurVectorQ out(v.degree());
    for (const auto& [k, c] : v.coeffs()) out.set(k, Rational(c));
    return out;
}

/// v + c*w with exact rational promotion.
inline SchurVectorQ add_scaled(const SchurVectorQ& v, const SchurVectorQ& w, const Rational& c) {
    if (v.degree() != w.degree()) throw WeightMismatchError("add_scaled: degree mismatch");
    SchurVectorQ out = v;
    for (const auto& [k, x] : w.coeffs()) out.add(k, c * x);
    return out;
}

inline SchurVectorQ add_scaled(const SchurVector& v, const SchurVector& w, const Rational& c) {
    return add_scaled(to_rational(v), to_rational(w), c);
}

inline SchurVector add_scaled(const SchurVector& v, const SchurVector& w, const Int& c) {
    if (v.degree() != w.degree()) throw WeightMismatchError("add_scaled: degree mismatch");
    SchurVector out = v;
    for (const auto& [k, x] : w.coeffs()) out.add(k, c * x);
    return out;
}

/// JSON object {"degree": N, "coeffs": {"3,2,1": "2", ...}} with decimal
/// string values.
inline nlohmann::json to_json(const SchurVector& v) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, c] : v.coeffs()) coeffs[to_string(k)] = c.str();
    return {{"degree", v.degree()}, {"coeffs", coeffs}};
}

inline SchurVector schur_vector_from_json(const nlohmann::json& j) {
    SchurVector v(j.at("degree").get<int>());
    for (const auto& [key, val] : j.at("coeffs").items())
        v.set(parse_partition(key), Int(val.get<std::string>()));
    return v;
}

}  // namespace schurcone

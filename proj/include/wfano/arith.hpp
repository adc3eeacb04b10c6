#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wfano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Weight = std::uint64_t;
using Weights = std::vector<Weight>;

// Values l_0..l_N attached to a weight tuple of length N+1.
using LevelInvariants = std::vector<Int>;

// A documented precondition was violated by the caller (CLI exit code 1).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An internal invariant broke; indicates a bug, not bad input (CLI exit code 3).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what_arg) : std::logic_error(what_arg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void validate_weights(const Weights& q) {
    require(q.size() >= 2, "weights: at least two entries are required");
    for (Weight w : q) require(w >= 1, "weights: entries must be positive");
}

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / int_gcd(a, b) * b;
}

inline Int weight_product(const Weights& q) {
    Int p = 1;
    for (Weight w : q) p *= w;
    return p;
}

inline Weight weights_gcd(const Weights& q) {
    Weight g = 0;
    for (Weight w : q) g = std::gcd(g, w);
    return g;
}

inline Int weights_lcm(const Weights& q) {
    Int l = 1;
    for (Weight w : q) l = int_lcm(l, Int(w));
    return l;
}

inline Int weight_sum(const Weights& q) {
    Int s = 0;
    for (Weight w : q) s += w;
    return s;
}

inline bool pairwise_coprime(const Weights& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (std::gcd(q[i], q[j]) != 1) return false;
    return true;
}

// (product of the selected weights) / (gcd of the selected weights).
// A singleton subset always yields 1: the product and the gcd coincide.
inline Int l_subset(const Weights& q, const std::vector<std::size_t>& index_set) {
    validate_weights(q);
    require(!index_set.empty(), "l_subset: index set must be nonempty");
    std::vector<std::size_t> idx = index_set;
    std::sort(idx.begin(), idx.end());
    require(std::adjacent_find(idx.begin(), idx.end()) == idx.end(),
            "l_subset: duplicate index");
    require(idx.back() < q.size(), "l_subset: index out of range");
    Int prod = 1;
    Weight g = 0;
    for (std::size_t i : idx) {
        prod *= q[i];
        g = std::gcd(g, q[i]);
    }
    return prod / g;
}

// Reference implementation: lcm of l_subset over every (r+1)-element subset.
inline Int l_level_reference(const Weights& q, int r) {
    validate_weights(q);
    const int n = static_cast<int>(q.size()) - 1;
    require(r >= 0 && r <= n, "l_level: level out of range");
    std::vector<std::size_t> idx(static_cast<std::size_t>(r) + 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Int acc = 1;
    while (true) {
        Int prod = 1;
        Weight g = 0;
        for (std::size_t i : idx) {
            prod *= q[i];
            g = std::gcd(g, q[i]);
        }
        acc = int_lcm(acc, prod / g);
        // advance the combination
        int pos = static_cast<int>(idx.size()) - 1;
        while (pos >= 0 && idx[pos] == q.size() - idx.size() + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t t = pos + 1; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
    }
    return acc;
}

inline std::map<Weight, int> factorize(Weight value) {
    std::map<Weight, int> factors;
    for (Weight p = 2; p * p <= value; ++p)
        while (value % p == 0) {
            ++factors[p];
            value /= p;
        }
    if (value > 1) ++factors[value];
    return factors;
}

namespace detail {

// prime -> valuations of that prime across the tuple, sorted descending.
inline std::map<Weight, std::vector<int>> prime_valuations(const Weights& q) {
    std::map<Weight, std::vector<int>> vals;
    for (Weight w : q)
        for (const auto& [p, e] : factorize(w)) vals[p].push_back(e);
    for (auto& [p, es] : vals) std::sort(es.begin(), es.end(), std::greater<>());
    return vals;
}

inline Int int_pow(Int base, unsigned exp) {
    Int out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

}  // namespace detail

// Optimized path. The p-valuation of a subset value (product/gcd) is the sum of
// all but the smallest valuation inside the subset, so over (r+1)-subsets the
// maximum is the sum of the r largest valuations of p across the whole tuple.
inline Int l_level(const Weights& q, int r) {
    validate_weights(q);
    const int n = static_cast<int>(q.size()) - 1;
    require(r >= 0 && r <= n, "l_level: level out of range");
    if (r == 0) return 1;
    Int out = 1;
    for (const auto& [p, es] : detail::prime_valuations(q)) {
        long long sum = 0;
        const int take = std::min<int>(r, static_cast<int>(es.size()));
        for (int i = 0; i < take; ++i) sum += es[i];
        out *= detail::int_pow(Int(p), static_cast<unsigned>(sum));
    }
    return out;
}

// All levels l_0..l_N in one pass, with the closed-form identities re-checked.
inline LevelInvariants l_profile(const Weights& q) {
    validate_weights(q);
    const int n = static_cast<int>(q.size()) - 1;
    LevelInvariants out(static_cast<std::size_t>(n) + 1, Int(1));
    for (const auto& [p, es] : detail::prime_valuations(q)) {
        Int pk = 1;
        for (int r = 1; r <= n; ++r) {
            if (r - 1 < static_cast<int>(es.size()))
                pk *= detail::int_pow(Int(p), static_cast<unsigned>(es[r - 1]));
            out[static_cast<std::size_t>(r)] *= pk;
        }
    }
    ensure(out[0] == 1, "l_profile: l_0 must be 1");
    ensure(out[1] == weights_lcm(q), "l_profile: l_1 must be the lcm of the weights");
    ensure(out.back() == weight_product(q) / weights_gcd(q),
           "l_profile: l_N must be product/gcd");
    return out;
}

}  // namespace wfano

#pragma once

#include <optional>

#include "hypersurface.hpp"
#include "series.hpp"

namespace wfano {

// Poincare series of the generic Jacobian ring:
//   prod_i (1 - t^(d - q_i)) / (1 - t^(q_i)), truncated at T.
// Its graded pieces carry the primitive middle Hodge numbers.
inline TruncatedSeries jacobian_series(const Weights& q, const Int& d, int T) {
    validate_weights(q);
    for (Weight w : q)
        require(Int(w) < d,
                "jacobian_series: the degree must exceed every weight (a factor degenerates)");
    const int n = static_cast<int>(q.size()) - 2;
    require(Int(T) >= Int(n + 1) * d, "jacobian_series: truncation below (n+1)*degree");
    TruncatedSeries s = TruncatedSeries::one(T);
    for (Weight w : q) {
        const Int e = d - Int(w);  // positive, and <= T by the truncation check
        ensure(e <= T, "jacobian_series: exponent exceeds truncation");
        s = s * (TruncatedSeries::one(T) -
                 TruncatedSeries::monomial(T, static_cast<int>(e), 1));
    }
    for (Weight w : q) {
        require(Int(w) <= Int(T), "jacobian_series: weight exceeds truncation");
        s = s.divided_by(TruncatedSeries::one(T) -
                         TruncatedSeries::monomial(T, static_cast<int>(w), 1));
    }
    for (int i = 0; i <= T; ++i)
        ensure(s.at(i) >= 0, "jacobian_series: negative coefficient");
    return s;
}

namespace detail {

inline int hodge_truncation(const WeightedHypersurface& h) {
    const Int t = Int(h.x_dim() + 1) * h.degree();
    require(t <= 1000000,
            "hodge: series truncation too large for in-memory expansion");
    return static_cast<int>(t);
}

}  // namespace detail

// Primitive middle Hodge number h^{n-q,q}_prim: the Jacobian-ring dimension in
// graded degree (q+1)d - sum(weights); zero when that degree is negative.
inline Int middle_primitive_hodge(const WeightedHypersurface& h, int q) {
    detail::require_generic_smooth(h, "middle_primitive_hodge");
    const int n = h.x_dim();
    require(q >= 0 && q <= n, "middle_primitive_hodge: index out of range");
    const Int e = Int(q + 1) * h.degree() - weight_sum(h.ambient().weights());
    if (e < 0) return 0;
    const int T = detail::hodge_truncation(h);
    const TruncatedSeries s = jacobian_series(h.ambient().weights(), h.degree(), T);
    ensure(e <= T, "middle_primitive_hodge: exponent exceeds truncation");
    return s.at(static_cast<int>(e));
}

// Full table h^{p,q}, 0 <= p,q <= n.
struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<Int>> entries;  // entries[p][q]

    const Int& at(int p, int q) const {
        require(p >= 0 && p <= n && q >= 0 && q <= n, "HodgeDiamond: index out of range");
        return entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
};

inline HodgeDiamond hodge_diamond(const WeightedHypersurface& h) {
    detail::require_generic_smooth(h, "hodge_diamond");
    const int n = h.x_dim();
    HodgeDiamond d;
    d.n = n;
    d.entries.assign(static_cast<std::size_t>(n) + 1,
                     std::vector<Int>(static_cast<std::size_t>(n) + 1, Int(0)));
    // one series expansion serves the whole middle row
    const int T = detail::hodge_truncation(h);
    const TruncatedSeries s = jacobian_series(h.ambient().weights(), h.degree(), T);
    const Int sum = weight_sum(h.ambient().weights());
    for (int q = 0; q <= n; ++q) {
        const Int e = Int(q + 1) * h.degree() - sum;
        Int prim = 0;
        if (e >= 0) {
            ensure(e <= T, "hodge_diamond: exponent exceeds truncation");
            prim = s.at(static_cast<int>(e));
        }
        d.entries[static_cast<std::size_t>(n - q)][static_cast<std::size_t>(q)] = prim;
    }
    if (n % 2 == 0) d.entries[static_cast<std::size_t>(n / 2)][static_cast<std::size_t>(n / 2)] += 1;
    for (int p = 0; p <= n; ++p)
        if (2 * p != n) d.entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;

    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            ensure(d.at(p, q) == d.at(q, p), "hodge_diamond: symmetry violated");
            ensure(d.at(p, q) == d.at(n - p, n - q), "hodge_diamond: duality violated");
            if (p + q != n)
                ensure(d.at(p, q) == (p == q ? 1 : 0),
                       "hodge_diamond: off-middle entry must be Kronecker delta");
        }
    return d;
}

// Sum of the middle Hodge row: the rank of the middle cohomology group.
inline Int middle_betti(const WeightedHypersurface& h) {
    const HodgeDiamond d = hodge_diamond(h);
    Int out = 0;
    for (int q = 0; q <= d.n; ++q)
        out += d.at(d.n - q, q);
    return out;
}

// Rank of H^k(X). Below the middle the groups alternate Z / 0; the middle rank
// comes from the Hodge row; above the middle ranks follow by duality, except
// k = n+1 (when it is not the top degree), where the group is deliberately
// reported as undetermined instead of guessed.
inline std::optional<Int> cohomology_rank_x(const WeightedHypersurface& h, int k) {
    detail::require_generic_smooth(h, "cohomology_rank_x");
    const int n = h.x_dim();
    require(k >= 0 && k <= 2 * n, "cohomology_rank_x: degree outside [0, 2n]");
    if (k < n) return Int(k % 2 == 0 ? 1 : 0);
    if (k == n) return middle_betti(h);
    if (k == 2 * n) return Int(1);  // top class of a closed oriented manifold
    if (k == n + 1) return std::nullopt;
    const int dual = 2 * n - k;  // lands strictly below the middle
    return Int(dual % 2 == 0 ? 1 : 0);
}

// Independent oracle for members of Fermat type (every weight divides d):
// the Jacobian-ring dimension in degree m equals the number of exponent
// vectors a with sum(a_i q_i) = m and 0 <= a_i <= d/q_i - 2.
inline Int fermat_monomial_count(const Weights& q, const Int& d, const Int& m) {
    validate_weights(q);
    require(m >= 0, "fermat_monomial_count: negative degree");
    require(m <= 1000000, "fermat_monomial_count: degree too large for the table");
    const auto mm = static_cast<std::size_t>(m);
    std::vector<Int> count(mm + 1, Int(0));
    count[0] = 1;
    for (Weight w : q) {
        require(d % w == 0 && d / w >= 2,
                "fermat_monomial_count: no Fermat-type member (each weight must divide "
                "the degree at least twice)");
        const Int cap = d / w - 2;
        std::vector<Int> next(mm + 1, Int(0));
        for (std::size_t used = 0; used <= mm; ++used) {
            if (count[used] == 0) continue;
            for (Int a = 0; a <= cap; ++a) {
                const Int target = Int(used) + a * w;
                if (target > m) break;
                next[static_cast<std::size_t>(target)] += count[used];
            }
        }
        count = std::move(next);
    }
    return count[mm];
}

}  // namespace wfano

#pragma once

#include <optional>
#include <utility>

#include "wps.hpp"

namespace wfano {

// A generic degree-d hypersurface X of dimension n = N-1 in P(q_0,...,q_N).
class WeightedHypersurface {
public:
    WeightedHypersurface(WeightedProjectiveSpace ambient, Int degree)
        : ambient_(std::move(ambient)), degree_(std::move(degree)) {
        require(degree_ >= 1, "hypersurface: degree must be positive");
        require(ambient_.dim() >= 2, "hypersurface: ambient dimension must be at least 2");
    }

    const WeightedProjectiveSpace& ambient() const { return ambient_; }
    const Int& degree() const { return degree_; }
    int x_dim() const { return ambient_.dim() - 1; }

private:
    WeightedProjectiveSpace ambient_;
    Int degree_;
};

// Why (or why not) the generic member of |O(d)| is a smooth manifold:
// the ambient singularities must be isolated (pairwise coprime weights) and
// the generic member must avoid them (every weight divides the degree).
struct SmoothnessReport {
    bool pairwise_coprime = false;
    bool degree_divisible = false;
    std::vector<Weight> offending_weights;  // the q_i that do not divide d

    bool pass() const { return pairwise_coprime && degree_divisible; }
};

inline SmoothnessReport check_generic_smooth(const WeightedHypersurface& h) {
    SmoothnessReport report;
    report.pairwise_coprime = pairwise_coprime(h.ambient().weights());
    for (Weight w : h.ambient().weights())
        if (h.degree() % w != 0) report.offending_weights.push_back(w);
    report.degree_divisible = report.offending_weights.empty();
    return report;
}

namespace detail {

inline void require_generic_smooth(const WeightedHypersurface& h, const char* op) {
    const SmoothnessReport report = check_generic_smooth(h);
    if (report.pass()) return;
    std::string msg(op);
    msg += ": the generic member is not smooth (";
    if (!report.pairwise_coprime) msg += "weights are not pairwise coprime";
    if (!report.pairwise_coprime && !report.degree_divisible) msg += "; ";
    if (!report.degree_divisible) {
        msg += "degree not divisible by weight(s)";
        for (Weight w : report.offending_weights) msg += " " + std::to_string(w);
    }
    msg += ")";
    throw domain_error(msg);
}

}  // namespace detail

// Anticanonical ampleness criterion: d < sum of the weights.
inline bool is_fano(const WeightedHypersurface& h) {
    return h.degree() < weight_sum(h.ambient().weights());
}

// When d equals one of the weights, the generic member is isomorphic to the
// weighted projective space on the remaining weights (a degenerate row).
inline bool is_trivial_cone(const WeightedHypersurface& h) {
    for (Weight w : h.ambient().weights())
        if (h.degree() == w) return true;
    return false;
}

// Largest integer dividing the anticanonical class: sum(q) - d.
inline Int fano_index(const WeightedHypersurface& h) {
    require(is_fano(h), "fano_index: hypersurface is not Fano (degree >= sum of weights)");
    return weight_sum(h.ambient().weights()) - h.degree();
}

// Multiplier of the restriction H^{2r}(ambient) -> H^{2r}(X) between the two
// generators: l_r * l_{N-r} / l_N. Only valid in the proven range 2r < N-1;
// outside it the value is refused rather than extrapolated.
inline Int pullback_multiplier(const WeightedHypersurface& h, int r) {
    detail::require_generic_smooth(h, "pullback_multiplier");
    const int ambient_dim = h.ambient().dim();
    require(r >= 0 && 2 * r < ambient_dim - 1,
            "pullback_multiplier: index outside the proven range 2r < N-1");
    const Int num = h.ambient().level(r) * h.ambient().level(ambient_dim - r);
    const Int& den = h.ambient().level(ambient_dim);
    ensure(num % den == 0, "pullback_multiplier: non-integral multiplier");
    Int out = num / den;
    ensure(out > 0, "pullback_multiplier: multiplier must be positive");
    return out;
}

// The integer k with (n-fold cup of the H^2 generator) = k * (top generator):
// k = l_{n+1}^{n-1} * d / l_n^n, levels taken over the full ambient tuple.
inline Int intersection_form_multiple(const WeightedHypersurface& h) {
    detail::require_generic_smooth(h, "intersection_form_multiple");
    const int n = h.x_dim();
    require(n >= 2, "intersection_form_multiple: needs dimension at least 2");
    const Int num = detail::int_pow(h.ambient().level(n + 1), static_cast<unsigned>(n - 1)) * h.degree();
    const Int den = detail::int_pow(h.ambient().level(n), static_cast<unsigned>(n));
    ensure(num % den == 0, "intersection_form_multiple: non-integral multiple");
    Int out = num / den;
    ensure(out > 0, "intersection_form_multiple: multiple must be positive");
    return out;
}

// Edge multipliers of the restriction/covering ladder used to pin down the
// intersection form. X' is the preimage of X in ordinary projective space
// under the coordinate covering; all groups are identified with Z via their
// generators, so each edge is one multiplier.
struct DiagramMultipliers {
    Int phi_star_h2;       // H^2(ambient)  -> H^2(P),  covering pullback: l_1
    Int phi_star_h2n;      // H^2n(ambient) -> H^2n(P), covering pullback: l_n
    Int lefschetz_iso;     // H^2(P)   -> H^2(X'), hyperplane-section iso: 1
    Int pn_form;           // H^2(X')  -> H^2n(X'), n-fold form on X': d
    Rat i_star;            // H^2(ambient) -> H^2(X), restriction: l_1 l_n / l_{n+1}
    Rat x_form;            // H^2(X)   -> H^2n(X), the solved n-fold form on X
    Rat x_to_xprime_h2;    // H^2(X)   -> H^2(X'), solved: l_{n+1} / l_n
    Int x_to_xprime_h2n;   // H^2n(X)  -> H^2n(X'), covering degree: l_{n+1}
};

// Fill the six known edges, solve the two unknown ones from commutativity,
// and cross-check the result against the closed-form multiple.
inline DiagramMultipliers diagram_solve(const WeightedHypersurface& h) {
    detail::require_generic_smooth(h, "diagram_solve");
    const int n = h.x_dim();
    require(n >= 2, "diagram_solve: needs dimension at least 2");
    const Int& l1 = h.ambient().level(1);
    const Int& ln = h.ambient().level(n);
    const Int& ln1 = h.ambient().level(n + 1);

    DiagramMultipliers d;
    d.phi_star_h2 = l1;
    d.phi_star_h2n = ln;
    d.lefschetz_iso = 1;
    d.pn_form = h.degree();
    d.i_star = Rat(l1 * ln, ln1);
    d.x_to_xprime_h2n = ln1;

    // H^2 square: (ambient -> X -> X') must equal (ambient -> P -> X').
    d.x_to_xprime_h2 = Rat(d.lefschetz_iso * d.phi_star_h2) / d.i_star;
    ensure(d.x_to_xprime_h2 * d.i_star == Rat(d.lefschetz_iso * d.phi_star_h2),
           "diagram_solve: H^2 square does not commute");
    ensure(d.x_to_xprime_h2 == Rat(ln1, ln), "diagram_solve: unexpected H^2 transfer value");

    // form square: (X-form, then covering degree) equals (transfer, then X'-form),
    // the transfer entering the n-fold form once per factor.
    Rat transfer_pow = 1;
    for (int i = 0; i < n; ++i) transfer_pow *= d.x_to_xprime_h2;
    d.x_form = transfer_pow * d.pn_form / Rat(d.x_to_xprime_h2n);
    ensure(d.x_form * Rat(d.x_to_xprime_h2n) == transfer_pow * Rat(d.pn_form),
           "diagram_solve: form square does not commute");

    // top-degree square: the unlabeled ambient->X restriction on H^2n is
    // forced to d*l_n/l_{n+1}; verify it closes against the covering edges.
    const Rat top_restriction = Rat(h.degree() * ln, ln1);
    ensure(top_restriction * Rat(d.x_to_xprime_h2n) == Rat(d.phi_star_h2n * h.degree()),
           "diagram_solve: top-degree square does not commute");

    // outer rectangle: around the whole ladder both ways.
    Rat i_star_pow = 1;
    for (int i = 0; i < n; ++i) i_star_pow *= d.i_star;
    ensure(i_star_pow * d.x_form * Rat(d.x_to_xprime_h2n) ==
               Rat(detail::int_pow(d.phi_star_h2, static_cast<unsigned>(n)) * d.lefschetz_iso * d.pn_form),
           "diagram_solve: outer rectangle does not commute");

    ensure(boost::multiprecision::denominator(d.x_form) == 1,
           "diagram_solve: solved form multiple is not an integer");
    ensure(d.x_form > 0, "diagram_solve: solved form multiple must be positive");
    ensure(d.x_form == Rat(intersection_form_multiple(h)),
           "diagram_solve: solved multiple disagrees with the closed form");
    return d;
}

}  // namespace wfano

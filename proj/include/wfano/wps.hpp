#pragma once

#include <utility>

#include "arith.hpp"

namespace wfano {

// P(q_0,...,q_N), with the level invariants cached on construction.
class WeightedProjectiveSpace {
public:
    explicit WeightedProjectiveSpace(Weights q)
        : weights_(std::move(q)), levels_(l_profile(weights_)) {}

    int dim() const { return static_cast<int>(weights_.size()) - 1; }
    const Weights& weights() const { return weights_; }
    const LevelInvariants& levels() const { return levels_; }

    const Int& level(int r) const {
        require(r >= 0 && r <= dim(), "level: index out of range");
        return levels_[static_cast<std::size_t>(r)];
    }

private:
    Weights weights_;
    LevelInvariants levels_;
};

// Rank of H^i: one Z in every even degree up to 2N, nothing else (torsion-free).
inline int cohomology_rank(const WeightedProjectiveSpace& space, int i) {
    require(i >= 0, "cohomology_rank: degree must be nonnegative");
    return (i % 2 == 0 && i <= 2 * space.dim()) ? 1 : 0;
}

// Multiplier of the covering pullback on H^{2k}: the generator maps to l_k
// times the k-th power of the hyperplane class upstairs.
inline const Int& phi_pullback_multiplier(const WeightedProjectiveSpace& space, int k) {
    require(k >= 0 && k <= space.dim(), "phi_pullback_multiplier: index out of range");
    return space.level(k);
}

// xi_k . xi_j = (l_k l_j / l_{k+j}) xi_{k+j}; the quotient is always integral.
inline Int cup_structure_constant(const WeightedProjectiveSpace& space, int k, int j) {
    require(k >= 0 && j >= 0, "cup_structure_constant: indices must be nonnegative");
    require(k + j <= space.dim(),
            "cup_structure_constant: product degree exceeds the top cohomology");
    const Int num = space.level(k) * space.level(j);
    const Int& den = space.level(k + j);
    ensure(num % den == 0, "cup_structure_constant: non-integral structure constant");
    return num / den;
}

// An integer multiple of the degree-2r basis class of a space.
struct CohomologyClass {
    const WeightedProjectiveSpace* space = nullptr;
    int degree_index = 0;
    Int coefficient = 0;
};

inline CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) {
    require(a.space != nullptr && b.space != nullptr, "cup: classes need a carrier space");
    require(a.space->weights() == b.space->weights(),
            "cup: classes live on different spaces");
    require(a.degree_index >= 0 && b.degree_index >= 0 &&
                a.degree_index <= a.space->dim() && b.degree_index <= a.space->dim(),
            "cup: degree index out of range");
    const int k = a.degree_index;
    const int j = b.degree_index;
    require(k + j <= a.space->dim(), "cup: product degree exceeds the top cohomology");
    return {a.space, k + j,
            a.coefficient * b.coefficient * cup_structure_constant(*a.space, k, j)};
}

// Degree of the covering map from ordinary projective space: l_N.
inline const Int& phi_degree(const WeightedProjectiveSpace& space) {
    return space.level(space.dim());
}

inline bool has_isolated_singularities(const WeightedProjectiveSpace& space) {
    return pairwise_coprime(space.weights());
}

// Indices i with q_i > 1; each names the coordinate point P_i, an isolated
// singular point. Only meaningful when the singular locus is zero-dimensional.
inline std::vector<int> singular_coordinate_points(const WeightedProjectiveSpace& space) {
    require(pairwise_coprime(space.weights()),
            "singular_coordinate_points: weights are not pairwise coprime, the "
            "singular locus is not a finite set of points");
    std::vector<int> out;
    for (std::size_t i = 0; i < space.weights().size(); ++i)
        if (space.weights()[i] > 1) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace wfano

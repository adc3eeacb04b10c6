#pragma once

#include <optional>

#include "intmat.hpp"
#include "wps.hpp"

namespace wfano {

// The N+1 fan rays of P(q_0,...,q_N), scaled by L = lcm(q) so that all
// coordinates are integers: row 0 = -(L/q_0)*(1,...,1), row i = (L/q_i)*e_i.
struct RayMatrix {
    IntMat rows;
    Int scale;
};

inline RayMatrix build_rays(const Weights& q) {
    validate_weights(q);
    const int n = static_cast<int>(q.size()) - 1;
    const Int scale = weights_lcm(q);
    IntMat rows(static_cast<std::size_t>(n) + 1, IntVec(static_cast<std::size_t>(n), Int(0)));
    for (int t = 0; t < n; ++t) rows[0][static_cast<std::size_t>(t)] = -(scale / q[0]);
    for (int i = 1; i <= n; ++i)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = scale / q[i];
    // the single linear relation among the rays: sum_i q_i * v_i = 0
    for (int t = 0; t < n; ++t) {
        Int s = 0;
        for (int i = 0; i <= n; ++i) s += Int(q[static_cast<std::size_t>(i)]) * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        ensure(s == 0, "build_rays: weighted ray relation violated");
    }
    return {rows, scale};
}

// Echelon basis of the lattice generated by the scaled rays.
struct LatticeBasis {
    IntMat basis;
    Int determinant;  // index of the scaled standard lattice frame, up to sign
};

inline LatticeBasis lattice_basis(const RayMatrix& rays) {
    ensure(!rays.rows.empty() && !rays.rows[0].empty(), "lattice_basis: empty ray matrix");
    IntMat basis = hermite_basis(rays.rows);
    ensure(basis.size() == rays.rows[0].size(),
           "lattice_basis: rays do not span full rank");
    for (const auto& ray : rays.rows)
        ensure(lattice_coordinates(basis, ray).has_value(),
               "lattice_basis: a generator escaped its own lattice");
    Int det = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) det *= basis[i][i];
    ensure(det != 0, "lattice_basis: degenerate basis");
    return {basis, det};
}

namespace detail {

inline IntMat cone_coordinates(const RayMatrix& rays, const LatticeBasis& lattice,
                               const std::vector<int>& cone) {
    IntMat coords;
    coords.reserve(cone.size());
    for (int i : cone) {
        auto c = lattice_coordinates(lattice.basis, rays.rows[static_cast<std::size_t>(i)]);
        ensure(c.has_value(), "cone_coordinates: ray outside the ray lattice");
        coords.push_back(std::move(*c));
    }
    return coords;
}

}  // namespace detail

// Index of the subgroup generated by the cone's (as-given, scaled) ray
// generators inside the saturation of their span in the ray lattice; 1 means
// the cone is smooth. Generators are used exactly as the fan provides them —
// primitivizing them would change the verdict on non-reduced weight tuples.
inline Int cone_multiplicity(const RayMatrix& rays, const LatticeBasis& lattice,
                             const std::vector<int>& cone) {
    const int n = static_cast<int>(rays.rows.size()) - 1;
    require(!cone.empty(), "cone_multiplicity: empty generator set");
    require(static_cast<int>(cone.size()) <= n,
            "cone_multiplicity: a proper cone uses at most N rays");
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "cone_multiplicity: duplicate ray index");
    require(sorted.front() >= 0 && sorted.back() <= n,
            "cone_multiplicity: ray index out of range");
    const SmithData sd = smith_data(detail::cone_coordinates(rays, lattice, sorted));
    require(sd.rank == static_cast<int>(sorted.size()),
            "cone_multiplicity: dependent ray set");
    return sd.invariant_product;
}

// Largest dimension of a torus-orbit stratum sitting inside the singular
// locus: max over non-smooth cones sigma of (N - dim sigma); -1 when every
// cone is smooth.
inline int singular_locus_dimension(const Weights& q) {
    const RayMatrix rays = build_rays(q);
    const LatticeBasis lattice = lattice_basis(rays);
    const int n = static_cast<int>(q.size()) - 1;
    require(n + 1 <= 31, "singular_locus_dimension: too many weights for the subset sweep");
    IntMat coords;
    coords.reserve(q.size());
    for (int i = 0; i <= n; ++i)
        coords.push_back(*lattice_coordinates(lattice.basis, rays.rows[static_cast<std::size_t>(i)]));
    int worst = -1;
    const unsigned full = (1u << (n + 1)) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > n || n - size <= worst) continue;
        IntMat sub;
        sub.reserve(static_cast<std::size_t>(size));
        for (int i = 0; i <= n; ++i)
            if (mask & (1u << i)) sub.push_back(coords[static_cast<std::size_t>(i)]);
        const SmithData sd = smith_data(std::move(sub));
        ensure(sd.rank == size, "singular_locus_dimension: dependent proper ray subset");
        if (sd.invariant_product > 1) worst = std::max(worst, n - size);
    }
    return worst;
}

}  // namespace wfano

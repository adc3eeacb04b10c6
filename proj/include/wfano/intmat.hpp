#pragma once

#include <optional>
#include <utility>

#include "arith.hpp"

namespace wfano {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite echelon form of the row lattice: returns the nonzero rows,
// pivots strictly left-to-right, pivots positive, entries above a pivot reduced
// into [0, pivot). Deterministic for a fixed input.
inline IntMat hermite_basis(IntMat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        ensure(row.size() == cols, "hermite_basis: ragged matrix");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        // gcd-eliminate the column below the pivot
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            while (m[i][c] != 0) {
                const Int quot = m[r][c] / m[i][c];
                for (std::size_t t = 0; t < cols; ++t) m[r][t] -= quot * m[i][t];
                std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] < 0)
            for (auto& e : m[r]) e = -e;
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int quot = m[i][c] / m[r][c];
            if (m[i][c] - quot * m[r][c] < 0) --quot;  // floor division
            if (quot != 0)
                for (std::size_t t = 0; t < cols; ++t) m[i][t] -= quot * m[r][t];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

// Integer coordinates of v in an echelon row basis, or nullopt when v is not
// in the generated lattice.
inline std::optional<IntVec> lattice_coordinates(const IntMat& basis, const IntVec& v) {
    IntVec rem = v;
    IntVec coords;
    coords.reserve(basis.size());
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        ensure(c < row.size(), "lattice_coordinates: zero row in basis");
        ensure(rem.size() == row.size(), "lattice_coordinates: size mismatch");
        if (rem[c] % row[c] != 0) return std::nullopt;
        const Int x = rem[c] / row[c];
        for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= x * row[t];
        coords.push_back(x);
    }
    for (const auto& e : rem)
        if (e != 0) return std::nullopt;
    return coords;
}

struct SmithData {
    int rank = 0;
    Int invariant_product = 1;  // product of the nonzero invariant factors
};

// Elementary reduction to diagonal form; the product of the nonzero diagonal
// entries equals the index of the row lattice inside the saturation of its
// rational span (the invariant-factor product; their individual values are not
// needed here, so the divisibility chain is not normalized).
inline SmithData smith_data(IntMat m) {
    SmithData out;
    if (m.empty() || m[0].empty()) return out;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // locate a nonzero pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r0; i < rows && pi == rows; ++i)
            for (std::size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        std::swap(m[r0], m[pi]);
        for (auto& row : m) std::swap(row[c0], row[pj]);
        // A non-divisible entry triggers a Euclidean exchange that strictly
        // shrinks |pivot| (so only finitely many passes); once the pivot
        // divides its whole row and column, exact eliminations clear both
        // without disturbing the other.
        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = r0 + 1; i < rows && settled; ++i)
                if (m[i][c0] % m[r0][c0] != 0) {
                    const Int quot = m[i][c0] / m[r0][c0];
                    for (std::size_t t = c0; t < cols; ++t) m[i][t] -= quot * m[r0][t];
                    std::swap(m[r0], m[i]);
                    settled = false;
                }
            if (!settled) continue;
            for (std::size_t j = c0 + 1; j < cols && settled; ++j)
                if (m[r0][j] % m[r0][c0] != 0) {
                    const Int quot = m[r0][j] / m[r0][c0];
                    for (std::size_t i = r0; i < rows; ++i) {
                        m[i][j] -= quot * m[i][c0];
                        std::swap(m[i][j], m[i][c0]);
                    }
                    settled = false;
                }
            if (!settled) continue;
            for (std::size_t i = r0 + 1; i < rows; ++i)
                if (m[i][c0] != 0) {
                    const Int quot = m[i][c0] / m[r0][c0];
                    for (std::size_t t = c0; t < cols; ++t) m[i][t] -= quot * m[r0][t];
                }
            for (std::size_t j = c0 + 1; j < cols; ++j)
                if (m[r0][j] != 0) {
                    const Int quot = m[r0][j] / m[r0][c0];
                    // the pivot column is zero below r0 here, so only row r0 changes
                    for (std::size_t i = r0; i < rows; ++i) m[i][j] -= quot * m[i][c0];
                }
        }
        Int piv = m[r0][c0];
        if (piv < 0) piv = -piv;
        out.invariant_product *= piv;
        ++out.rank;
        ++r0;
        ++c0;
    }
    return out;
}

// Fraction-free (Bareiss) determinant of a square matrix.
inline Int determinant(IntMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        ensure(row.size() == n, "determinant: matrix must be square");
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace wfano

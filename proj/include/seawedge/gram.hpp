#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"

namespace seawedge {

using ComplexMatrix = std::vector<std::vector<Complex>>;

inline ComplexMatrix gram_matrix(std::span<const OneParticleVector> rows,
                                 std::span<const OneParticleVector> cols) {
    ComplexMatrix m(rows.size(), std::vector<Complex>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) m[i][k] = inner(rows[i], cols[k]);
    return m;
}

// Literal sum over permutations, sgn(pi) prod_i M[i][pi(i)].  Factorial cost;
// kept as the cross-check route for small matrices.
inline Complex det_permutation_sum(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_permutation_sum: matrix not square");
    if (n == 0) return Complex{1.0, 0.0};
    if (n > 8) throw std::invalid_argument("det_permutation_sum: order too large");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Complex acc{};
    do {
        int sign = 1;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::size_t cycle = 0;
            for (std::size_t k = i; !seen[k]; k = perm[k]) {
                seen[k] = true;
                ++cycle;
            }
            if (cycle % 2 == 0) sign = -sign;
        }
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
        acc += static_cast<double>(sign) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Determinant by partial-pivot elimination.
inline Complex det_lu(ComplexMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_lu: matrix not square");
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(m[r][col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return Complex{};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

// Determinant of the Gram matrix (rows_i, cols_k), anti-linear in the rows.
// Mismatched lengths give 0, mirroring the particle-number delta in the
// generated-vector inner product law.  Small orders go through the
// permutation sum, larger ones through elimination.
inline Complex gram_det(std::span<const OneParticleVector> rows,
                        std::span<const OneParticleVector> cols) {
    if (rows.size() != cols.size()) return Complex{};
    const ComplexMatrix m = gram_matrix(rows, cols);
    if (rows.size() <= 4) return det_permutation_sum(m);
    return det_lu(m);
}

}  // namespace seawedge

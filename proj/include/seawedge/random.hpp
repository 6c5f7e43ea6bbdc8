#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "seawedge/basis_label.hpp"
#include "seawedge/fock.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"
#include "seawedge/wedge.hpp"

namespace seawedge {

// Seed splitting: one master seed plus a stream index give an independent
// sub-seed, so parallel trials stay reproducible regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic random source.  Doubles are extracted from raw engine bits,
// not through the distribution templates, so a seed pins the byte-exact
// stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Inclusive bounds.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool coin(double p = 0.5) { return uniform01() < p; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex{re, im};
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

enum class ModeSupport { positive, negative, both };

// Random finitely supported one-particle vector over the window
// {-window, ..., -1, 1, ..., window}.
inline OneParticleVector random_one_particle(Rng& rng, int window, ModeSupport support,
                                             int max_modes, bool normalize = true) {
    OneParticleVector f;
    const int count = rng.uniform_int(1, max_modes);
    for (int k = 0; k < count; ++k) {
        int mode = rng.uniform_int(1, window);
        switch (support) {
            case ModeSupport::positive: break;
            case ModeSupport::negative: mode = -mode; break;
            case ModeSupport::both:
                if (rng.coin()) mode = -mode;
                break;
        }
        f.add(mode, rng.complex_gaussian());
    }
    f.prune();
    if (f.empty()) f.add(support == ModeSupport::negative ? -1 : 1, Complex{1.0, 0.0});
    if (normalize) f *= Complex{1.0 / norm(f), 0.0};
    return f;
}

inline BasisLabel random_label(Rng& rng, int window) {
    std::vector<int> particles;
    std::vector<int> holes;
    for (int m = 1; m <= window; ++m) {
        if (rng.coin()) particles.push_back(m);
        if (rng.coin()) holes.push_back(-m);
    }
    return BasisLabel(std::move(particles), std::move(holes));
}

inline WedgeVector random_wedge(Rng& rng, int window, int max_terms, bool normalize = true) {
    WedgeVector v;
    const int count = rng.uniform_int(1, max_terms);
    for (int k = 0; k < count; ++k) v.add_term(random_label(rng, window), rng.complex_gaussian());
    v.prune();
    if (v.empty()) v = WedgeVector::vacuum();
    if (normalize) v *= Complex{1.0 / norm(v), 0.0};
    return v;
}

inline FockState random_fock_state(Rng& rng, int window) {
    std::vector<int> particles;
    std::vector<int> antiparticles;
    for (int m = 1; m <= window; ++m) {
        if (rng.coin()) particles.push_back(m);
        if (rng.coin()) antiparticles.push_back(m);
    }
    return FockState(std::move(particles), std::move(antiparticles));
}

inline FockVector random_fock(Rng& rng, int window, int max_terms, bool normalize = true) {
    FockVector v;
    const int count = rng.uniform_int(1, max_terms);
    for (int k = 0; k < count; ++k) v.add_term(random_fock_state(rng, window), rng.complex_gaussian());
    v.prune();
    if (v.empty()) v = FockVector::vacuum();
    if (normalize) v *= Complex{1.0 / norm(v), 0.0};
    return v;
}

// Haar-like random unitary: complex Gaussian columns, modified Gram-Schmidt.
inline std::vector<std::vector<Complex>> random_unitary(Rng& rng, int n) {
    std::vector<std::vector<Complex>> cols(static_cast<std::size_t>(n),
                                           std::vector<Complex>(static_cast<std::size_t>(n)));
    for (auto& col : cols)
        for (auto& entry : col) entry = rng.complex_gaussian();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex overlap{};
            for (std::size_t r = 0; r < cols.size(); ++r)
                overlap += std::conj(cols[prev][r]) * cols[c][r];
            for (std::size_t r = 0; r < cols.size(); ++r) cols[c][r] -= overlap * cols[prev][r];
        }
        double len = 0.0;
        for (const auto& entry : cols[c]) len += std::norm(entry);
        len = std::sqrt(len);
        for (auto& entry : cols[c]) entry /= len;
    }
    // Return in matrix(row, col) layout: U[r][c] = component r of column c.
    std::vector<std::vector<Complex>> u(static_cast<std::size_t>(n),
                                        std::vector<Complex>(static_cast<std::size_t>(n)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols.size(); ++r) u[r][c] = cols[c][r];
    return u;
}

}  // namespace seawedge

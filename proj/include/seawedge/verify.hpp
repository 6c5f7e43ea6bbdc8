#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "seawedge/gram.hpp"
#include "seawedge/parallel.hpp"
#include "seawedge/random.hpp"
#include "seawedge/types.hpp"
#include "seawedge/wedge.hpp"

namespace seawedge {

// Exact anticommutator of two single-mode operators on one basis label,
// accumulated with integer coefficients.  kind: false = annihilation
// (interior), true = creation (exterior).
inline std::map<BasisLabel, long long> mode_anticommutator(bool first_creates, int i,
                                                           bool second_creates, int j,
                                                           const BasisLabel& label) {
    std::map<BasisLabel, long long> acc;
    auto apply = [](bool creates, int mode, const BasisLabel& l) {
        return creates ? exterior(mode, l) : interior(mode, l);
    };
    auto chain = [&](bool outer_creates, int outer, bool inner_creates, int inner) {
        if (auto r1 = apply(inner_creates, inner, label))
            if (auto r2 = apply(outer_creates, outer, r1->label)) {
                const long long sign = static_cast<long long>(r1->sign) * r2->sign;
                acc[r2->label] += sign;
            }
    };
    chain(first_creates, i, second_creates, j);
    chain(second_creates, j, first_creates, i);
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0)
            it = acc.erase(it);
        else
            ++it;
    }
    return acc;
}

// True when all three single-mode relations hold exactly on `label` for the
// pair (i, j): {psi_i, psi*_j} = delta_ij, {psi_i, psi_j} = 0,
// {psi*_i, psi*_j} = 0.
inline bool car_exact_on_label(int i, int j, const BasisLabel& label) {
    const auto mixed = mode_anticommutator(false, i, true, j, label);
    if (i == j) {
        if (mixed.size() != 1) return false;
        const auto it = mixed.find(label);
        if (it == mixed.end() || it->second != 1) return false;
    } else if (!mixed.empty()) {
        return false;
    }
    if (!mode_anticommutator(false, i, false, j, label).empty()) return false;
    if (!mode_anticommutator(true, i, true, j, label).empty()) return false;
    return true;
}

struct CarReport {
    std::uint64_t seed = 0;
    int window = 0;
    int trials = 0;
    double tolerance = 0.0;
    long long exact_violations = 0;
    double max_deviation = 0.0;
    bool pass = true;
};

// Anticommutation suite: per trial, one random label checked exactly against
// every mode pair in the window, plus smeared identities (anticommutator,
// norm identity, boundedness, adjointness, vacuum annihilation) on random
// vectors.
inline CarReport car_suite(std::uint64_t seed, int window, int trials, double tolerance = 1e-12) {
    if (window < 1) throw std::invalid_argument("car_suite: window must be >= 1");
    if (trials < 0) throw std::invalid_argument("car_suite: trials must be >= 0");
    CarReport report;
    report.seed = seed;
    report.window = window;
    report.trials = trials;
    report.tolerance = tolerance;
    if (trials == 0) return report;

    std::vector<long long> violations(static_cast<std::size_t>(trials), 0);
    std::vector<double> deviations(static_cast<std::size_t>(trials), 0.0);

    auto modes_of = [](int k) {
        std::vector<int> modes;
        for (int m = 1; m <= k; ++m) {
            modes.push_back(m);
            modes.push_back(-m);
        }
        return modes;
    };
    const std::vector<int> modes = modes_of(window);

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
        Rng rng(mix_seed(seed, trial));
        long long bad = 0;
        double dev = 0.0;

        const BasisLabel label = random_label(rng, window);
        for (int i : modes)
            for (int j : modes)
                if (!car_exact_on_label(i, j, label)) ++bad;

        const auto f1 = random_one_particle(rng, window, ModeSupport::both, window, true);
        const auto f2 = random_one_particle(rng, window, ModeSupport::both, window, true);
        const auto v = random_wedge(rng, window, 6, true);
        const auto w = random_wedge(rng, window, 6, true);

        // {psi(f1), psi_star(f2)} v = (f1, f2) v
        WedgeVector anti = psi(f1, psi_star(f2, v)) + psi_star(f2, psi(f1, v));
        anti -= inner(f1, f2) * v;
        dev = std::max(dev, norm(anti));

        // ||psi_star(f) v||^2 + ||psi(f) v||^2 = ||f||^2 ||v||^2
        const double lhs = norm_sq(psi_star(f1, v)) + norm_sq(psi(f1, v));
        dev = std::max(dev, std::abs(lhs - norm_sq(f1) * norm_sq(v)));

        // boundedness
        dev = std::max(dev, norm(psi(f1, v)) - norm(f1) * norm(v));
        dev = std::max(dev, norm(psi_star(f1, v)) - norm(f1) * norm(v));

        // adjointness
        dev = std::max(dev, std::abs(inner(psi_star(f1, v), w) - inner(v, psi(f1, w))));

        // vacuum structure, exact
        const auto h = random_one_particle(rng, window, ModeSupport::positive, window, false);
        const auto g = random_one_particle(rng, window, ModeSupport::negative, window, false);
        if (!psi(h, WedgeVector::vacuum()).empty()) ++bad;
        if (!psi_star(g, WedgeVector::vacuum()).empty()) ++bad;

        violations[trial] = bad;
        deviations[trial] = dev;
    });

    for (std::size_t trial = 0; trial < static_cast<std::size_t>(trials); ++trial) {
        report.exact_violations += violations[trial];
        report.max_deviation = std::max(report.max_deviation, deviations[trial]);
    }
    report.pass = report.exact_violations == 0 && report.max_deviation < tolerance;
    return report;
}

struct RotationReport {
    std::uint64_t seed = 0;
    int window = 0;
    int rotations = 0;
    double tolerance = 0.0;
    double max_deviation = 0.0;
    bool pass = true;
};

// Rewrites f in the rotated basis e'_i = sum_k U[k][i] e_k (block unitaries
// on the positive and negative windows separately): c'_i = sum_k
// conj(U[k][i]) c_k.
inline OneParticleVector rotate_coefficients(const OneParticleVector& f,
                                             const std::vector<std::vector<Complex>>& u_pos,
                                             const std::vector<std::vector<Complex>>& u_neg,
                                             int window) {
    OneParticleVector out;
    for (int i = 1; i <= window; ++i) {
        Complex pos{};
        Complex neg{};
        for (int k = 1; k <= window; ++k) {
            const auto row = static_cast<std::size_t>(k - 1);
            const auto col = static_cast<std::size_t>(i - 1);
            pos += std::conj(u_pos[row][col]) * f.coeff(k);
            neg += std::conj(u_neg[row][col]) * f.coeff(-k);
        }
        out.add(i, pos);
        out.add(-i, neg);
    }
    return out.prune();
}

// Basis independence: the Gram matrix of a family of generated vectors is
// unchanged when every smearing vector is rewritten in a rotated
// splitting-compatible basis and the states are rebuilt there.
inline RotationReport basis_independence_suite(std::uint64_t seed, int window, int rotations,
                                               double tolerance = 1e-10) {
    if (window < 1) throw std::invalid_argument("basis_independence_suite: window must be >= 1");
    if (rotations < 0) throw std::invalid_argument("basis_independence_suite: rotations must be >= 0");
    RotationReport report;
    report.seed = seed;
    report.window = window;
    report.rotations = rotations;
    report.tolerance = tolerance;
    if (rotations == 0) return report;

    std::vector<double> deviations(static_cast<std::size_t>(rotations), 0.0);

    parallel_for(static_cast<std::size_t>(rotations), [&](std::size_t rotation) {
        Rng rng(mix_seed(seed, rotation));
        const auto u_pos = random_unitary(rng, window);
        const auto u_neg = random_unitary(rng, window);

        constexpr int kFamily = 4;
        std::vector<WedgeVector> original;
        std::vector<WedgeVector> rotated;
        for (int s = 0; s < kFamily; ++s) {
            const int n = rng.uniform_int(0, 3);
            const int m = rng.uniform_int(0, 3);
            std::vector<OneParticleVector> hs;
            std::vector<OneParticleVector> gs;
            for (int k = 0; k < n; ++k)
                hs.push_back(random_one_particle(rng, window, ModeSupport::positive, 3, true));
            for (int k = 0; k < m; ++k)
                gs.push_back(random_one_particle(rng, window, ModeSupport::negative, 3, true));
            original.push_back(generated_vector(hs, gs));

            std::vector<OneParticleVector> hs_rot;
            std::vector<OneParticleVector> gs_rot;
            for (const auto& h : hs)
                hs_rot.push_back(rotate_coefficients(h, u_pos, u_neg, window).positive_part());
            for (const auto& g : gs)
                gs_rot.push_back(rotate_coefficients(g, u_pos, u_neg, window).negative_part());
            rotated.push_back(generated_vector(hs_rot, gs_rot));
        }

        double dev = 0.0;
        for (int i = 0; i < kFamily; ++i)
            for (int k = 0; k < kFamily; ++k) {
                const Complex lhs = inner(original[static_cast<std::size_t>(i)],
                                          original[static_cast<std::size_t>(k)]);
                const Complex rhs = inner(rotated[static_cast<std::size_t>(i)],
                                          rotated[static_cast<std::size_t>(k)]);
                dev = std::max(dev, std::abs(lhs - rhs));
            }
        deviations[rotation] = dev;
    });

    for (const double dev : deviations) report.max_deviation = std::max(report.max_deviation, dev);
    report.pass = report.max_deviation < tolerance;
    return report;
}

}  // namespace seawedge

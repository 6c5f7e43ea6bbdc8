#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seawedge/basis_label.hpp"
#include "seawedge/dirac.hpp"
#include "seawedge/fock.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/parallel.hpp"
#include "seawedge/random.hpp"
#include "seawedge/types.hpp"
#include "seawedge/wedge.hpp"

namespace seawedge {

// A basis label written as a creation string over vacuum:
// psi_star(e_p1)...psi_star(e_pn) psi(e_v1)...psi(e_vm) applied to the sea
// vacuum equals sign * e_label.  Mode lists are descending; the sign is
// obtained by replaying the string through the wedge operators, never from a
// closed formula.
struct CanonicalForm {
    int sign = 1;
    std::vector<int> particles;  // descending, > 0
    std::vector<int> holes;      // descending, < 0
};

inline CanonicalForm canonicalize(const BasisLabel& label) {
    CanonicalForm form;
    form.particles.assign(label.particles().rbegin(), label.particles().rend());
    form.holes.assign(label.holes().rbegin(), label.holes().rend());

    BasisLabel current = BasisLabel::vacuum();
    int sign = 1;
    // Rightmost operator first: replay psi(e_vm) ... psi(e_v1), then the
    // creations psi_star(e_pn) ... psi_star(e_p1).
    for (auto it = form.holes.rbegin(); it != form.holes.rend(); ++it) {
        auto r = interior(*it, current);
        if (!r) throw std::logic_error("canonicalize: replay annihilated the state");
        sign *= r->sign;
        current = std::move(r->label);
    }
    for (auto it = form.particles.rbegin(); it != form.particles.rend(); ++it) {
        auto r = exterior(*it, current);
        if (!r) throw std::logic_error("canonicalize: replay annihilated the state");
        sign *= r->sign;
        current = std::move(r->label);
    }
    if (current != label) throw std::logic_error("canonicalize: replay missed the label");
    form.sign = sign;
    return form;
}

// The unitary intertwiner onto the two-factor Fock space: each label is
// rewritten as its canonical creation string over the sea vacuum and the same
// string of a*, b* operators is evaluated over the Fock vacuum, with
// b*(C e_v) = b*(e_{-v}) through the mode pairing.
inline FockVector map_to_fock(const WedgeVector& v) {
    FockVector out;
    for (const auto& [label, amp] : v.terms()) {
        const CanonicalForm form = canonicalize(label);
        int sign = form.sign;
        FockState state = FockState::vacuum();
        for (auto it = form.holes.rbegin(); it != form.holes.rend(); ++it) {
            sign *= state.particle_parity();  // the (-1)^N twist of b_star
            auto r = factor_create(state, Factor::antiparticle, -*it);
            if (!r) throw std::logic_error("map_to_fock: duplicate antiparticle mode");
            sign *= r->sign;
            state = std::move(r->state);
        }
        for (auto it = form.particles.rbegin(); it != form.particles.rend(); ++it) {
            auto r = factor_create(state, Factor::particle, *it);
            if (!r) throw std::logic_error("map_to_fock: duplicate particle mode");
            sign *= r->sign;
            state = std::move(r->state);
        }
        out.add_term(state, static_cast<double>(sign) * amp);
    }
    return out.prune();
}

struct DifferentialReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int window = 0;
    double max_inner_dev = 0.0;
    double max_field_dev = 0.0;
    bool pass = true;
};

// Deterministic synthetic grid with at least `window` positive modes:
// momentum 0 plus +/- pairs, mass 1.
inline MomentumGrid make_verification_grid(int window) {
    if (window < 1) throw std::invalid_argument("make_verification_grid: window must be >= 1");
    std::vector<Vec3> momenta{Vec3{0.0, 0.0, 0.0}};
    int pairs = 0;
    while (2 * static_cast<int>(momenta.size()) < window) {
        ++pairs;
        const double x = 0.3 * pairs;
        const Vec3 q{x, -0.5 * x, 0.2 + 0.1 * x};
        momenta.push_back(q);
        momenta.push_back(negated(q));
    }
    return MomentumGrid(1.0, std::move(momenta));
}

namespace detail {

struct OperatorToken {
    int kind;  // 0: a_star, 1: b_star, 2: a, 3: b
    OneParticleVector smearing;
};

inline std::vector<OperatorToken> random_operator_string(Rng& rng, int window, bool creation_only) {
    const int length = rng.uniform_int(creation_only ? 1 : 0, 3);
    std::vector<OperatorToken> ops;
    ops.reserve(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) {
        const int kind = creation_only ? rng.uniform_int(0, 1) : rng.uniform_int(0, 3);
        ops.push_back(
            {kind, random_one_particle(rng, window, ModeSupport::positive, 3, /*normalize=*/true)});
    }
    return ops;
}

inline WedgeVector apply_string(const std::vector<OperatorToken>& ops, WedgeVector v) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
            case 0: v = a_star(it->smearing, v); break;
            case 1: v = b_star(it->smearing, v); break;
            case 2: v = a(it->smearing, v); break;
            default: v = b(it->smearing, v); break;
        }
    }
    return v;
}

inline FockVector apply_string(const std::vector<OperatorToken>& ops, FockVector v) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
            case 0: v = a_star(it->smearing, v); break;
            case 1: v = b_star(it->smearing, v); break;
            case 2: v = a(it->smearing, v); break;
            default: v = b(it->smearing, v); break;
        }
    }
    return v;
}

}  // namespace detail

// Differential certification of the two quantizations: random operator
// strings are applied over both vacua, then every pairwise inner product and
// field matrix element is compared across the representations.
inline DifferentialReport differential_suite(std::uint64_t seed, int trials, int window,
                                             double tolerance = 1e-10) {
    if (trials < 0) throw std::invalid_argument("differential_suite: trials must be >= 0");
    if (window < 1 || window > 8)
        throw std::invalid_argument("differential_suite: window must be in [1, 8]");

    DifferentialReport report;
    report.seed = seed;
    report.trials = trials;
    report.window = window;
    if (trials == 0) return report;

    const ModeBasis basis = build_mode_basis(make_verification_grid(window));

    std::vector<double> inner_dev(static_cast<std::size_t>(trials), 0.0);
    std::vector<double> field_dev(static_cast<std::size_t>(trials), 0.0);

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
        Rng rng(mix_seed(seed, trial));

        // Two independent creation strings, their one-more-creation towers
        // (so the field operator couples adjacent family members with O(1)
        // matrix elements), and one unconstrained string.
        std::vector<WedgeVector> sea_states;
        std::vector<FockVector> fock_states;
        for (int s = 0; s < 2; ++s) {
            const auto ops = detail::random_operator_string(rng, window, /*creation_only=*/true);
            sea_states.push_back(detail::apply_string(ops, WedgeVector::vacuum()));
            fock_states.push_back(detail::apply_string(ops, FockVector::vacuum()));
        }
        const auto h_tower =
            random_one_particle(rng, window, ModeSupport::positive, 3, /*normalize=*/true);
        const auto g_tower =
            random_one_particle(rng, window, ModeSupport::positive, 3, /*normalize=*/true);
        sea_states.push_back(a_star(h_tower, sea_states[0]));
        fock_states.push_back(a_star(h_tower, fock_states[0]));
        sea_states.push_back(b_star(g_tower, sea_states[1]));
        fock_states.push_back(b_star(g_tower, fock_states[1]));
        {
            const auto ops = detail::random_operator_string(rng, window, /*creation_only=*/false);
            sea_states.push_back(detail::apply_string(ops, WedgeVector::vacuum()));
            fock_states.push_back(detail::apply_string(ops, FockVector::vacuum()));
        }
        const int kStates = static_cast<int>(sea_states.size());

        double worst_inner = 0.0;
        for (int i = 0; i < kStates; ++i)
            for (int k = 0; k < kStates; ++k) {
                const Complex lhs = inner(sea_states[static_cast<std::size_t>(i)],
                                          sea_states[static_cast<std::size_t>(k)]);
                const Complex rhs = inner(fock_states[static_cast<std::size_t>(i)],
                                          fock_states[static_cast<std::size_t>(k)]);
                worst_inner = std::max(worst_inner, std::abs(lhs - rhs));
            }
        inner_dev[trial] = worst_inner;

        double worst_field = 0.0;
        for (int rep = 0; rep < 2; ++rep) {
            const OneParticleVector f =
                random_one_particle(rng, window, ModeSupport::both, 4, /*normalize=*/true);
            const double t = rng.uniform(-2.0, 2.0);
            const OneParticleVector f_t = evolve(f, t, basis);
            for (int i = 0; i < kStates; ++i)
                for (int k = 0; k < kStates; ++k) {
                    const Complex lhs = inner(sea_states[static_cast<std::size_t>(i)],
                                              psi(f_t, sea_states[static_cast<std::size_t>(k)]));
                    const Complex rhs =
                        inner(fock_states[static_cast<std::size_t>(i)],
                              fock_field(t, f, fock_states[static_cast<std::size_t>(k)], basis));
                    worst_field = std::max(worst_field, std::abs(lhs - rhs));
                }
        }
        field_dev[trial] = worst_field;
    });

    for (int trial = 0; trial < trials; ++trial) {
        report.max_inner_dev = std::max(report.max_inner_dev, inner_dev[static_cast<std::size_t>(trial)]);
        report.max_field_dev = std::max(report.max_field_dev, field_dev[static_cast<std::size_t>(trial)]);
    }
    report.pass = report.max_inner_dev < tolerance && report.max_field_dev < tolerance;
    return report;
}

}  // namespace seawedge

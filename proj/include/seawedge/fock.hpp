#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seawedge/dirac.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"

namespace seawedge {

// Occupation state of the two-factor Fock space: one finite set of positive
// modes per factor.
class FockState {
public:
    FockState() = default;

    FockState(std::vector<int> particles, std::vector<int> antiparticles)
        : particles_(std::move(particles)), antiparticles_(std::move(antiparticles)) {
        normalize_and_validate(particles_);
        normalize_and_validate(antiparticles_);
    }

    static FockState vacuum() { return FockState{}; }

    const std::vector<int>& particles() const noexcept { return particles_; }
    const std::vector<int>& antiparticles() const noexcept { return antiparticles_; }
    bool is_vacuum() const noexcept { return particles_.empty() && antiparticles_.empty(); }

    // (-1)^N on the particle factor.
    int particle_parity() const noexcept { return particles_.size() % 2 == 0 ? +1 : -1; }

    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;

private:
    static void normalize_and_validate(std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] <= 0) throw std::invalid_argument("FockState: mode indices must be positive");
            if (k > 0 && v[k] == v[k - 1]) throw std::invalid_argument("FockState: duplicate mode");
        }
    }

    std::vector<int> particles_;
    std::vector<int> antiparticles_;
};

class FockVector {
public:
    using TermMap = std::map<FockState, Complex>;

    FockVector() = default;

    static FockVector vacuum() { return basis_state(FockState::vacuum()); }

    static FockVector basis_state(FockState state, Complex amplitude = Complex{1.0, 0.0}) {
        FockVector v;
        v.terms_.emplace(std::move(state), amplitude);
        return v;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    Complex amplitude(const FockState& state) const {
        auto it = terms_.find(state);
        return it == terms_.end() ? Complex{} : it->second;
    }

    FockVector& add_term(const FockState& state, Complex amplitude) {
        terms_[state] += amplitude;
        return *this;
    }

    FockVector& operator+=(const FockVector& other) {
        for (const auto& [state, c] : other.terms_) terms_[state] += c;
        return prune();
    }
    FockVector& operator-=(const FockVector& other) {
        for (const auto& [state, c] : other.terms_) terms_[state] -= c;
        return prune();
    }
    FockVector& operator*=(Complex scale) {
        for (auto& [state, c] : terms_) c *= scale;
        return prune();
    }

    friend FockVector operator+(FockVector lhs, const FockVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend FockVector operator-(FockVector lhs, const FockVector& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend FockVector operator*(Complex scale, FockVector v) {
        v *= scale;
        return v;
    }

    FockVector& prune(double threshold = kPruneThreshold) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (negligible(it->second, threshold))
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    TermMap terms_;
};

inline Complex inner(const FockVector& v, const FockVector& w) {
    const auto& a = v.terms();
    const auto& b = w.terms();
    Complex acc{};
    if (a.size() <= b.size()) {
        for (const auto& [state, c] : a) {
            auto it = b.find(state);
            if (it != b.end()) acc += std::conj(c) * it->second;
        }
    } else {
        for (const auto& [state, c] : b) {
            auto it = a.find(state);
            if (it != a.end()) acc += std::conj(it->second) * c;
        }
    }
    return acc;
}

inline double norm_sq(const FockVector& v) {
    double acc = 0.0;
    for (const auto& [state, c] : v.terms()) acc += std::norm(c);
    return acc;
}

inline double norm(const FockVector& v) { return std::sqrt(norm_sq(v)); }

enum class Factor { particle, antiparticle };

struct SignedFockState {
    int sign;
    FockState state;
};

namespace detail {

inline int occupied_below(const std::vector<int>& occ, int mode) {
    return static_cast<int>(std::lower_bound(occ.begin(), occ.end(), mode) - occ.begin());
}

inline const std::vector<int>& occ_of(const FockState& s, Factor f) {
    return f == Factor::particle ? s.particles() : s.antiparticles();
}

inline FockState rebuild(const FockState& s, Factor f, std::vector<int> occ) {
    if (f == Factor::particle) return FockState(std::move(occ), s.antiparticles());
    return FockState(s.particles(), std::move(occ));
}

}  // namespace detail

// Creation of a single mode on one factor, with the standard alternating
// sign: (-1)^(number of occupied modes preceding `mode` in the ascending
// order).  No cross-factor twist here.
inline std::optional<SignedFockState> factor_create(const FockState& s, Factor f, int mode) {
    if (mode <= 0) throw std::invalid_argument("factor_create: mode index must be positive");
    const auto& occ = detail::occ_of(s, f);
    if (std::binary_search(occ.begin(), occ.end(), mode)) return std::nullopt;
    const int below = detail::occupied_below(occ, mode);
    std::vector<int> next = occ;
    next.insert(std::lower_bound(next.begin(), next.end(), mode), mode);
    return SignedFockState{below % 2 == 0 ? +1 : -1, detail::rebuild(s, f, std::move(next))};
}

inline std::optional<SignedFockState> factor_annihilate(const FockState& s, Factor f, int mode) {
    if (mode <= 0) throw std::invalid_argument("factor_annihilate: mode index must be positive");
    const auto& occ = detail::occ_of(s, f);
    if (!std::binary_search(occ.begin(), occ.end(), mode)) return std::nullopt;
    const int below = detail::occupied_below(occ, mode);
    std::vector<int> next = occ;
    next.erase(std::find(next.begin(), next.end(), mode));
    return SignedFockState{below % 2 == 0 ? +1 : -1, detail::rebuild(s, f, std::move(next))};
}

// Smeared annihilation on one factor; anti-linear in h.
inline FockVector alpha(const OneParticleVector& h, const FockVector& v, Factor f) {
    detail::require_positive_support(h, "alpha");
    FockVector out;
    for (const auto& [mode, c] : h.coeffs()) {
        const Complex weight = std::conj(c);
        for (const auto& [state, amp] : v.terms())
            if (auto r = factor_annihilate(state, f, mode))
                out.add_term(r->state, weight * static_cast<double>(r->sign) * amp);
    }
    return out.prune();
}

// Smeared creation on one factor; linear in h.
inline FockVector alpha_star(const OneParticleVector& h, const FockVector& v, Factor f) {
    detail::require_positive_support(h, "alpha_star");
    FockVector out;
    for (const auto& [mode, c] : h.coeffs()) {
        for (const auto& [state, amp] : v.terms())
            if (auto r = factor_create(state, f, mode))
                out.add_term(r->state, c * static_cast<double>(r->sign) * amp);
    }
    return out.prune();
}

namespace detail {

inline FockVector particle_twist(const FockVector& v) {
    FockVector out;
    for (const auto& [state, amp] : v.terms())
        out.add_term(state, static_cast<double>(state.particle_parity()) * amp);
    return out;
}

}  // namespace detail

// Particle and antiparticle operators on the product space.  The particle
// operators act on the first factor alone; the antiparticle ones carry the
// (-1)^N twist on the particle factor, which makes every mixed anticommutator
// vanish.
inline FockVector a(const OneParticleVector& h, const FockVector& v) {
    return alpha(h, v, Factor::particle);
}

inline FockVector a_star(const OneParticleVector& h, const FockVector& v) {
    return alpha_star(h, v, Factor::particle);
}

inline FockVector b(const OneParticleVector& h, const FockVector& v) {
    return alpha(h, detail::particle_twist(v), Factor::antiparticle);
}

inline FockVector b_star(const OneParticleVector& h, const FockVector& v) {
    return alpha_star(h, detail::particle_twist(v), Factor::antiparticle);
}

// Total energy of an occupation state: sum of omega over both factors.
// Nonnegative by construction.
inline double state_energy(const FockState& s, const ModeBasis& basis) {
    double e = 0.0;
    for (int mode : s.particles()) e += basis.omega(mode);
    for (int mode : s.antiparticles()) e += basis.omega(mode);
    return e;
}

// Multi-particle Hamiltonian: diagonal on occupation states.
inline FockVector hamiltonian_h_prime(const FockVector& v, const ModeBasis& basis) {
    FockVector out;
    for (const auto& [state, amp] : v.terms()) out.add_term(state, state_energy(state, basis) * amp);
    return out.prune();
}

// e^{i H' t}: diagonal phases e^{i E t}.
inline FockVector evolve(const FockVector& v, double t, const ModeBasis& basis) {
    FockVector out;
    for (const auto& [state, amp] : v.terms())
        out.add_term(state, std::polar(1.0, state_energy(state, basis) * t) * amp);
    return out;
}

namespace detail {

inline OneParticleVector positive_phase(const OneParticleVector& h, double t, const ModeBasis& basis) {
    OneParticleVector out;
    for (const auto& [mode, c] : h.coeffs()) out.add(mode, std::polar(1.0, basis.omega(mode) * t) * c);
    return out;
}

}  // namespace detail

// Fock-side field operator a(e^{i omega t} P+ f) + b*(e^{i omega t} C P- f);
// anti-linear in f.
inline FockVector fock_field(double t, const OneParticleVector& f, const FockVector& v,
                             const ModeBasis& basis) {
    for (const auto& [mode, c] : f.coeffs())
        if (!basis.has(mode)) throw std::out_of_range("fock_field: unknown mode index");
    const OneParticleVector h_arg = detail::positive_phase(f.positive_part(), t, basis);
    const OneParticleVector b_arg =
        detail::positive_phase(charge_conjugate(f.negative_part()), t, basis);
    FockVector out = a(h_arg, v);
    out += b_star(b_arg, v);
    return out.prune();
}

// Adjoint field: a*(e^{i omega t} P+ f) + b(e^{i omega t} C P- f); linear in f.
inline FockVector fock_field_star(double t, const OneParticleVector& f, const FockVector& v,
                                  const ModeBasis& basis) {
    for (const auto& [mode, c] : f.coeffs())
        if (!basis.has(mode)) throw std::out_of_range("fock_field_star: unknown mode index");
    const OneParticleVector h_arg = detail::positive_phase(f.positive_part(), t, basis);
    const OneParticleVector b_arg =
        detail::positive_phase(charge_conjugate(f.negative_part()), t, basis);
    FockVector out = a_star(h_arg, v);
    out += b(b_arg, v);
    return out.prune();
}

}  // namespace seawedge

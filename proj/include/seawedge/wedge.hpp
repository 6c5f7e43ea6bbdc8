#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "seawedge/basis_label.hpp"
#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"

namespace seawedge {

// Element of the semi-infinite wedge space: a finite linear combination of
// basis labels.  The label basis is orthonormal.
class WedgeVector {
public:
    using TermMap = std::map<BasisLabel, Complex>;

    WedgeVector() = default;

    static WedgeVector vacuum() { return basis_state(BasisLabel::vacuum()); }

    static WedgeVector basis_state(BasisLabel label, Complex amplitude = Complex{1.0, 0.0}) {
        WedgeVector v;
        v.terms_.emplace(std::move(label), amplitude);
        return v;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    Complex amplitude(const BasisLabel& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Complex{} : it->second;
    }

    WedgeVector& add_term(const BasisLabel& label, Complex amplitude) {
        terms_[label] += amplitude;
        return *this;
    }

    WedgeVector& operator+=(const WedgeVector& other) {
        for (const auto& [label, c] : other.terms_) terms_[label] += c;
        return prune();
    }
    WedgeVector& operator-=(const WedgeVector& other) {
        for (const auto& [label, c] : other.terms_) terms_[label] -= c;
        return prune();
    }
    WedgeVector& operator*=(Complex scale) {
        for (auto& [label, c] : terms_) c *= scale;
        return prune();
    }

    friend WedgeVector operator+(WedgeVector lhs, const WedgeVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend WedgeVector operator-(WedgeVector lhs, const WedgeVector& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend WedgeVector operator*(Complex scale, WedgeVector v) {
        v *= scale;
        return v;
    }

    WedgeVector& prune(double threshold = kPruneThreshold) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (negligible(it->second, threshold))
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend bool operator==(const WedgeVector&, const WedgeVector&) = default;

private:
    TermMap terms_;
};

inline Complex inner(const WedgeVector& v, const WedgeVector& w) {
    const auto& a = v.terms();
    const auto& b = w.terms();
    Complex acc{};
    if (a.size() <= b.size()) {
        for (const auto& [label, c] : a) {
            auto it = b.find(label);
            if (it != b.end()) acc += std::conj(c) * it->second;
        }
    } else {
        for (const auto& [label, c] : b) {
            auto it = a.find(label);
            if (it != a.end()) acc += std::conj(it->second) * c;
        }
    }
    return acc;
}

inline double norm_sq(const WedgeVector& v) {
    double acc = 0.0;
    for (const auto& [label, c] : v.terms()) acc += std::norm(c);
    return acc;
}

inline double norm(const WedgeVector& v) { return std::sqrt(norm_sq(v)); }

// Result of a single-mode operator on a basis label: an exact sign and the
// new label.
struct SignedLabel {
    int sign;
    BasisLabel label;
};

// Interior multiplication by mode j: removes j from the decoded sequence with
// sign (-1)^(s+1), where s is the position of j.  Returns nullopt when j does
// not occur (the operator annihilates the state).
inline std::optional<SignedLabel> interior(int j, const BasisLabel& label) {
    const auto s = position_of(label, j);
    if (!s) return std::nullopt;
    const int sign = (*s % 2 == 1) ? +1 : -1;  // (-1)^(s+1)
    std::vector<int> particles = label.particles();
    std::vector<int> holes = label.holes();
    if (j > 0)
        particles.erase(std::find(particles.begin(), particles.end(), j));
    else
        holes.insert(std::lower_bound(holes.begin(), holes.end(), j), j);
    return SignedLabel{sign, BasisLabel(std::move(particles), std::move(holes))};
}

// Exterior multiplication by mode j: inserts j into the decoded sequence with
// sign (-1)^s, where s counts the entries strictly greater than j.  Returns
// nullopt when j already occurs.
inline std::optional<SignedLabel> exterior(int j, const BasisLabel& label) {
    if (j == 0) throw std::invalid_argument("exterior: mode index must be nonzero");
    int s = 0;
    std::vector<int> particles = label.particles();
    std::vector<int> holes = label.holes();
    if (j > 0) {
        if (label.has_particle(j)) return std::nullopt;
        s = detail::count_greater(particles, j);
        particles.insert(std::lower_bound(particles.begin(), particles.end(), j), j);
    } else {
        if (!label.has_hole(j)) return std::nullopt;
        s = static_cast<int>(particles.size()) + (-j - 1) - detail::count_greater(holes, j);
        holes.erase(std::find(holes.begin(), holes.end(), j));
    }
    const int sign = (s % 2 == 0) ? +1 : -1;
    return SignedLabel{sign, BasisLabel(std::move(particles), std::move(holes))};
}

// Single-mode field operators applied term by term.
inline WedgeVector psi_mode(int j, const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [label, c] : v.terms())
        if (auto r = interior(j, label)) out.add_term(r->label, static_cast<double>(r->sign) * c);
    return out.prune();
}

inline WedgeVector psi_star_mode(int j, const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [label, c] : v.terms())
        if (auto r = exterior(j, label)) out.add_term(r->label, static_cast<double>(r->sign) * c);
    return out.prune();
}

// Smeared annihilation field psi(f) = sum_i (f, e_i) psi(e_i); anti-linear in
// f.  Exact because f is finitely supported.
inline WedgeVector psi(const OneParticleVector& f, const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [mode, c] : f.coeffs()) {
        const Complex weight = std::conj(c);
        for (const auto& [label, amp] : v.terms())
            if (auto r = interior(mode, label))
                out.add_term(r->label, weight * static_cast<double>(r->sign) * amp);
    }
    return out.prune();
}

// Smeared creation field psi_star(f) = sum_i (e_i, f) psi_star(e_i); linear in
// f and adjoint to psi(f).
inline WedgeVector psi_star(const OneParticleVector& f, const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [mode, c] : f.coeffs()) {
        for (const auto& [label, amp] : v.terms())
            if (auto r = exterior(mode, label))
                out.add_term(r->label, c * static_cast<double>(r->sign) * amp);
    }
    return out.prune();
}

// Hole-theory dictionary.  Particle operators act on the positive-energy
// modes directly; antiparticle operators reach the sea through the pairing
// C e_i = e_{-i}.  All four require h supported on positive modes.
inline WedgeVector a(const OneParticleVector& h, const WedgeVector& v) {
    detail::require_positive_support(h, "a");
    return psi(h, v);
}

inline WedgeVector a_star(const OneParticleVector& h, const WedgeVector& v) {
    detail::require_positive_support(h, "a_star");
    return psi_star(h, v);
}

inline WedgeVector b(const OneParticleVector& h, const WedgeVector& v) {
    detail::require_positive_support(h, "b");
    return psi_star(charge_conjugate(h), v);
}

inline WedgeVector b_star(const OneParticleVector& h, const WedgeVector& v) {
    detail::require_positive_support(h, "b_star");
    return psi(charge_conjugate(h), v);
}

// Product state psi_star(h_1)...psi_star(h_n) psi(g_1)...psi(g_m) applied to
// the sea vacuum, rightmost factor first.
inline WedgeVector generated_vector(std::span<const OneParticleVector> hs,
                                    std::span<const OneParticleVector> gs) {
    for (const auto& h : hs) detail::require_positive_support(h, "generated_vector");
    for (const auto& g : gs) detail::require_negative_support(g, "generated_vector");
    WedgeVector v = WedgeVector::vacuum();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) v = psi(*it, v);
    for (auto it = hs.rbegin(); it != hs.rend(); ++it) v = psi_star(*it, v);
    return v;
}

}  // namespace seawedge

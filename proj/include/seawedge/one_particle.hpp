#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "seawedge/types.hpp"

namespace seawedge {

// A finitely supported one-particle vector f = sum_i c_i e_i over the mode
// index set Z \ {0}.  Positive indices span the positive-energy subspace,
// negative indices the negative-energy one.
class OneParticleVector {
public:
    using CoeffMap = std::map<int, Complex>;

    OneParticleVector() = default;

    static OneParticleVector basis(int mode, Complex amplitude = Complex{1.0, 0.0}) {
        OneParticleVector f;
        f.add(mode, amplitude);
        return f;
    }

    const CoeffMap& coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t support_size() const noexcept { return coeffs_.size(); }

    Complex coeff(int mode) const {
        auto it = coeffs_.find(mode);
        return it == coeffs_.end() ? Complex{} : it->second;
    }

    OneParticleVector& add(int mode, Complex value) {
        if (mode == 0) throw std::invalid_argument("OneParticleVector: mode index must be nonzero");
        coeffs_[mode] += value;
        return *this;
    }

    OneParticleVector& operator+=(const OneParticleVector& other) {
        for (const auto& [mode, c] : other.coeffs_) coeffs_[mode] += c;
        return prune();
    }
    OneParticleVector& operator-=(const OneParticleVector& other) {
        for (const auto& [mode, c] : other.coeffs_) coeffs_[mode] -= c;
        return prune();
    }
    OneParticleVector& operator*=(Complex scale) {
        for (auto& [mode, c] : coeffs_) c *= scale;
        return prune();
    }

    friend OneParticleVector operator+(OneParticleVector lhs, const OneParticleVector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend OneParticleVector operator-(OneParticleVector lhs, const OneParticleVector& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend OneParticleVector operator*(Complex scale, OneParticleVector f) {
        f *= scale;
        return f;
    }

    OneParticleVector positive_part() const { return filtered(+1); }
    OneParticleVector negative_part() const { return filtered(-1); }

    OneParticleVector& prune(double threshold = kPruneThreshold) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (negligible(it->second, threshold))
                it = coeffs_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend bool operator==(const OneParticleVector&, const OneParticleVector&) = default;

private:
    OneParticleVector filtered(int sign) const {
        OneParticleVector out;
        for (const auto& [mode, c] : coeffs_)
            if ((mode > 0) == (sign > 0)) out.coeffs_.emplace(mode, c);
        return out;
    }

    CoeffMap coeffs_;
};

// Inner product, anti-linear in the first argument.
inline Complex inner(const OneParticleVector& f, const OneParticleVector& g) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    Complex acc{};
    if (a.size() <= b.size()) {
        for (const auto& [mode, c] : a) {
            auto it = b.find(mode);
            if (it != b.end()) acc += std::conj(c) * it->second;
        }
    } else {
        for (const auto& [mode, c] : b) {
            auto it = a.find(mode);
            if (it != a.end()) acc += std::conj(it->second) * c;
        }
    }
    return acc;
}

inline double norm_sq(const OneParticleVector& f) {
    double acc = 0.0;
    for (const auto& [mode, c] : f.coeffs()) acc += std::norm(c);
    return acc;
}

inline double norm(const OneParticleVector& f) { return std::sqrt(norm_sq(f)); }

inline bool positive_supported(const OneParticleVector& f) {
    return f.coeffs().empty() || f.coeffs().begin()->first > 0;
}

inline bool negative_supported(const OneParticleVector& f) {
    return f.coeffs().empty() || f.coeffs().rbegin()->first < 0;
}

namespace detail {

inline void require_positive_support(const OneParticleVector& h, const char* who) {
    if (!positive_supported(h))
        throw std::invalid_argument(std::string(who) +
                                    ": smearing vector must be supported on positive modes");
}

inline void require_negative_support(const OneParticleVector& g, const char* who) {
    if (!negative_supported(g))
        throw std::invalid_argument(std::string(who) +
                                    ": smearing vector must be supported on negative modes");
}

}  // namespace detail

// Anti-linear pairing C e_i = e_{-i}: negate every index and conjugate every
// coefficient.  Matches the spinor-level conjugation through any mode basis
// built with the e_{-i} = C e_i constraint.
inline OneParticleVector charge_conjugate(const OneParticleVector& f) {
    OneParticleVector out;
    for (const auto& [mode, c] : f.coeffs()) out.add(-mode, std::conj(c));
    return out;
}

// Keep only the modes with |index| <= cutoff.  Returns the truncation and the
// exact norm of the discarded tail, which bounds the operator-norm error of
// the induced field operators.
inline std::pair<OneParticleVector, double> truncate(const OneParticleVector& f, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("truncate: cutoff must be >= 0");
    OneParticleVector kept;
    double tail_sq = 0.0;
    for (const auto& [mode, c] : f.coeffs()) {
        if (std::abs(mode) <= cutoff)
            kept.add(mode, c);
        else
            tail_sq += std::norm(c);
    }
    return {std::move(kept), std::sqrt(tail_sq)};
}

}  // namespace seawedge

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "seawedge/one_particle.hpp"
#include "seawedge/types.hpp"

namespace seawedge {

using Vec3 = std::array<double, 3>;
using Spinor = std::array<Complex, 4>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 negated(const Vec3& p) { return {-p[0], -p[1], -p[2]}; }

inline Complex inner(const Spinor& u, const Spinor& v) {
    Complex acc{};
    for (int k = 0; k < 4; ++k) acc += std::conj(u[k]) * v[k];
    return acc;
}

inline double norm(const Spinor& u) { return std::sqrt(std::real(inner(u, u))); }

// Dense 4x4 complex matrix, row major.  Just enough linear algebra for the
// momentum-space Dirac operator; nothing here is performance critical.
struct Mat4 {
    std::array<Complex, 16> m{};

    Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const Complex& operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4 identity() {
        Mat4 out;
        for (int k = 0; k < 4; ++k) out(k, k) = 1.0;
        return out;
    }

    Mat4 adjoint() const {
        Mat4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
        return out;
    }

    Complex trace() const { return m[0] + m[5] + m[10] + m[15]; }

    Spinor apply(const Spinor& v) const {
        Spinor out{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
        return out;
    }

    friend Mat4 operator+(const Mat4& a, const Mat4& b) {
        Mat4 out;
        for (std::size_t k = 0; k < 16; ++k) out.m[k] = a.m[k] + b.m[k];
        return out;
    }
    friend Mat4 operator-(const Mat4& a, const Mat4& b) {
        Mat4 out;
        for (std::size_t k = 0; k < 16; ++k) out.m[k] = a.m[k] - b.m[k];
        return out;
    }
    friend Mat4 operator*(Complex s, const Mat4& a) {
        Mat4 out;
        for (std::size_t k = 0; k < 16; ++k) out.m[k] = s * a.m[k];
        return out;
    }
    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                Complex acc{};
                for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
                out(r, c) = acc;
            }
        return out;
    }
};

// Dirac representation: beta = diag(1, 1, -1, -1), alpha^k off-diagonal with
// the Pauli matrices.
struct DiracMatrices {
    std::array<Mat4, 3> alpha;
    Mat4 beta;
};

inline const DiracMatrices& dirac_matrices() {
    static const DiracMatrices dm = [] {
        const Complex i{0.0, 1.0};
        const std::array<std::array<std::array<Complex, 2>, 2>, 3> sigma{{
            {{{Complex{0}, Complex{1}}, {Complex{1}, Complex{0}}}},
            {{{Complex{0}, -i}, {i, Complex{0}}}},
            {{{Complex{1}, Complex{0}}, {Complex{0}, Complex{-1}}}},
        }};
        DiracMatrices out;
        for (int k = 0; k < 3; ++k) {
            Mat4 m;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    m(r, c + 2) = sigma[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    m(r + 2, c) = sigma[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                }
            out.alpha[static_cast<std::size_t>(k)] = m;
        }
        out.beta = Mat4{};
        out.beta(0, 0) = 1.0;
        out.beta(1, 1) = 1.0;
        out.beta(2, 2) = -1.0;
        out.beta(3, 3) = -1.0;
        return out;
    }();
    return dm;
}

// Momentum-space Dirac operator alpha . p + beta m.
inline Mat4 hamiltonian_matrix(const Vec3& p, double mass) {
    const auto& dm = dirac_matrices();
    Mat4 h = Complex{mass} * dm.beta;
    for (int k = 0; k < 3; ++k) h = h + Complex{p[static_cast<std::size_t>(k)]} * dm.alpha[static_cast<std::size_t>(k)];
    return h;
}

inline double omega(const Vec3& p, double mass) { return std::sqrt(dot(p, p) + mass * mass); }

enum class EnergySign { positive, negative };

// Spectral projection (omega +/- H) / (2 omega).  Undefined at m = 0, p = 0
// where the gap closes.
inline Mat4 projection(const Vec3& p, double mass, EnergySign sign) {
    const double w = omega(p, mass);
    if (w == 0.0) throw std::domain_error("projection: degenerate mode at m = 0, p = 0");
    const Mat4 h = hamiltonian_matrix(p, mass);
    Mat4 base = Complex{w} * Mat4::identity();
    base = (sign == EnergySign::positive) ? base + h : base - h;
    return Complex{1.0 / (2.0 * w)} * base;
}

namespace detail {

// Fixed unitary of the anti-linear charge conjugation, beta * alpha^2 in the
// Dirac representation.
inline const Mat4& conjugation_matrix() {
    static const Mat4 uc = dirac_matrices().beta * dirac_matrices().alpha[1];
    return uc;
}

}  // namespace detail

// Charge conjugation on spinors: C v = U_C conj(v).  Anti-linear, squares to
// the identity, flips inner products, and exchanges the +/- omega eigenspaces
// of H(p) with those of H(-p).
inline Spinor charge_conjugate(const Spinor& v) {
    Spinor conj_v;
    for (std::size_t k = 0; k < 4; ++k) conj_v[k] = std::conj(v[k]);
    return detail::conjugation_matrix().apply(conj_v);
}

// Finite family of lattice momenta with a common mass.  Closure under
// negation keeps charge conjugation an involution of the mode set.
struct MomentumGrid {
    double mass = 0.0;
    std::vector<Vec3> momenta;

    MomentumGrid() = default;
    MomentumGrid(double mass_, std::vector<Vec3> momenta_) : mass(mass_), momenta(std::move(momenta_)) {
        validate();
    }

    void validate() const {
        if (!(mass >= 0.0) || !std::isfinite(mass))
            throw std::invalid_argument("MomentumGrid: mass must be finite and >= 0");
        if (momenta.empty()) throw std::invalid_argument("MomentumGrid: empty momentum set");
        auto contains = [&](const Vec3& q) {
            return std::find(momenta.begin(), momenta.end(), q) != momenta.end();
        };
        for (std::size_t i = 0; i < momenta.size(); ++i) {
            for (std::size_t k = i + 1; k < momenta.size(); ++k)
                if (momenta[i] == momenta[k])
                    throw std::invalid_argument("MomentumGrid: duplicate momentum");
            if (!contains(negated(momenta[i])))
                throw std::invalid_argument("MomentumGrid: momenta not closed under negation");
        }
    }
};

// Indexed mode family {e_i}, i in Z \ {0}: index i > 0 carries a positive
// energy spinor at some grid momentum, and e_{-i} = C e_i by construction.
class ModeBasis {
public:
    struct Mode {
        Vec3 momentum;
        Spinor spinor;
    };

    ModeBasis(double mass, std::vector<Mode> positive) : mass_(mass), positive_(std::move(positive)) {
        negative_.reserve(positive_.size());
        for (const auto& mode : positive_)
            negative_.push_back(Mode{negated(mode.momentum), charge_conjugate(mode.spinor)});
    }

    double mass() const noexcept { return mass_; }
    int positive_count() const noexcept { return static_cast<int>(positive_.size()); }

    bool has(int index) const noexcept {
        return index != 0 && std::abs(index) <= positive_count();
    }

    const Mode& mode(int index) const {
        if (!has(index)) throw std::out_of_range("ModeBasis: unknown mode index");
        const auto slot = static_cast<std::size_t>(std::abs(index) - 1);
        return index > 0 ? positive_[slot] : negative_[slot];
    }

    double omega(int index) const { return seawedge::omega(mode(index).momentum, mass_); }

private:
    double mass_;
    std::vector<Mode> positive_;
    std::vector<Mode> negative_;
};

// Builds a splitting-compatible mode basis: per momentum, project the
// standard reference spinors onto the positive-energy eigenspace and
// orthonormalize in fixed order; negative modes are the conjugation images.
// Deterministic given the grid ordering.
inline ModeBasis build_mode_basis(const MomentumGrid& grid) {
    grid.validate();
    std::vector<ModeBasis::Mode> positive;
    positive.reserve(grid.momenta.size() * 2);
    for (const auto& p : grid.momenta) {
        const Mat4 proj = projection(p, grid.mass, EnergySign::positive);
        std::vector<Spinor> onb;
        for (int ref = 0; ref < 4 && onb.size() < 2; ++ref) {
            Spinor candidate{};
            candidate[static_cast<std::size_t>(ref)] = 1.0;
            Spinor u = proj.apply(candidate);
            for (const auto& prev : onb) {
                const Complex overlap = inner(prev, u);
                for (std::size_t k = 0; k < 4; ++k) u[k] -= overlap * prev[k];
            }
            const double len = norm(u);
            if (len < 1e-8) continue;
            for (auto& c : u) c /= len;
            onb.push_back(u);
        }
        if (onb.size() != 2)
            throw std::runtime_error("build_mode_basis: could not resolve the positive eigenspace");
        positive.push_back(ModeBasis::Mode{p, onb[0]});
        positive.push_back(ModeBasis::Mode{p, onb[1]});
    }
    return ModeBasis(grid.mass, std::move(positive));
}

// Diagonal one-particle evolution e^{iHt}: phase +omega t on positive modes,
// -omega t on negative ones.
inline OneParticleVector evolve(const OneParticleVector& f, double t, const ModeBasis& basis) {
    OneParticleVector out;
    for (const auto& [mode, c] : f.coeffs()) {
        const double w = basis.omega(mode);
        const double angle = (mode > 0 ? +w : -w) * t;
        out.add(mode, std::polar(1.0, angle) * c);
    }
    return out;
}

// One-particle Hamiltonian in the mode basis: multiplies each coefficient by
// +/- omega of its mode.
inline OneParticleVector apply_hamiltonian(const OneParticleVector& f, const ModeBasis& basis) {
    OneParticleVector out;
    for (const auto& [mode, c] : f.coeffs()) {
        const double w = basis.omega(mode);
        out.add(mode, (mode > 0 ? +w : -w) * c);
    }
    return out.prune();
}

}  // namespace seawedge

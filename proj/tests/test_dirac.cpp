#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "seawedge/dirac.hpp"
#include "seawedge/random.hpp"
#include "support/eigen_oracle.hpp"

using namespace seawedge;
using seawedge::testing::hermitian_eigenvalues;
using seawedge::testing::max_abs;

namespace {

Spinor random_spinor(Rng& rng, bool normalize = true) {
    Spinor u;
    for (auto& c : u) c = rng.complex_gaussian();
    if (normalize) {
        const double len = norm(u);
        for (auto& c : u) c /= len;
    }
    return u;
}

Vec3 random_momentum(Rng& rng) {
    return Vec3{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

double spinor_distance(const Spinor& u, const Spinor& v) {
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) acc += std::norm(u[k] - v[k]);
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("Clifford relations of the alpha and beta matrices") {
    const auto& dm = dirac_matrices();
    const Mat4 id = Mat4::identity();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Mat4 anti = dm.alpha[i] * dm.alpha[j] + dm.alpha[j] * dm.alpha[i];
            const Mat4 expected = (i == j) ? Complex{2.0} * id : Mat4{};
            CHECK(max_abs(anti - expected) < 1e-14);
        }
        CHECK(max_abs(dm.alpha[i] * dm.beta + dm.beta * dm.alpha[i]) < 1e-14);
        CHECK(max_abs(dm.alpha[i] - dm.alpha[i].adjoint()) < 1e-14);
    }
    CHECK(max_abs(dm.beta * dm.beta - id) < 1e-14);
    CHECK(max_abs(dm.beta - dm.beta.adjoint()) < 1e-14);
}

TEST_CASE("hamiltonian at rest is m beta") {
    const Mat4 h = hamiltonian_matrix(Vec3{0, 0, 0}, 2.5);
    CHECK(max_abs(h - Complex{2.5} * dirac_matrices().beta) < 1e-14);
    const auto ev = hermitian_eigenvalues(h);
    CHECK(ev[0] == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("omega arithmetic") {
    CHECK(omega(Vec3{0, 0, 0}, 1.0) == doctest::Approx(1.0));
    CHECK(omega(Vec3{3, 0, 0}, 4.0) == doctest::Approx(5.0));
}

TEST_CASE("eigenvalues are plus-minus omega with multiplicity two") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 p = random_momentum(rng);
        const double m = rng.uniform(0.1, 3.0);
        const double w = omega(p, m);
        const auto ev = hermitian_eigenvalues(hamiltonian_matrix(p, m));
        CHECK(std::abs(ev[0] + w) < 1e-12);
        CHECK(std::abs(ev[1] + w) < 1e-12);
        CHECK(std::abs(ev[2] - w) < 1e-12);
        CHECK(std::abs(ev[3] - w) < 1e-12);
        // squared operator is (|p|^2 + m^2) Id
        const Mat4 h = hamiltonian_matrix(p, m);
        CHECK(max_abs(h * h - Complex{w * w} * Mat4::identity()) < 1e-12);
    }
}

TEST_CASE("spectral projections") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Vec3 p = random_momentum(rng);
        const double m = rng.uniform(0.1, 3.0);
        const double w = omega(p, m);
        const Mat4 h = hamiltonian_matrix(p, m);
        const Mat4 plus = projection(p, m, EnergySign::positive);
        const Mat4 minus = projection(p, m, EnergySign::negative);

        CHECK(max_abs(plus * plus - plus) < 1e-12);
        CHECK(max_abs(minus * minus - minus) < 1e-12);
        CHECK(max_abs(plus - plus.adjoint()) < 1e-12);
        CHECK(max_abs(plus + minus - Mat4::identity()) < 1e-12);
        CHECK(max_abs(plus * minus) < 1e-12);
        CHECK(max_abs(h * plus - Complex{w} * plus) < 1e-12);
        CHECK(max_abs(h * minus + Complex{w} * minus) < 1e-12);
        CHECK(std::abs(plus.trace() - Complex{2.0}) < 1e-12);
        CHECK(std::abs(minus.trace() - Complex{2.0}) < 1e-12);
        // block reconstruction H = w P+ - w P-
        CHECK(max_abs(h - (Complex{w} * plus - Complex{w} * minus)) < 1e-12);
    }
    SUBCASE("at rest the projections are (Id +- beta)/2") {
        const Mat4 plus = projection(Vec3{0, 0, 0}, 1.0, EnergySign::positive);
        const Mat4 expected = Complex{0.5} * (Mat4::identity() + dirac_matrices().beta);
        CHECK(max_abs(plus - expected) < 1e-14);
    }
    SUBCASE("massless zero mode is rejected") {
        CHECK_THROWS_AS(projection(Vec3{0, 0, 0}, 0.0, EnergySign::positive), std::domain_error);
    }
}

TEST_CASE("charge conjugation properties") {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Spinor v = random_spinor(rng, false);
        const Spinor w = random_spinor(rng, false);
        CHECK(spinor_distance(charge_conjugate(charge_conjugate(v)), v) < 1e-12);
        CHECK(std::abs(inner(charge_conjugate(v), charge_conjugate(w)) - inner(w, v)) < 1e-12);

        const Vec3 p = random_momentum(rng);
        const double m = rng.uniform(0.1, 3.0);
        // C exchanges the energy branches and flips the momentum
        const Spinor lhs = charge_conjugate(projection(p, m, EnergySign::positive).apply(v));
        const Spinor rhs =
            projection(negated(p), m, EnergySign::negative).apply(charge_conjugate(v));
        CHECK(spinor_distance(lhs, rhs) < 1e-12);
    }
    SUBCASE("coefficient-level conjugation matches the mode pairing") {
        OneParticleVector f;
        f.add(2, Complex{0.5, -0.25});
        f.add(-1, Complex{0.0, 1.0});
        const auto cf = charge_conjugate(f);
        CHECK(cf.coeff(-2) == Complex{0.5, 0.25});
        CHECK(cf.coeff(1) == Complex{0.0, -1.0});
        CHECK(charge_conjugate(cf) == f);
        Rng rng2(1);
        OneParticleVector g = random_one_particle(rng2, 5, ModeSupport::both, 5, true);
        CHECK(std::abs(inner(charge_conjugate(f), charge_conjugate(g)) - inner(g, f)) < 1e-14);
        // C P+ = P- C on coefficients
        CHECK(charge_conjugate(f.positive_part()) == charge_conjugate(f).negative_part());
    }
}

TEST_CASE("momentum grid validation") {
    CHECK_NOTHROW(MomentumGrid(1.0, {Vec3{0, 0, 0}}));
    CHECK_NOTHROW(MomentumGrid(1.0, {Vec3{0.5, 0, 0}, Vec3{-0.5, 0, 0}}));
    CHECK_THROWS_AS(MomentumGrid(1.0, {Vec3{0.5, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MomentumGrid(1.0, {Vec3{0, 0, 0}, Vec3{0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MomentumGrid(-1.0, {Vec3{0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MomentumGrid(1.0, {}), std::invalid_argument);
}

TEST_CASE("mode basis construction") {
    SUBCASE("at rest the positive modes are the beta eigenspinors") {
        const auto basis = build_mode_basis(MomentumGrid(1.0, {Vec3{0, 0, 0}}));
        REQUIRE(basis.positive_count() == 2);
        const Spinor expect1{Complex{1}, Complex{0}, Complex{0}, Complex{0}};
        const Spinor expect2{Complex{0}, Complex{1}, Complex{0}, Complex{0}};
        CHECK(spinor_distance(basis.mode(1).spinor, expect1) < 1e-12);
        CHECK(spinor_distance(basis.mode(2).spinor, expect2) < 1e-12);
    }

    const MomentumGrid grid(0.8, {Vec3{0, 0, 0}, Vec3{0.4, -0.3, 0.7}, Vec3{-0.4, 0.3, -0.7},
                                  Vec3{1.0, 0.2, 0.0}, Vec3{-1.0, -0.2, 0.0}});
    const auto basis = build_mode_basis(grid);
    REQUIRE(basis.positive_count() == 10);

    SUBCASE("orthonormal and complete per momentum") {
        for (const auto& p : grid.momenta) {
            std::vector<Spinor> at_p;
            for (int sign : {+1, -1})
                for (int k = 1; k <= basis.positive_count(); ++k) {
                    const auto& mode = basis.mode(sign * k);
                    if (mode.momentum == p) at_p.push_back(mode.spinor);
                }
            REQUIRE(at_p.size() == 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = 0; k < 4; ++k) {
                    const Complex expected = (i == k) ? Complex{1.0} : Complex{};
                    CHECK(std::abs(inner(at_p[i], at_p[k]) - expected) < 1e-12);
                }
        }
    }

    SUBCASE("splitting compatibility H e_i = +-omega e_i") {
        for (int k = 1; k <= basis.positive_count(); ++k) {
            for (int index : {k, -k}) {
                const auto& mode = basis.mode(index);
                const double w = basis.omega(index);
                const Spinor hu = hamiltonian_matrix(mode.momentum, grid.mass).apply(mode.spinor);
                Spinor expected = mode.spinor;
                for (auto& c : expected) c *= (index > 0 ? +w : -w);
                CHECK(spinor_distance(hu, expected) < 1e-10);
            }
        }
    }

    SUBCASE("negative modes are the conjugation images") {
        for (int k = 1; k <= basis.positive_count(); ++k) {
            const auto& pos = basis.mode(k);
            const auto& neg = basis.mode(-k);
            CHECK(neg.momentum == negated(pos.momentum));
            CHECK(spinor_distance(neg.spinor, charge_conjugate(pos.spinor)) < 1e-14);
        }
    }

    SUBCASE("construction is deterministic") {
        const auto again = build_mode_basis(grid);
        for (int k = 1; k <= basis.positive_count(); ++k)
            CHECK(spinor_distance(again.mode(k).spinor, basis.mode(k).spinor) == 0.0);
    }

    SUBCASE("unknown mode index throws") {
        CHECK_THROWS_AS(basis.mode(11), std::out_of_range);
        CHECK_THROWS_AS(basis.mode(0), std::out_of_range);
        CHECK_THROWS_AS(basis.omega(-11), std::out_of_range);
    }
}

TEST_CASE("one-particle evolution") {
    const auto basis = build_mode_basis(MomentumGrid(1.0, {Vec3{0, 0, 0}, Vec3{0.6, 0, 0.3},
                                                           Vec3{-0.6, 0, -0.3}}));
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        OneParticleVector f;
        const int count = rng.uniform_int(1, 5);
        for (int k = 0; k < count; ++k) {
            int mode = rng.uniform_int(1, basis.positive_count());
            if (rng.coin()) mode = -mode;
            f.add(mode, rng.complex_gaussian());
        }
        f.prune();
        if (f.empty()) continue;

        CHECK(evolve(f, 0.0, basis) == f);
        const double s = rng.uniform(-3.0, 3.0);
        const double t = rng.uniform(-3.0, 3.0);
        CHECK(std::abs(norm(evolve(f, t, basis)) - norm(f)) < 1e-12);
        const auto twice = evolve(evolve(f, s, basis), t, basis);
        const auto once = evolve(f, s + t, basis);
        CHECK(norm(twice - once) < 1e-12);
    }
    SUBCASE("unknown mode is rejected") {
        CHECK_THROWS_AS(evolve(OneParticleVector::basis(99), 1.0, basis), std::out_of_range);
    }
    SUBCASE("apply_hamiltonian multiplies by the signed energy") {
        OneParticleVector f;
        f.add(1, Complex{2.0, 0.0});
        f.add(-1, Complex{0.0, 3.0});
        const auto hf = apply_hamiltonian(f, basis);
        CHECK(hf.coeff(1) == Complex{2.0, 0.0} * basis.omega(1));
        CHECK(hf.coeff(-1) == Complex{0.0, 3.0} * (-basis.omega(-1)));
    }
}

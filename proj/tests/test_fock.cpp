#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "seawedge/equivalence.hpp"
#include "seawedge/fock.hpp"
#include "seawedge/random.hpp"
#include "support/dense_fock.hpp"

using namespace seawedge;
using seawedge::testing::DenseFockWindow;

namespace {

ModeBasis test_basis(int window) { return build_mode_basis(make_verification_grid(window)); }

}  // namespace

TEST_CASE("factor creation follows the alternating-sign convention") {
    const auto vac = FockVector::vacuum();
    const auto e1 = OneParticleVector::basis(1);
    const auto e2 = OneParticleVector::basis(2);

    const auto one = alpha_star(e1, vac, Factor::particle);
    CHECK(one.amplitude(FockState({1}, {})) == Complex{1.0, 0.0});

    const auto ordered = alpha_star(e1, alpha_star(e2, vac, Factor::particle), Factor::particle);
    const auto swapped = alpha_star(e2, alpha_star(e1, vac, Factor::particle), Factor::particle);
    CHECK(ordered == Complex{-1.0} * swapped);
    CHECK(ordered.amplitude(FockState({1, 2}, {})) == Complex{1.0, 0.0});
}

TEST_CASE("factor anticommutator is the overlap") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto h1 = random_one_particle(rng, 4, ModeSupport::positive, 3, true);
        const auto h2 = random_one_particle(rng, 4, ModeSupport::positive, 3, true);
        const auto v = random_fock(rng, 4, 5, true);
        for (Factor f : {Factor::particle, Factor::antiparticle}) {
            const FockVector anti =
                alpha(h1, alpha_star(h2, v, f), f) + alpha_star(h2, alpha(h1, v, f), f);
            CHECK(norm(anti - inner(h1, h2) * v) < 1e-12);
        }
    }
}

TEST_CASE("vacuum annihilation and support validation") {
    const auto vac = FockVector::vacuum();
    const auto e1 = OneParticleVector::basis(1);
    CHECK(a(e1, vac).empty());
    CHECK(b(e1, vac).empty());
    CHECK_THROWS_AS(a(OneParticleVector::basis(-1), vac), std::invalid_argument);
    CHECK_THROWS_AS(b_star(OneParticleVector::basis(-2), vac), std::invalid_argument);
}

TEST_CASE("twist makes the antiparticle operators anticommute with the particle ones") {
    SUBCASE("frozen two-antiparticle sign") {
        const auto v =
            b_star(OneParticleVector::basis(2), b_star(OneParticleVector::basis(1), FockVector::vacuum()));
        CHECK(v.support_size() == 1);
        CHECK(v.amplitude(FockState({}, {1, 2})) == Complex{-1.0, 0.0});
    }
    SUBCASE("mixed anticommutators vanish on random vectors") {
        Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const auto h1 = random_one_particle(rng, 4, ModeSupport::positive, 3, true);
            const auto h2 = random_one_particle(rng, 4, ModeSupport::positive, 3, true);
            const auto v = random_fock(rng, 4, 5, true);
            CHECK(norm(a(h1, b_star(h2, v)) + b_star(h2, a(h1, v))) < 1e-12);
            CHECK(norm(a(h1, b(h2, v)) + b(h2, a(h1, v))) < 1e-12);
            CHECK(norm(a_star(h1, b_star(h2, v)) + b_star(h2, a_star(h1, v))) < 1e-12);
            const FockVector bb = b(h1, b_star(h2, v)) + b_star(h2, b(h1, v));
            CHECK(norm(bb - inner(h1, h2) * v) < 1e-12);
            const FockVector aa = a(h1, a_star(h2, v)) + a_star(h2, a(h1, v));
            CHECK(norm(aa - inner(h1, h2) * v) < 1e-12);
        }
    }
}

TEST_CASE("operators agree with the dense Jordan-Wigner oracle") {
    DenseFockWindow win(4);
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto h = random_one_particle(rng, 4, ModeSupport::positive, 3, true);
        const auto v = random_fock(rng, 4, 5, true);
        const auto dense = win.from_fock(v);

        const auto pairs = {
            std::pair{a(h, v), win.a(h, dense)},
            std::pair{a_star(h, v), win.a_star(h, dense)},
            std::pair{b(h, v), win.b(h, dense)},
            std::pair{b_star(h, v), win.b_star(h, dense)},
        };
        for (const auto& [sparse, oracle] : pairs) {
            const auto lhs = win.from_fock(sparse);
            for (std::size_t m = 0; m < lhs.size(); ++m) CHECK(std::abs(lhs[m] - oracle[m]) < 1e-14);
        }
    }
}

TEST_CASE("multi-particle hamiltonian is diagonal and nonnegative") {
    const auto basis = test_basis(4);
    CHECK(hamiltonian_h_prime(FockVector::vacuum(), basis).empty());

    SUBCASE("single particle at rest has energy m") {
        const auto basis0 = build_mode_basis(MomentumGrid(1.0, {Vec3{0, 0, 0}}));
        const auto v = a_star(OneParticleVector::basis(1), FockVector::vacuum());
        const auto hv = hamiltonian_h_prime(v, basis0);
        CHECK(norm(hv - Complex{1.0} * v) < 1e-14);
    }

    SUBCASE("energies over random states") {
        Rng rng(13);
        for (int trial = 0; trial < 100; ++trial) {
            const FockState s = random_fock_state(rng, 4);
            CHECK(state_energy(s, basis) >= 0.0);
        }
    }

    SUBCASE("unknown occupied mode throws") {
        const FockVector v = FockVector::basis_state(FockState({99}, {}));
        CHECK_THROWS_AS(hamiltonian_h_prime(v, basis), std::out_of_range);
    }
}

TEST_CASE("field operator frozen examples") {
    const auto basis = test_basis(4);
    const auto vac = FockVector::vacuum();
    SUBCASE("positive mode at t = 0 is a plain annihilator") {
        Rng rng(17);
        const auto v = random_fock(rng, 4, 5, true);
        const auto lhs = fock_field(0.0, OneParticleVector::basis(1), v, basis);
        CHECK(norm(lhs - a(OneParticleVector::basis(1), v)) < 1e-14);
    }
    SUBCASE("negative mode creates the paired antiparticle") {
        const auto lhs = fock_field(0.0, OneParticleVector::basis(-1), vac, basis);
        const auto rhs = b_star(OneParticleVector::basis(1), vac);
        CHECK(norm(lhs - rhs) < 1e-14);
    }
    SUBCASE("unknown mode throws") {
        CHECK_THROWS_AS(fock_field(0.0, OneParticleVector::basis(99), vac, basis),
                        std::out_of_range);
    }
}

TEST_CASE("field anticommutator is the one-particle overlap") {
    const auto basis = test_basis(4);
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f1 = random_one_particle(rng, 4, ModeSupport::both, 4, true);
        const auto f2 = random_one_particle(rng, 4, ModeSupport::both, 4, true);
        const auto v = random_fock(rng, 4, 5, true);
        const double t = rng.uniform(-2.0, 2.0);
        const FockVector anti = fock_field(t, f1, fock_field_star(t, f2, v, basis), basis) +
                                fock_field_star(t, f2, fock_field(t, f1, v, basis), basis);
        CHECK(norm(anti - inner(f1, f2) * v) < 1e-12);
    }
}

TEST_CASE("evolution is implemented by the diagonal phases") {
    const auto basis = test_basis(4);
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_one_particle(rng, 4, ModeSupport::both, 4, true);
        const auto v = random_fock(rng, 4, 5, true);
        const double t = rng.uniform(-2.0, 2.0);
        // psi(t, f) = e^{iH't} psi(0, f) e^{-iH't}
        const FockVector lhs = fock_field(t, f, v, basis);
        const FockVector rhs = evolve(fock_field(0.0, f, evolve(v, -t, basis), basis), t, basis);
        CHECK(norm(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("field equation by finite differences") {
    const auto basis = test_basis(4);
    Rng rng(29);
    const double step = 1e-5;
    const Complex half_step_inv{1.0 / (2.0 * step), 0.0};
    int elements = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_one_particle(rng, 4, ModeSupport::both, 4, true);
        const auto w = random_fock(rng, 4, 4, true);
        const double t0 = rng.uniform(-1.0, 1.0);
        const FockVector derivative = half_step_inv * (fock_field(t0 + step, f, w, basis) -
                                                       fock_field(t0 - step, f, w, basis));
        const FockVector expected =
            Complex{0.0, -1.0} * fock_field(t0, apply_hamiltonian(f, basis), w, basis);
        CHECK(norm(derivative - expected) < 1e-6);
        for (const auto& [state, amp] : expected.terms()) {
            CHECK(std::abs(derivative.amplitude(state) - amp) < 1e-6);
            ++elements;
        }
    }
    CHECK(elements > 0);
}

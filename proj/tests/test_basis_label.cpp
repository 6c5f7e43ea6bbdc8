#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "seawedge/basis_label.hpp"
#include "seawedge/random.hpp"

using namespace seawedge;

namespace {

// Brute-force decoding: walk the descending integers and merge by hand.
// Independent of the counting formulas under test.
std::vector<int> brute_force_prefix(const BasisLabel& label, int count) {
    std::vector<int> seq;
    std::vector<int> particles(label.particles().rbegin(), label.particles().rend());
    for (int p : particles) seq.push_back(p);
    for (int v = -1; static_cast<int>(seq.size()) < count; --v)
        if (!label.has_hole(v)) seq.push_back(v);
    seq.resize(static_cast<std::size_t>(count));
    return seq;
}

}  // namespace

TEST_CASE("vacuum decodes to the sea") {
    CHECK(decode_prefix(BasisLabel::vacuum(), 3) == std::vector<int>{-1, -2, -3});
    CHECK(BasisLabel::vacuum().is_vacuum());
    CHECK(BasisLabel::vacuum().charge() == 0);
}

TEST_CASE("decode_prefix merges particles and the punctured sea") {
    CHECK(decode_prefix(BasisLabel({5}, {-2}), 4) == std::vector<int>{5, -1, -3, -4});
    CHECK(decode_prefix(BasisLabel({1}, {}), 2) == std::vector<int>{1, -1});
    CHECK_THROWS_AS(decode_prefix(BasisLabel::vacuum(), 0), std::invalid_argument);
}

TEST_CASE("construction validates signs and duplicates") {
    CHECK_THROWS_AS(BasisLabel({0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(BasisLabel({-1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(BasisLabel({}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(BasisLabel({1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(BasisLabel({}, {-3, -3}), std::invalid_argument);
    // unsorted input is normalized
    CHECK(BasisLabel({3, 1}, {-1, -4}).particles() == std::vector<int>{1, 3});
}

TEST_CASE("position_of counting formula") {
    CHECK(position_of(BasisLabel::vacuum(), -2) == 2);
    CHECK(!position_of(BasisLabel({}, {-2}), -2).has_value());
    CHECK(position_of(BasisLabel({5}, {-2}), -3) == 3);
    CHECK(position_of(BasisLabel({5}, {-2}), 5) == 1);
    CHECK(!position_of(BasisLabel({5}, {-2}), 4).has_value());
    CHECK_THROWS_AS(position_of(BasisLabel::vacuum(), 0), std::invalid_argument);
}

TEST_CASE("position_of agrees with brute-force decoding on random labels") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const BasisLabel label = random_label(rng, 6);
        const int depth = 16;
        const auto seq = brute_force_prefix(label, depth);
        for (int s = 1; s <= depth; ++s) {
            const auto found = position_of(label, seq[static_cast<std::size_t>(s - 1)]);
            REQUIRE(found.has_value());
            CHECK(*found == s);
        }
        // modes absent from the prefix really are absent
        for (int j = 1; j <= 6; ++j) {
            if (!label.has_particle(j)) CHECK(!position_of(label, j).has_value());
            if (label.has_hole(-j)) CHECK(!position_of(label, -j).has_value());
        }
    }
}

TEST_CASE("charge equals the eventual sequence offset i_k + k") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const BasisLabel label = random_label(rng, 5);
        const int k = 12;  // beyond any deviation within the window
        const auto seq = decode_prefix(label, k);
        CHECK(seq[static_cast<std::size_t>(k - 1)] + k == label.charge());
        CHECK(decode_prefix(label, k) == brute_force_prefix(label, k));
    }
}

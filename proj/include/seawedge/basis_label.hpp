#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace seawedge {

// A basis state of the semi-infinite wedge space, stored as the finite
// deviation from the filled sea.  `particles` holds the occupied positive
// mode indices, `holes` the vacated negative ones.  The decoded index
// sequence i_1 > i_2 > ... eventually steps by exactly -1, so these two
// finite sets describe it completely; the vacuum is (empty, empty) and
// decodes to (-1, -2, -3, ...).
class BasisLabel {
public:
    BasisLabel() = default;

    BasisLabel(std::vector<int> particles, std::vector<int> holes)
        : particles_(std::move(particles)), holes_(std::move(holes)) {
        normalize_and_validate(particles_, /*positive=*/true);
        normalize_and_validate(holes_, /*positive=*/false);
    }

    static BasisLabel vacuum() { return BasisLabel{}; }

    // Ascending, all > 0.
    const std::vector<int>& particles() const noexcept { return particles_; }
    // Ascending, all < 0.  -1 is the shallowest possible hole.
    const std::vector<int>& holes() const noexcept { return holes_; }

    bool is_vacuum() const noexcept { return particles_.empty() && holes_.empty(); }

    bool has_particle(int j) const {
        return std::binary_search(particles_.begin(), particles_.end(), j);
    }
    bool has_hole(int j) const {
        return std::binary_search(holes_.begin(), holes_.end(), j);
    }

    // Particle count minus hole count; equals i_k + k for every k beyond the
    // deviation region of the decoded sequence.
    int charge() const noexcept {
        return static_cast<int>(particles_.size()) - static_cast<int>(holes_.size());
    }

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

private:
    static void normalize_and_validate(std::vector<int>& v, bool positive) {
        std::sort(v.begin(), v.end());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0 || (v[k] > 0) != positive)
                throw std::invalid_argument("BasisLabel: index of wrong sign");
            if (k > 0 && v[k] == v[k - 1])
                throw std::invalid_argument("BasisLabel: duplicate index");
        }
    }

    std::vector<int> particles_;
    std::vector<int> holes_;
};

namespace detail {

inline int count_greater(const std::vector<int>& sorted_ascending, int j) {
    return static_cast<int>(sorted_ascending.end() -
                            std::upper_bound(sorted_ascending.begin(), sorted_ascending.end(), j));
}

}  // namespace detail

// First `count` entries of the decoded sequence: the particles descending,
// then the sea indices -1, -2, ... with the holes skipped.  Inspection aid;
// everything operational uses position_of instead.
inline std::vector<int> decode_prefix(const BasisLabel& label, int count) {
    if (count < 1) throw std::invalid_argument("decode_prefix: count must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    const auto& ps = label.particles();
    for (auto it = ps.rbegin(); it != ps.rend() && out.size() < static_cast<std::size_t>(count); ++it)
        out.push_back(*it);
    const auto& hs = label.holes();
    auto hole = hs.rbegin();  // descending: shallowest hole first
    int next = -1;
    while (out.size() < static_cast<std::size_t>(count)) {
        while (hole != hs.rend() && *hole == next) {
            ++hole;
            --next;
        }
        out.push_back(next--);
    }
    return out;
}

// 1-based position s of mode j in the decoded sequence (i_s = j), or nullopt
// if j does not occur.  Computed by counting over the deviation sets; the
// sequence itself is never materialized.
inline std::optional<int> position_of(const BasisLabel& label, int j) {
    if (j == 0) throw std::invalid_argument("position_of: mode index must be nonzero");
    if (j > 0) {
        if (!label.has_particle(j)) return std::nullopt;
        return detail::count_greater(label.particles(), j) + 1;
    }
    if (label.has_hole(j)) return std::nullopt;
    const int holes_above = detail::count_greater(label.holes(), j);
    return static_cast<int>(label.particles().size()) + (-j) - holes_above;
}

}  // namespace seawedge

#pragma once

#include <cmath>
#include <complex>

namespace seawedge {

using Complex = std::complex<double>;

// Amplitudes at or below this magnitude are dropped after every
// linear-combination operation.
inline constexpr double kPruneThreshold = 1e-15;

inline bool negligible(const Complex& z, double threshold = kPruneThreshold) {
    return std::abs(z) <= threshold;
}

}  // namespace seawedge

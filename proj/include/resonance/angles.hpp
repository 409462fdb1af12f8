#pragma once

#include <cmath>
#include <numbers>

namespace resonance {

inline constexpr double tau = 2.0 * std::numbers::pi;

// reduce to [0, 2*pi)
inline double wrap_2pi(double x) {
    double y = std::fmod(x, tau);
    return y < 0.0 ? y + tau : y;
}

// reduce to (-pi, pi]
inline double wrap_pi(double x) {
    double y = std::fmod(x + std::numbers::pi, tau);
    if (y <= 0.0) y += tau;
    return y - std::numbers::pi;
}

// signed angular distance a - b reduced to (-pi, pi]
inline double angle_diff(double a, double b) { return wrap_pi(a - b); }

}  // namespace resonance

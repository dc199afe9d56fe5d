#pragma once

#include <numbers>

// Internal unit system: time in microseconds, frequencies as angular
// frequencies in rad/us. A config value of "6" in 2pi*MHz is 2*pi*6 rad/us.
namespace rydcav::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double from_2pi_mhz(double v) { return kTwoPi * v; }
constexpr double from_2pi_khz(double v) { return kTwoPi * v * 1e-3; }
constexpr double to_2pi_mhz(double w) { return w / kTwoPi; }
constexpr double to_2pi_khz(double w) { return w / kTwoPi * 1e3; }

// SI angular frequency (rad/s) <-> rad/us.
constexpr double from_rad_per_s(double w) { return w * 1e-6; }
constexpr double to_rad_per_s(double w) { return w * 1e6; }

}  // namespace rydcav::units

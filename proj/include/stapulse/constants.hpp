#pragma once

#include <numbers>

namespace stapulse {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// All internal frequencies are angular (rad/s). I/O uses ordinary
// frequency in MHz; the conversion happens here and nowhere else.
inline constexpr double mhz_to_rad(double f_mhz) { return two_pi * f_mhz * 1e6; }
inline constexpr double khz_to_rad(double f_khz) { return two_pi * f_khz * 1e3; }
inline constexpr double rad_to_mhz(double w) { return w / (two_pi * 1e6); }
inline constexpr double hz_to_rad(double f_hz) { return two_pi * f_hz; }
inline constexpr double rad_to_hz(double w) { return w / two_pi; }

// Gyromagnetic ratios (angular, rad/s/T), standard NMR tables.
inline constexpr double gamma_c13 = two_pi * 10.7084e6;
inline constexpr double gamma_h1 = two_pi * 42.577e6;

// Pulse phase axes: phi = 0 drives sigma_x, phi = -pi/2 drives sigma_y.
inline constexpr double phase_x = 0.0;
inline constexpr double phase_y = -std::numbers::pi / 2.0;

} // namespace stapulse

#pragma once

namespace fwmpair {

// Speed of light in vacuum [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double kPi = 3.14159265358979323846;

// Unit helpers. Geometry is specified in micrometers, wavelengths in
// micrometers, time in seconds, propagation constants in rad/m.
inline constexpr double kMicron = 1e-6;

// Angular frequency [rad/s] of vacuum wavelength [um].
inline constexpr double omega_from_lambda_um(double lambda_um) {
    return 2.0 * kPi * kSpeedOfLight / (lambda_um * kMicron);
}

inline constexpr double lambda_um_from_omega(double omega) {
    return 2.0 * kPi * kSpeedOfLight / omega / kMicron;
}

}  // namespace fwmpair

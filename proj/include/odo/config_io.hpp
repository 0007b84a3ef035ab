#pragma once

#include <memory>
#include <string>

#include "odo/config.hpp"
#include "odo/motion.hpp"

namespace odo {

/// Parses a JSON configuration. Every key is optional and defaults to the
/// replay configuration; unknown keys are rejected. Rationals are written
/// as [num, den]; speed_scale also accepts "derived".
/// Parse failures throw std::runtime_error with a line or key diagnostic.
OdoConfig config_from_json_text(const std::string& text);
OdoConfig load_config_file(const std::string& path);

/// Parses a declarative motion-profile spec, e.g.
///   {"kind": "trapezoid", "accel_mps2": 0.5, "cruise_speed_mps": 0.3,
///    "cruise_duration_s": 5.0, "decel_mps2": 0.5}
/// Kinds: polynomial (c1, c2, c3), trapezoid, sinusoid (mean_speed_mps,
/// omega_rad_per_s), piecewise (segments: [{duration_s, profile}]).
/// Missing required keys and unknown keys are reported by name.
std::shared_ptr<const MotionProfile> profile_from_json_text(const std::string& text);

/// Loads a profile spec from a file path, or parses `spec` inline when it
/// starts with '{'.
std::shared_ptr<const MotionProfile> load_profile(const std::string& spec);

} // namespace odo

#include "odo/config.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace odo {

double delta_s_res(const OdoConfig& config) {
    return std::numbers::pi * config.wheel_diameter_m / (6.0 * config.tpw);
}

Rat OdoConfig::derived_speed_scale() const {
    const Rat res_m = delta_s_res_approx_mm / Rat(1000);
    return res_m / (Rat(static_cast<std::int64_t>(n_avg)) * sampling_interval_s * kSpeedResolution);
}

Rat OdoConfig::accel_scale() const {
    return kSpeedResolution /
           (Rat(static_cast<std::int64_t>(n_avg)) * sampling_interval_s * kAccelResolution);
}

Rat OdoConfig::jerk_scale() const {
    return kAccelResolution /
           (Rat(static_cast<std::int64_t>(n_avg)) * sampling_interval_s * kJerkResolution);
}

bool OdoConfig::sampling_sound() const {
    return sampling_interval_s.to_double() * speed_max_mps < delta_s_res(*this);
}

std::vector<std::string> OdoConfig::validate() const {
    std::vector<std::string> problems;
    if (tpw == 0) problems.push_back("tpw must be positive");
    if (!(wheel_diameter_m > 0)) problems.push_back("wheel_diameter_m must be positive");
    if (n_avg < 2) problems.push_back("n_avg must be at least 2");
    if (!(sampling_interval_s > Rat(0)))
        problems.push_back("sampling_interval_s must be positive");
    else if (!((sampling_interval_s / kTimeResolution).den() == 1))
        problems.push_back("sampling_interval_s must be a multiple of the 1e-2 s time resolution");
    if (!(speed_max_mps > 0)) problems.push_back("speed_max_mps must be positive");
    if (!(accel_max_mps2 > 0)) problems.push_back("accel_max_mps2 must be positive");
    if (!(delta_s_res_approx_mm > Rat(0)))
        problems.push_back("delta_s_res_approx_mm must be positive");
    else if (!fitted && tpw > 0 && wheel_diameter_m > 0) {
        const double exact_mm = 1000.0 * delta_s_res(*this);
        const double approx_mm = delta_s_res_approx_mm.to_double();
        if (std::abs(approx_mm - exact_mm) > 0.01 * exact_mm)
            problems.push_back(
                "delta_s_res_approx_mm deviates more than 1% from pi*wheel_diameter/(6*tpw); "
                "set fitted=true to allow a replay-fitted value");
    }
    return problems;
}

void OdoConfig::ensure_valid() const {
    const auto problems = validate();
    if (problems.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw std::invalid_argument(msg);
}

} // namespace odo

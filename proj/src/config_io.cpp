#include "odo/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace odo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

json parse_or_diagnose(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(what + ": parse error at line " + std::to_string(line_of_offset(text, e.byte)) +
             ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& what) {
    if (!obj.is_object()) fail(what + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) fail(what + ": unknown key '" + key + "'");
    }
}

Rat rat_from_json(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        fail("config key '" + key + "': expected a rational as [num, den]");
    const std::int64_t num = j[0].get<std::int64_t>();
    const std::int64_t den = j[1].get<std::int64_t>();
    if (den <= 0) fail("config key '" + key + "': denominator must be positive");
    return Rat(num, den);
}

double require_number(const json& obj, const char* key, const std::string& what) {
    if (!obj.contains(key)) fail(what + ": missing key '" + std::string(key) + "'");
    if (!obj.at(key).is_number()) fail(what + ": key '" + std::string(key) + "' must be a number");
    return obj.at(key).get<double>();
}

std::shared_ptr<const MotionProfile> profile_from_json(const json& spec);

std::shared_ptr<const MotionProfile> polynomial_from_json(const json& spec) {
    reject_unknown_keys(spec, {"kind", "c1", "c2", "c3"}, "polynomial profile");
    const double c1 = spec.value("c1", 0.0);
    const double c2 = spec.value("c2", 0.0);
    const double c3 = spec.value("c3", 0.0);
    return std::make_shared<PolynomialProfile>(c1, c2, c3);
}

std::shared_ptr<const MotionProfile> trapezoid_from_json(const json& spec) {
    reject_unknown_keys(
        spec, {"kind", "accel_mps2", "cruise_speed_mps", "cruise_duration_s", "decel_mps2"},
        "trapezoid profile");
    const double accel = require_number(spec, "accel_mps2", "trapezoid profile");
    const double cruise = require_number(spec, "cruise_speed_mps", "trapezoid profile");
    return std::make_shared<TrapezoidProfile>(accel, cruise, spec.value("cruise_duration_s", 0.0),
                                              spec.value("decel_mps2", 0.0));
}

std::shared_ptr<const MotionProfile> sinusoid_from_json(const json& spec) {
    reject_unknown_keys(spec, {"kind", "mean_speed_mps", "omega_rad_per_s"}, "sinusoid profile");
    const double mean = require_number(spec, "mean_speed_mps", "sinusoid profile");
    const double omega = require_number(spec, "omega_rad_per_s", "sinusoid profile");
    return std::make_shared<SinusoidProfile>(mean, omega);
}

std::shared_ptr<const MotionProfile> piecewise_from_json(const json& spec) {
    reject_unknown_keys(spec, {"kind", "segments"}, "piecewise profile");
    if (!spec.contains("segments") || !spec.at("segments").is_array() ||
        spec.at("segments").empty())
        fail("piecewise profile: missing key 'segments' (non-empty array)");
    std::vector<PiecewiseProfile::Segment> segments;
    for (const auto& seg : spec.at("segments")) {
        reject_unknown_keys(seg, {"duration_s", "profile"}, "piecewise segment");
        if (!seg.contains("profile")) fail("piecewise segment: missing key 'profile'");
        segments.push_back({require_number(seg, "duration_s", "piecewise segment"),
                            profile_from_json(seg.at("profile"))});
    }
    return std::make_shared<PiecewiseProfile>(std::move(segments));
}

std::shared_ptr<const MotionProfile> profile_from_json(const json& spec) {
    if (!spec.is_object()) fail("profile: expected a JSON object");
    if (!spec.contains("kind")) fail("profile: missing key 'kind'");
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "polynomial") return polynomial_from_json(spec);
    if (kind == "trapezoid") return trapezoid_from_json(spec);
    if (kind == "sinusoid") return sinusoid_from_json(spec);
    if (kind == "piecewise") return piecewise_from_json(spec);
    fail("profile: unknown kind '" + kind + "'");
}

} // namespace

OdoConfig config_from_json_text(const std::string& text) {
    const json j = parse_or_diagnose(text, "config");
    if (!j.is_object()) fail("config: expected a JSON object");
    reject_unknown_keys(j,
                        {"tpw", "wheel_diameter_m", "n_avg", "sampling_interval_s",
                         "speed_max_mps", "accel_max_mps2", "delta_s_res_approx_mm",
                         "speed_scale", "fitted"},
                        "config");

    OdoConfig config;
    if (j.contains("tpw")) {
        if (!j.at("tpw").is_number_unsigned()) fail("config key 'tpw': must be a positive integer");
        config.tpw = j.at("tpw").get<std::uint32_t>();
    }
    if (j.contains("wheel_diameter_m"))
        config.wheel_diameter_m = require_number(j, "wheel_diameter_m", "config");
    if (j.contains("n_avg")) {
        if (!j.at("n_avg").is_number_unsigned()) fail("config key 'n_avg': must be an integer >= 2");
        config.n_avg = j.at("n_avg").get<std::size_t>();
    }
    if (j.contains("sampling_interval_s")) {
        // Given as seconds; snapped to the 1e-2 s time grid, which it must
        // already sit on.
        const double dt = require_number(j, "sampling_interval_s", "config");
        const double centis = dt * 100.0;
        const auto snapped = static_cast<std::int64_t>(std::llround(centis));
        if (snapped < 1 || std::abs(centis - static_cast<double>(snapped)) > 1e-9)
            fail("config key 'sampling_interval_s': must be a positive multiple of 0.01");
        config.sampling_interval_s = Rat(snapped, 100);
    }
    if (j.contains("speed_max_mps"))
        config.speed_max_mps = require_number(j, "speed_max_mps", "config");
    if (j.contains("accel_max_mps2"))
        config.accel_max_mps2 = require_number(j, "accel_max_mps2", "config");
    if (j.contains("fitted")) {
        if (!j.at("fitted").is_boolean()) fail("config key 'fitted': must be a boolean");
        config.fitted = j.at("fitted").get<bool>();
    }
    if (j.contains("delta_s_res_approx_mm"))
        config.delta_s_res_approx_mm =
            rat_from_json(j.at("delta_s_res_approx_mm"), "delta_s_res_approx_mm");
    if (j.contains("speed_scale")) {
        const auto& s = j.at("speed_scale");
        if (s.is_string()) {
            if (s.get<std::string>() != "derived")
                fail("config key 'speed_scale': expected [num, den] or \"derived\"");
            config.speed_scale = config.derived_speed_scale();
        } else {
            config.speed_scale = rat_from_json(s, "speed_scale");
        }
    }
    config.ensure_valid();
    return config;
}

OdoConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("config: cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return config_from_json_text(text.str());
}

std::shared_ptr<const MotionProfile> profile_from_json_text(const std::string& text) {
    return profile_from_json(parse_or_diagnose(text, "profile"));
}

std::shared_ptr<const MotionProfile> load_profile(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return profile_from_json_text(spec);
    std::ifstream in(spec);
    if (!in) fail("profile: cannot open '" + spec + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return profile_from_json_text(text.str());
}

} // namespace odo

#include "odo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace odo {

// ---------------------------------------------------------- admissibility

AdmissibilityReport is_normally_behaved(const MotionProfile& profile,
                                        const OdoConfig& config,
                                        std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("is_normally_behaved: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("is_normally_behaved: grid must be sorted");

    AdmissibilityReport report;
    for (double t : grid) {
        const double d = profile.distance_at(t);
        if (d < 0) report.violations.push_back({t, "distance negative", d});
        if (t <= 0 && d != 0.0)
            report.violations.push_back({t, "distance nonzero before start", d});
        const double v = profile.speed_at(t);
        if (std::abs(v) > config.speed_max_mps)
            report.violations.push_back({t, "speed above bound", v});
        const double a = profile.accel_at(t);
        if (std::abs(a) > config.accel_max_mps2)
            report.violations.push_back({t, "acceleration above bound", a});
    }
    report.ok = report.violations.empty();
    return report;
}

std::vector<double> default_check_grid(const OdoConfig& config, double horizon_s,
                                       std::size_t points_per_interval) {
    if (points_per_interval == 0) points_per_interval = 1;
    const double dt = config.sampling_interval_s.to_double();
    const double step = dt / static_cast<double>(points_per_interval);
    std::vector<double> grid{-1.0, -dt, 0.0};
    for (double t = step; t <= horizon_s + step / 2; t += step) grid.push_back(t);
    return grid;
}

// ---------------------------------------------------------- discretization

PhaseCode encoding(const MotionProfile& profile, const OdoConfig& config,
                   std::uint64_t init_enc_pos, double x) {
    const double d = profile.distance_at(x);
    const double steps = std::floor(d / delta_s_res(config));
    // nat-floor: clamp below zero (distances are nonnegative by contract,
    // this only guards rounding noise).
    const std::uint64_t n = steps <= 0 ? 0 : static_cast<std::uint64_t>(steps);
    return phase(n + init_enc_pos);
}

PhaseCode sampling(const MotionProfile& profile, const OdoConfig& config,
                   std::uint64_t init_enc_pos, double sample_interval_s,
                   std::uint64_t n) {
    if (!(sample_interval_s > 0))
        throw std::invalid_argument("sampling: interval must be positive");
    return encoding(profile, config, init_enc_pos,
                    static_cast<double>(n) * sample_interval_s);
}

std::vector<PhaseCode> sample_trace(const MotionProfile& profile,
                                    const OdoConfig& config,
                                    std::uint64_t init_enc_pos,
                                    double sample_interval_s,
                                    std::size_t horizon_n) {
    if (horizon_n == 0) throw std::invalid_argument("sample_trace: horizon must be >= 1");
    std::vector<PhaseCode> codes;
    codes.reserve(horizon_n);
    for (std::size_t n = 0; n < horizon_n; ++n)
        codes.push_back(sampling(profile, config, init_enc_pos, sample_interval_s, n));
    return codes;
}

// -------------------------------------------------------------- retraction

bool is_valid_retraction(std::span<const PhaseCode> fine,
                         std::span<const PhaseCode> coarse,
                         std::span<const std::size_t> map) {
    if (map.size() != fine.size() || map.empty()) return false;
    if (map[0] != 0) return false;
    for (std::size_t n = 0; n < map.size(); ++n) {
        if (n > 0 && map[n] != map[n - 1] && map[n] != map[n - 1] + 1) return false;
        if (map[n] >= coarse.size()) return false;
        if (!(fine[n] == coarse[map[n]])) return false;
    }
    return true;
}

namespace {

struct DfsContext {
    std::span<const PhaseCode> fine;
    std::span<const PhaseCode> coarse;
    std::unordered_set<std::uint64_t> dead; // packed (n, j) states with no solution
    std::vector<std::size_t> path;
    std::size_t deepest = 0;

    static std::uint64_t pack(std::size_t n, std::size_t j) {
        return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(j);
    }

    // Invariant on entry: fine[n] == coarse[j].
    bool search(std::size_t n, std::size_t j) {
        path.push_back(j);
        deepest = std::max(deepest, n + 1);
        if (n + 1 == fine.size()) return true;
        for (std::size_t j2 : {j, j + 1}) {
            if (j2 >= coarse.size()) continue;
            if (!(fine[n + 1] == coarse[j2])) continue;
            if (dead.contains(pack(n + 1, j2))) continue;
            if (search(n + 1, j2)) return true;
        }
        dead.insert(pack(n, j));
        path.pop_back();
        return false;
    }
};

} // namespace

RetractionSearch find_retraction_detailed(std::span<const PhaseCode> fine,
                                          std::span<const PhaseCode> coarse) {
    if (fine.empty() || coarse.empty())
        throw std::invalid_argument("find_retraction: sequences must be non-empty");
    RetractionSearch result;
    if (!(fine[0] == coarse[0])) {
        result.matched_prefix = 0;
        return result;
    }
    DfsContext ctx{fine, coarse, {}, {}, 0};
    if (ctx.search(0, 0))
        result.retraction = Retraction{std::move(ctx.path)};
    result.matched_prefix = ctx.deepest;
    return result;
}

std::optional<Retraction> find_retraction(std::span<const PhaseCode> fine,
                                          std::span<const PhaseCode> coarse) {
    return find_retraction_detailed(fine, coarse).retraction;
}

// ----------------------------------------------------------- no-loss check

NoLossReport check_no_loss(const MotionProfile& profile, const OdoConfig& config,
                           std::uint64_t init_enc_pos, double horizon_s,
                           int refinements) {
    if (refinements < 1) throw std::invalid_argument("check_no_loss: refinements >= 1");
    if (!(horizon_s > 0)) throw std::invalid_argument("check_no_loss: horizon must be positive");

    NoLossReport report;
    report.hypothesis_holds = config.sampling_sound();
    report.admissible =
        is_normally_behaved(profile, config, default_check_grid(config, horizon_s)).ok;

    const double dt_odo = config.sampling_interval_s.to_double();
    const std::size_t coarse_steps = static_cast<std::size_t>(std::floor(horizon_s / dt_odo));
    const auto coarse = sample_trace(profile, config, init_enc_pos, dt_odo, coarse_steps + 1);

    report.all_pass = true;
    for (int k = 0; k < refinements; ++k) {
        NoLossCheck check;
        check.divisor = k + 2;
        check.interval_s = dt_odo / check.divisor;
        const std::size_t fine_len = coarse_steps * static_cast<std::size_t>(check.divisor) + 1;
        const auto fine = sample_trace(profile, config, init_enc_pos, check.interval_s, fine_len);
        auto search = find_retraction_detailed(fine, coarse);
        check.pass = search.retraction.has_value();
        check.fail_index = check.pass ? 0 : search.matched_prefix;
        check.retraction = std::move(search.retraction);
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

// ------------------------------------------------------------ quantization

Rat resolution_of(Quantity q) {
    switch (q) {
        case Quantity::time: return kTimeResolution;
        case Quantity::distance: return kDistanceResolution;
        case Quantity::speed: return kSpeedResolution;
        case Quantity::accel: return kAccelResolution;
        case Quantity::jerk: return kJerkResolution;
    }
    throw std::logic_error("resolution_of: bad quantity");
}

std::uint32_t quantize(double value, Quantity q) {
    const double steps = value / resolution_of(q).to_double();
    if (!(steps >= 0.0) || steps >= 4294967296.0)
        throw std::domain_error("quantize: value outside the 32-bit range of its resolution");
    return static_cast<std::uint32_t>(std::floor(steps));
}

double dequantize(std::uint32_t word, Quantity q) {
    return static_cast<double>(word) * resolution_of(q).to_double();
}

double dequantize_signed(std::int32_t word, Quantity q) {
    return static_cast<double>(word) * resolution_of(q).to_double();
}

} // namespace odo

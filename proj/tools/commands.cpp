#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "odo/config_io.hpp"
#include "odo/harness.hpp"
#include "odo/sampling.hpp"
#include "odo/state.hpp"

namespace odo::cli {

namespace {

const char* bool_word(bool b) { return b ? "true" : "false"; }

void print_step(std::ostream& out, unsigned shaft_index, const OdoOutput& o) {
    out << "shaft: " << shaft_index << " stat: " << bool_word(o.odometer_status)
        << " valid: " << bool_word(o.odometric_position_valid)
        << " count:" << o.odometric_position_count << " pos:" << o.relative_position
        << " speed:" << o.speed << "\n";
}

int replay_indices(const std::vector<unsigned>& indices, const OdoConfig& config,
                   std::ostream& out) {
    OdoState state = mk_init(initial_row_for(indices.front()), config);
    for (unsigned index : indices) {
        auto step = odo_step({code_from_fixture_index(index), false}, state, config);
        print_step(out, index, step->first);
        state = std::move(step->second);
    }
    const bool ok = state.odometer_status && state.odometric_position_valid;
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int cmd_replay(const std::vector<int>& codes, const OdoConfig& config,
               std::ostream& out, std::ostream& err) {
    if (codes.empty()) {
        err << "replay: need at least one code (1..6)\n";
        return kExitUsage;
    }
    std::vector<unsigned> indices;
    for (int c : codes) {
        if (c < 1 || c > 6) {
            err << "replay: code out of range 1..6: " << c << "\n";
            return kExitUsage;
        }
        indices.push_back(static_cast<unsigned>(c));
    }
    return replay_indices(indices, config, out);
}

int cmd_replay_fixture(std::istream& fixture, const OdoConfig& config,
                       std::ostream& out, std::ostream& err) {
    std::vector<PhaseCode> codes;
    try {
        codes = parse_fixture(fixture);
    } catch (const std::exception& e) {
        err << "replay: " << e.what() << "\n";
        return kExitUsage;
    }
    if (codes.empty()) {
        err << "replay: fixture contains no codes\n";
        return kExitUsage;
    }
    std::vector<unsigned> indices;
    for (const auto& c : codes) indices.push_back(fixture_index(c));
    return replay_indices(indices, config, out);
}

int cmd_simulate(const SimulateOptions& options, const OdoConfig& config,
                 std::ostream& out, std::ostream& err) {
    std::shared_ptr<const MotionProfile> profile;
    try {
        profile = load_profile(options.profile_spec);
    } catch (const std::exception& e) {
        err << "simulate: " << e.what() << "\n";
        return kExitUsage;
    }
    if (options.horizon == 0) {
        err << "simulate: horizon must be >= 1\n";
        return kExitUsage;
    }

    auto generated = trace_from_profile(*profile, config, options.init_enc_pos, options.horizon);
    if (!generated.trace) {
        for (const auto& p : generated.problems) err << "simulate: " << p << "\n";
        return kExitCheckFailed;
    }
    const auto& trace = *generated.trace;

    const double dt = config.sampling_interval_s.to_double();
    std::vector<bool> marker(options.horizon, false);
    for (double t : options.marker_times_s) {
        const auto n = static_cast<std::int64_t>(std::llround(t / dt));
        if (n < 0 || static_cast<std::size_t>(n) >= options.horizon) {
            err << "simulate: marker time outside the horizon: " << t << "\n";
            return kExitUsage;
        }
        marker[static_cast<std::size_t>(n)] = true;
    }

    OdoState state = mk_init(initial_row_for(trace.init_index), config);
    out << "n,t_s,c1,c2,c3,status,valid,count,timestamp,rel_pos_mm,speed_u,accel_u,jerk_u,"
           "true_pos_m,true_speed_mps\n";
    char buffer[64];
    for (std::size_t n = 0; n < trace.codes.size(); ++n) {
        auto step = odo_step({trace.codes[n], marker[n]}, state, config);
        const OdoOutput& o = step->first;
        const double t = static_cast<double>(n) * dt;
        std::snprintf(buffer, sizeof buffer, "%.9g", t);
        out << n << ',' << buffer << ',' << trace.codes[n].c1 << ',' << trace.codes[n].c2
            << ',' << trace.codes[n].c3 << ',' << o.odometer_status << ','
            << o.odometric_position_valid << ',' << o.odometric_position_count << ','
            << o.odometric_position_timestamp << ',' << o.relative_position << ','
            << o.speed << ',' << o.acceleration << ',' << o.jerk;
        std::snprintf(buffer, sizeof buffer, ",%.9g", trace.ground_truth->position_m[n]);
        out << buffer;
        std::snprintf(buffer, sizeof buffer, ",%.9g", trace.ground_truth->speed_mps[n]);
        out << buffer << "\n";
        state = std::move(step->second);
    }
    return kExitOk;
}

int cmd_check_sampling(const CheckSamplingOptions& options, const OdoConfig& config,
                       std::ostream& out, std::ostream& err) {
    std::shared_ptr<const MotionProfile> profile;
    try {
        profile = load_profile(options.profile_spec);
    } catch (const std::exception& e) {
        err << "check-sampling: " << e.what() << "\n";
        return kExitUsage;
    }
    if (options.refinements < 1 || !(options.horizon_s > 0)) {
        err << "check-sampling: need refinements >= 1 and a positive horizon\n";
        return kExitUsage;
    }

    const auto report = check_no_loss(*profile, config, options.init_enc_pos,
                                      options.horizon_s, options.refinements);
    out << "profile: " << profile->describe() << "\n";
    out << "hypothesis dt*speed_max < delta_s_res: "
        << (report.hypothesis_holds ? "holds" : "VIOLATED") << "\n";
    out << "normally behaved on check grid: " << (report.admissible ? "yes" : "NO") << "\n";
    for (const auto& check : report.checks) {
        out << "refine /" << check.divisor << " (dt=" << check.interval_s << "s): ";
        if (check.pass)
            out << "pass\n";
        else
            out << "FAIL, first lost code at fine index " << check.fail_index << "\n";
    }
    return report.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
    if (options.length == 0) {
        err << "gen: length must be >= 1\n";
        return kExitUsage;
    }
    EncoderTrace trace = gen_valid_sequence(options.length, options.seed);
    for (const auto& fault : options.faults) {
        const auto at = fault.find('@');
        FaultKind kind;
        const std::string name = fault.substr(0, at);
        if (name == "error_code_ttt")
            kind = FaultKind::error_code_ttt;
        else if (name == "error_code_fff")
            kind = FaultKind::error_code_fff;
        else if (name == "skip_transition")
            kind = FaultKind::skip_transition;
        else if (name == "reverse_glitch")
            kind = FaultKind::reverse_glitch;
        else if (name == "underflow_probe")
            kind = FaultKind::underflow_probe;
        else {
            err << "gen: unknown fault kind '" << name << "'\n";
            return kExitUsage;
        }
        std::size_t pos = 0;
        try {
            if (at == std::string::npos) throw std::invalid_argument(fault);
            pos = std::stoul(fault.substr(at + 1));
        } catch (const std::exception&) {
            err << "gen: expected kind@position, got '" << fault << "'\n";
            return kExitUsage;
        }
        if (pos >= trace.codes.size()) {
            err << "gen: fault position " << pos << " beyond trace length "
                << trace.codes.size() << "\n";
            return kExitUsage;
        }
        trace = inject_faults(trace, {kind, {pos}});
    }
    out << "# seed=" << options.seed << " len=" << options.length
        << " init_row=" << trace.init_index << "\n";
    write_fixture(out, trace.codes);
    return kExitOk;
}

} // namespace odo::cli

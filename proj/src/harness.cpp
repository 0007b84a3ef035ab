#include "odo/harness.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "odo/sampling.hpp"
#include "odo/state.hpp"

namespace odo {

EncoderTrace gen_valid_sequence(std::size_t length, std::uint32_t seed) {
    if (length < 1) throw std::invalid_argument("gen_valid_sequence: length must be >= 1");
    std::uint32_t x = seed;
    const auto draw = [&x] {
        x = 1664525u * x + 1013904223u;
        return x;
    };
    EncoderTrace trace;
    trace.init_index = draw() % 6;
    trace.codes.reserve(length);
    std::int64_t pos = 0;
    for (std::size_t i = 0; i < length; ++i) {
        const int step = static_cast<int>((draw() >> 16) % 3) - 1;
        pos = std::abs(pos + step);
        trace.codes.push_back(phase0(trace.init_index + static_cast<std::uint64_t>(pos)));
    }
    return trace;
}

TraceResult trace_from_profile(const MotionProfile& profile, const OdoConfig& config,
                               std::uint64_t init_enc_pos, std::size_t horizon) {
    TraceResult result;
    const double dt = config.sampling_interval_s.to_double();
    const auto report =
        is_normally_behaved(profile, config, default_check_grid(config, horizon * dt));
    if (!report.ok) {
        for (const auto& v : report.violations)
            result.problems.push_back(v.constraint + " at t=" + std::to_string(v.t));
        return result;
    }
    if (!config.sampling_sound()) {
        result.problems.push_back(
            "sampling-soundness hypothesis violated: sampling_interval * speed_max >= delta_s_res");
        return result;
    }
    EncoderTrace trace;
    trace.init_index = initial_row_for(init_enc_pos);
    trace.codes = sample_trace(profile, config, init_enc_pos, dt, horizon);
    TraceGroundTruth truth;
    truth.profile = profile.describe();
    truth.sampling_interval_s = dt;
    for (std::size_t n = 0; n < horizon; ++n) {
        const double t = static_cast<double>(n) * dt;
        truth.position_m.push_back(profile.distance_at(t));
        truth.speed_mps.push_back(profile.speed_at(t));
    }
    trace.ground_truth = std::move(truth);
    result.trace = std::move(trace);
    return result;
}

EncoderTrace inject_faults(const EncoderTrace& trace, const FaultSpec& spec) {
    for (std::size_t p : spec.positions)
        if (p >= trace.codes.size())
            throw std::invalid_argument("inject_faults: position beyond trace length");

    EncoderTrace result;
    result.init_index = trace.init_index;
    result.codes = trace.codes;
    for (std::size_t p : spec.positions) {
        const PhaseCode prev = p == 0 ? phase0(trace.init_index) : trace.codes[p - 1];
        switch (spec.kind) {
            case FaultKind::error_code_ttt:
                result.codes[p] = {true, true, true};
                break;
            case FaultKind::error_code_fff:
                result.codes[p] = {false, false, false};
                break;
            case FaultKind::skip_transition: {
                const auto row = phase_row(prev);
                result.codes[p] = phase0((row ? *row : 0u) + 2);
                break;
            }
            case FaultKind::reverse_glitch: {
                const auto row = phase_row(prev);
                result.codes[p] = phase0((row ? *row : 0u) + 5);
                break;
            }
            case FaultKind::underflow_probe:
                result.codes[p] = phase0(trace.init_index + 5);
                break;
        }
    }
    return result;
}

double default_speed_tolerance(const OdoConfig& config) {
    const double window_s = static_cast<double>(config.n_avg) *
                            config.sampling_interval_s.to_double();
    return delta_s_res(config) / window_s + 0.5 * config.accel_max_mps2 * window_s +
           kSpeedResolution.to_double();
}

std::uint64_t initial_row_for(std::uint64_t init_enc_pos) {
    return *phase_row(phase(init_enc_pos));
}

namespace {

struct MachineRun {
    std::vector<OdoOutput> outputs;
    bool stayed_valid = true;
};

MachineRun run_trace(const EncoderTrace& trace, const OdoConfig& config) {
    const auto init = mk_init(trace.init_index, config);
    const auto inputs = inputs_from_codes(trace.codes);
    MachineRun r;
    auto [outputs, final_state] = run(init, inputs, config);
    r.outputs = std::move(outputs);
    r.stayed_valid = final_state.odometer_status && final_state.odometric_position_valid;
    return r;
}

} // namespace

AccuracyReport check_speed_accuracy(const MotionProfile& profile, const OdoConfig& config,
                                    std::uint64_t init_enc_pos, std::size_t horizon,
                                    std::optional<double> tolerance) {
    AccuracyReport report;
    if (horizon <= config.n_avg) {
        report.problems.push_back("horizon must exceed n_avg");
        return report;
    }
    auto generated = trace_from_profile(profile, config, init_enc_pos, horizon);
    if (!generated.trace) {
        report.problems = std::move(generated.problems);
        return report;
    }
    const auto& trace = *generated.trace;
    const auto machine = run_trace(trace, config);
    if (!machine.stayed_valid) {
        report.problems.push_back("state machine flagged the sampled trace as faulty");
        return report;
    }

    report.tolerance = tolerance.value_or(default_speed_tolerance(config));
    report.pass = true;
    report.first_violation = trace.codes.size();
    for (std::size_t k = config.n_avg; k < trace.codes.size(); ++k) {
        const double measured = dequantize_signed(machine.outputs[k].speed, Quantity::speed);
        const double err = std::abs(measured - trace.ground_truth->speed_mps[k]);
        if (err > report.max_error) {
            report.max_error = err;
            report.worst_step = k;
        }
        if (err > report.tolerance && report.pass) {
            report.pass = false;
            report.first_violation = k;
        }
    }
    return report;
}

AccuracyReport check_position_accuracy(const MotionProfile& profile, const OdoConfig& config,
                                       std::uint64_t init_enc_pos, std::size_t horizon) {
    AccuracyReport report;
    if (horizon <= config.n_avg) {
        report.problems.push_back("horizon must exceed n_avg");
        return report;
    }
    auto generated = trace_from_profile(profile, config, init_enc_pos, horizon);
    if (!generated.trace) {
        report.problems = std::move(generated.problems);
        return report;
    }
    const auto& trace = *generated.trace;
    const auto machine = run_trace(trace, config);
    if (!machine.stayed_valid) {
        report.problems.push_back("state machine flagged the sampled trace as faulty");
        return report;
    }

    const double res = delta_s_res(config);
    report.tolerance = 2.0 * res;
    report.pass = true;
    report.first_violation = trace.codes.size();
    for (std::size_t k = 0; k < trace.codes.size(); ++k) {
        const double measured =
            static_cast<double>(machine.outputs[k].odometric_position_count) * res;
        const double err = std::abs(measured - trace.ground_truth->position_m[k]);
        if (err > report.max_error) {
            report.max_error = err;
            report.worst_step = k;
        }
        if (err > report.tolerance && report.pass) {
            report.pass = false;
            report.first_violation = k;
        }
    }
    return report;
}

// ------------------------------------------------------------------ fixture

unsigned fixture_index(const PhaseCode& code) {
    if (code == PhaseCode{false, false, false}) return 0;
    if (code == PhaseCode{true, true, true}) return 7;
    return *phase_row(code) + 1;
}

PhaseCode code_from_fixture_index(unsigned index) {
    if (index == 0) return {false, false, false};
    if (index == 7) return {true, true, true};
    if (index > 7) throw std::invalid_argument("fixture index must be in 0..7");
    return phase(index);
}

std::vector<PhaseCode> parse_fixture(std::istream& in) {
    std::vector<PhaseCode> codes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            unsigned value = 0;
            try {
                std::size_t used = 0;
                value = static_cast<unsigned>(std::stoul(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                         ": not a code index: '" + token + "'");
            }
            if (value > 7)
                throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                         ": code index out of range 0..7: " + token);
            codes.push_back(code_from_fixture_index(value));
        }
    }
    return codes;
}

std::vector<PhaseCode> parse_fixture_text(const std::string& text) {
    std::istringstream in(text);
    return parse_fixture(in);
}

void write_fixture(std::ostream& out, std::span<const PhaseCode> codes) {
    for (const auto& c : codes) out << fixture_index(c) << "\n";
}

} // namespace odo

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odo/config.hpp"
#include "odo/motion.hpp"
#include "odo/phase.hpp"

namespace odo {

struct TraceGroundTruth {
    std::string profile;
    double sampling_interval_s = 0.0;
    std::vector<double> position_m;  // per step, at t = n * interval
    std::vector<double> speed_mps;
};

/// An encoder input sequence plus, when it was sampled from a motion
/// profile, the per-step physical truth it discretizes. init_index is the
/// table row of the machine's initial sample: replay with mk_init(init_index).
struct EncoderTrace {
    std::uint64_t init_index = 0;
    std::vector<PhaseCode> codes;
    std::optional<TraceGroundTruth> ground_truth;
};

/// Deterministic pseudorandom valid sequence: a +1/0/-1 walk on the
/// relative position, reflected at 0 so it never returns past its start.
///
/// The generator is pinned so fixtures reproduce bit-identically across
/// implementations: x_{k+1} = 1664525 * x_k + 1013904223 (mod 2^32) with
/// x_0 = seed; the first draw mod 6 is the initial table row; every later
/// draw yields a step ((draw >> 16) mod 3) - 1, and the walk position is
/// |pos + step|.
EncoderTrace gen_valid_sequence(std::size_t length, std::uint32_t seed);

struct TraceResult {
    std::optional<EncoderTrace> trace;
    std::vector<std::string> problems;
};

/// Samples the profile at the configured interval over `horizon` steps and
/// attaches ground truth. Refuses to generate (reporting why) when the
/// profile violates admissibility or the configuration violates the
/// sampling-soundness hypothesis.
TraceResult trace_from_profile(const MotionProfile& profile, const OdoConfig& config,
                               std::uint64_t init_enc_pos, std::size_t horizon);

enum class FaultKind {
    error_code_ttt,
    error_code_fff,
    skip_transition, ///< +2 jump relative to the previous code's row
    reverse_glitch,  ///< -1 step relative to the previous code's row
    underflow_probe, ///< backward code at the start row; trips only at count 0
};

struct FaultSpec {
    FaultKind kind;
    std::vector<std::size_t> positions;
};

/// Mutates the trace at the given positions. Rows are taken from the
/// original (pre-mutation) codes; ground truth is dropped.
EncoderTrace inject_faults(const EncoderTrace& trace, const FaultSpec& spec);

struct AccuracyReport {
    bool pass = false;
    double tolerance = 0.0;
    double max_error = 0.0;
    std::size_t worst_step = 0;
    /// First step over tolerance (only meaningful when !pass).
    std::size_t first_violation = 0;
    std::vector<std::string> problems;
};

/// Default speed tolerance: quantization + window lag + output rounding,
/// i.e. delta_s_res/(n_avg*dt) + accel_max*n_avg*dt/2 + speed resolution.
double default_speed_tolerance(const OdoConfig& config);

/// Empirical stand-in for the speed-accuracy conjecture: runs the state
/// machine over the profile's sampled trace and compares the dequantized
/// output speed at every step k >= n_avg against the analytic speed at
/// t = k * dt.
AccuracyReport check_speed_accuracy(const MotionProfile& profile, const OdoConfig& config,
                                    std::uint64_t init_enc_pos, std::size_t horizon,
                                    std::optional<double> tolerance = std::nullopt);

/// Position analogue: |count * delta_s_res - distance(t)| <= 2 * delta_s_res
/// at every step (one resolution step of quantization plus one of phase
/// offset).
AccuracyReport check_position_accuracy(const MotionProfile& profile, const OdoConfig& config,
                                       std::uint64_t init_enc_pos, std::size_t horizon);

/// Table row of the machine's initial sample for a trace that starts with
/// phase(init_enc_pos) — i.e. the row of the code emitted at distance 0.
std::uint64_t initial_row_for(std::uint64_t init_enc_pos);

// ------------------------------------------------------------------ fixture
//
// Trace fixture format: one code index per line, '#' starts a comment,
// blank lines ignored. Indices 1..6 mean phase(i); 0 and 7 are the
// all-clear / all-set error patterns (an extension used by fault fixtures).

std::vector<PhaseCode> parse_fixture(std::istream& in);
std::vector<PhaseCode> parse_fixture_text(const std::string& text);
void write_fixture(std::ostream& out, std::span<const PhaseCode> codes);

/// Fixture index (0..7) of a code: row + 1 for table codes, 0 for (0,0,0),
/// 7 for (1,1,1).
unsigned fixture_index(const PhaseCode& code);
PhaseCode code_from_fixture_index(unsigned index);

} // namespace odo

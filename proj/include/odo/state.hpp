#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "odo/config.hpp"
#include "odo/phase.hpp"

namespace odo {

/// Two's-complement view of a 32-bit word.
constexpr std::int32_t to_signed(std::uint32_t w) { return std::bit_cast<std::int32_t>(w); }
constexpr std::uint32_t to_unsigned(std::int32_t v) { return std::bit_cast<std::uint32_t>(v); }

struct OdoInput {
    PhaseCode encoder;
    bool marker = false;
};

/// State of the odometer function. All three history queues are newest
/// first and hold exactly n_avg entries at all times. Once odometer_status
/// or odometric_position_valid has dropped to false it never recovers.
///
/// last_marker_*, speed_history and accel_history are extensions of the
/// core record: they feed the marker latch and the acceleration / jerk
/// differences, and the core behaviour is unchanged if they are ignored.
struct OdoState {
    std::vector<PhaseCode> samples;
    std::vector<std::uint32_t> position_count_queue;
    bool odometer_status = true;
    bool odometric_position_valid = true;
    std::uint32_t odometric_position_count = 0;
    std::uint32_t odometric_position_timestamp = 0;
    std::uint32_t offset = 0; // initial table row, < 6

    // extension fields
    std::uint32_t last_marker_position = 0;
    std::uint32_t last_marker_timestamp = 0;
    std::vector<std::int32_t> speed_history;
    std::vector<std::int32_t> accel_history;
};

struct OdoOutput {
    bool odometer_status = true;
    bool odometric_position_valid = true;
    std::uint32_t odometric_position_count = 0;
    std::uint32_t odometric_position_timestamp = 0;
    std::uint32_t last_marker_position = 0;
    std::uint32_t last_marker_timestamp = 0;
    std::uint32_t relative_position = 0; ///< mm
    std::int32_t speed = 0;              ///< output speed units
    std::int32_t acceleration = 0;
    std::int32_t jerk = 0;
    std::uint32_t cinematics_timestamp = 0;
};

/// Initial state for a shaft stopped at table row n: every sample is
/// phase0(n), all counts and timestamps zero, flags true, offset = n mod 6.
OdoState mk_init(std::uint64_t n, const OdoConfig& config);

/// Word-level position update: the phase comparison is done on the
/// unbounded value of pos (mod 6), the returned position wraps mod 2^32.
std::uint32_t next_phase_word(std::uint32_t pos, const PhaseCode& code);

/// One step of the odometer function.
///
/// The input code is checked against the previous sample (sequence fault,
/// with equal codes allowed) and against the underflow guard; the status
/// flag absorbs error codes, the valid flag absorbs faults, and both are
/// monotone. Position count and timestamp advance only while the state is
/// valid and the step fault-free; the sample and count queues always shift.
/// Speed is the scaled difference between the newest and oldest queued
/// counts, rounded half-up; acceleration and jerk are the same window
/// difference applied to the speed and acceleration outputs.
///
/// The optional result is never absent; the wrapper mirrors the shape used
/// by the sequential test harness.
std::optional<std::pair<OdoOutput, OdoState>> odo_step(const OdoInput& input,
                                                       const OdoState& state,
                                                       const OdoConfig& config);

/// Left-to-right fold of odo_step, collecting every output.
std::pair<std::vector<OdoOutput>, OdoState> run(const OdoState& init,
                                                std::span<const OdoInput> inputs,
                                                const OdoConfig& config);

/// Runs the inputs and applies the predicate to the final state. A false
/// result is meant to surface as a test or CLI failure.
bool assert_final(const OdoState& init, std::span<const OdoInput> inputs,
                  const OdoConfig& config,
                  const std::function<bool(const OdoState&)>& predicate);

/// Marker-less input sequence from raw encoder codes.
std::vector<OdoInput> inputs_from_codes(std::span<const PhaseCode> codes);

} // namespace odo

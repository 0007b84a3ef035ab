#include "odo/state.hpp"

#include <stdexcept>

namespace odo {

namespace {

// Newest-first bounded queue shift: push then drop the oldest.
template <typename T>
void shift_in(std::vector<T>& queue, const T& value) {
    queue.insert(queue.begin(), value);
    queue.pop_back();
}

std::uint32_t wrap32(std::int64_t v) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(v));
}

void check_state(const OdoState& state, const OdoConfig& config) {
    const std::size_t n = config.n_avg;
    if (state.samples.size() != n || state.position_count_queue.size() != n ||
        state.speed_history.size() != n || state.accel_history.size() != n)
        throw std::invalid_argument("odo_step: state queues must have length n_avg");
    if (state.offset >= 6) throw std::invalid_argument("odo_step: offset must be < 6");
}

} // namespace

OdoState mk_init(std::uint64_t n, const OdoConfig& config) {
    config.ensure_valid();
    OdoState s;
    s.samples.assign(config.n_avg, phase0(n));
    s.position_count_queue.assign(config.n_avg, 0);
    s.speed_history.assign(config.n_avg, 0);
    s.accel_history.assign(config.n_avg, 0);
    s.offset = static_cast<std::uint32_t>(n % 6);
    return s;
}

std::uint32_t next_phase_word(std::uint32_t pos, const PhaseCode& code) {
    const std::uint64_t p = pos;
    if (code == phase0(p + 1)) return pos + 1; // wraps mod 2^32
    if (code == phase0(p + 5)) return pos - 1;
    return pos;
}

std::optional<std::pair<OdoOutput, OdoState>> odo_step(const OdoInput& input,
                                                       const OdoState& state,
                                                       const OdoConfig& config) {
    check_state(state, config);

    const PhaseCode& in = input.encoder;
    const PhaseCode& last = state.samples.front();

    const bool no_err = !is_code_error(in);
    const bool no_fault =
        (last == in || !seq_fault(last, in)) &&
        !underflow_fault(state.odometric_position_count, state.offset, in);
    const bool advance = state.odometric_position_valid && no_fault;

    const std::uint32_t offset_w = state.offset;
    const std::uint32_t pos = state.odometric_position_count + offset_w;

    OdoState next = state;
    next.odometer_status = state.odometer_status && no_err;
    next.odometric_position_valid = advance;
    next.odometric_position_timestamp =
        state.odometric_position_timestamp + (advance ? 1u : 0u);
    next.odometric_position_count =
        advance ? next_phase_word(pos, in) - offset_w : state.odometric_position_count;
    shift_in(next.samples, in);
    shift_in(next.position_count_queue, next.odometric_position_count);

    const std::uint32_t count = next.odometric_position_count;
    const std::uint32_t pos_ante = next.position_count_queue[config.n_avg - 1];

    // Discrete outputs are exact rational arithmetic, then floor / half-up
    // rounding, then the 32-bit wrap of word_of_int.
    const Rat rel_pos_mm = Rat(static_cast<std::int64_t>(count)) * config.delta_s_res_approx_mm;
    const std::int64_t speed_delta =
        static_cast<std::int64_t>(to_signed(count)) - static_cast<std::int64_t>(to_signed(pos_ante));
    const std::int32_t speed_out =
        to_signed(wrap32((Rat(speed_delta) * config.speed_scale).round_half_up()));

    // Acceleration and jerk: first differences of the previous output order
    // over the same window, against the state histories.
    const std::int64_t speed_ante = state.speed_history[config.n_avg - 1];
    const std::int32_t accel_out = to_signed(
        wrap32((Rat(speed_out - speed_ante) * config.accel_scale()).round_half_up()));
    const std::int64_t accel_ante = state.accel_history[config.n_avg - 1];
    const std::int32_t jerk_out = to_signed(
        wrap32((Rat(accel_out - accel_ante) * config.jerk_scale()).round_half_up()));

    shift_in(next.speed_history, speed_out);
    shift_in(next.accel_history, accel_out);

    if (input.marker && next.odometric_position_valid) {
        next.last_marker_position = count;
        next.last_marker_timestamp = next.odometric_position_timestamp;
    }

    OdoOutput out;
    out.odometer_status = next.odometer_status;
    out.odometric_position_valid = next.odometric_position_valid;
    out.odometric_position_count = count;
    out.odometric_position_timestamp = next.odometric_position_timestamp;
    out.last_marker_position = next.last_marker_position;
    out.last_marker_timestamp = next.last_marker_timestamp;
    out.relative_position = wrap32(rel_pos_mm.floor());
    out.speed = speed_out;
    out.acceleration = accel_out;
    out.jerk = jerk_out;
    out.cinematics_timestamp = next.odometric_position_timestamp;

    return std::make_pair(out, std::move(next));
}

std::pair<std::vector<OdoOutput>, OdoState> run(const OdoState& init,
                                                std::span<const OdoInput> inputs,
                                                const OdoConfig& config) {
    std::vector<OdoOutput> outputs;
    outputs.reserve(inputs.size());
    OdoState state = init;
    for (const auto& input : inputs) {
        auto step = odo_step(input, state, config);
        outputs.push_back(step->first);
        state = std::move(step->second);
    }
    return {std::move(outputs), std::move(state)};
}

bool assert_final(const OdoState& init, std::span<const OdoInput> inputs,
                  const OdoConfig& config,
                  const std::function<bool(const OdoState&)>& predicate) {
    return predicate(run(init, inputs, config).second);
}

std::vector<OdoInput> inputs_from_codes(std::span<const PhaseCode> codes) {
    std::vector<OdoInput> inputs;
    inputs.reserve(codes.size());
    for (const auto& c : codes) inputs.push_back({c, false});
    return inputs;
}

} // namespace odo

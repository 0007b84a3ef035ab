#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace odo {

/// One optical snapshot of the shaft encoder: three sensors, 120 degrees
/// apart. All 8 bit patterns are representable; only 6 are valid codes.
/// (1,1,1) and (0,0,0) are physically impossible and signal a sensor error.
struct PhaseCode {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;

    friend constexpr bool operator==(const PhaseCode&, const PhaseCode&) = default;

    /// Bit view (c1 is the MSB): 0..7. Used to index the fault table.
    constexpr unsigned bits() const {
        return (c1 ? 4u : 0u) | (c2 ? 2u : 0u) | (c3 ? 1u : 0u);
    }
    static constexpr PhaseCode from_bits(unsigned b) {
        return {(b & 4u) != 0, (b & 2u) != 0, (b & 1u) != 0};
    }
};

/// Row n (mod 6) of the encoder code table. The cycle is 6, not 12: the
/// original 12-row table is redundant.
constexpr PhaseCode phase0(std::uint64_t n) {
    constexpr PhaseCode table[6] = {
        {false, false, true},  // 0
        {true, false, true},   // 1
        {true, false, false},  // 2
        {true, true, false},   // 3
        {false, true, false},  // 4
        {false, true, true},   // 5
    };
    return table[n % 6];
}

/// 1-indexed view of the table: phase(x) = phase0(x - 1), with truncating
/// natural subtraction, so phase(0) = phase(1) = phase0(0).
constexpr PhaseCode phase(std::uint64_t x) {
    return phase0(x == 0 ? 0 : x - 1);
}

/// True iff the snapshot is one of the two impossible patterns.
constexpr bool is_code_error(const PhaseCode& c) {
    return (c.c1 && c.c2 && c.c3) || (!c.c1 && !c.c2 && !c.c3);
}

/// Table row (0..5) of a valid code; nullopt for the two error patterns.
std::optional<unsigned> phase_row(const PhaseCode& c);

/// Position update for one encoder reading: pos+1 if the code matches the
/// next table row, else pos-1 (monus: 0-1 = 0) if it matches the previous
/// row, else pos unchanged. The increment test has priority; for the 6
/// valid codes the branches are mutually exclusive, so order only matters
/// for error inputs. The decrement at pos = 0 is guarded upstream by
/// underflow_fault.
std::uint64_t next_phase0(std::uint64_t pos, const PhaseCode& code);

/// Left fold of next_phase0 over a code sequence.
std::uint64_t fold_positions(std::uint64_t start, std::span<const PhaseCode> codes);

/// True iff no table position explains the transition last -> cur as a
/// +1 or -1 step. Decided by scanning n in 0..5 (complete by periodicity).
/// Note cur == last is a fault under this definition; callers compensate.
bool seq_fault(const PhaseCode& last, const PhaseCode& cur);

/// Precomputed 8x8 lookup with the same semantics as seq_fault.
bool seq_fault_table(const PhaseCode& last, const PhaseCode& cur);

/// A backward step attempted at relative position count 0.
bool underflow_fault(std::uint64_t count, std::uint64_t offset, const PhaseCode& code);

/// Replays a code sequence from a start position and checks that no code is
/// an error pattern, every transition is equal-or-adjacent, and no step
/// underflows past the start.
bool is_valid_sequence(std::uint64_t start, std::span<const PhaseCode> codes);

} // namespace odo

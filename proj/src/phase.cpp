#include "odo/phase.hpp"

namespace odo {

std::optional<unsigned> phase_row(const PhaseCode& c) {
    for (unsigned n = 0; n < 6; ++n)
        if (phase0(n) == c) return n;
    return std::nullopt;
}

std::uint64_t next_phase0(std::uint64_t pos, const PhaseCode& code) {
    if (code == phase0(pos + 1)) return pos + 1;
    if (code == phase0(pos + 5)) return pos == 0 ? 0 : pos - 1;
    return pos;
}

std::uint64_t fold_positions(std::uint64_t start, std::span<const PhaseCode> codes) {
    std::uint64_t pos = start;
    for (const auto& c : codes) pos = next_phase0(pos, c);
    return pos;
}

bool seq_fault(const PhaseCode& last, const PhaseCode& cur) {
    for (std::uint64_t n = 0; n < 6; ++n)
        if (phase0(n) == last && (phase0(n + 1) == cur || phase0(n + 5) == cur))
            return false;
    return true;
}

namespace {

// Row-by-row transcription of the rewrite rules that make seq_fault
// executable: entry [last.bits()][cur.bits()]. A non-fault needs cur to be
// the table neighbour of last, so error patterns (000, 111) fault against
// everything, and each valid code admits exactly two successors.
constexpr bool kSeqFault[8][8] = {
    // cur:  000    001    010    011    100    101    110    111
    /*000*/ {true,  true,  true,  true,  true,  true,  true,  true},
    /*001*/ {true,  true,  true,  false, true,  false, true,  true},
    /*010*/ {true,  true,  true,  false, true,  true,  false, true},
    /*011*/ {true,  false, false, true,  true,  true,  true,  true},
    /*100*/ {true,  true,  true,  true,  true,  false, false, true},
    /*101*/ {true,  false, true,  true,  false, true,  true,  true},
    /*110*/ {true,  true,  false, true,  false, true,  true,  true},
    /*111*/ {true,  true,  true,  true,  true,  true,  true,  true},
};

} // namespace

bool seq_fault_table(const PhaseCode& last, const PhaseCode& cur) {
    return kSeqFault[last.bits()][cur.bits()];
}

bool underflow_fault(std::uint64_t count, std::uint64_t offset, const PhaseCode& code) {
    return count == 0 && code == phase0(offset + 5);
}

bool is_valid_sequence(std::uint64_t start, std::span<const PhaseCode> codes) {
    PhaseCode last = phase0(start);
    const std::uint64_t offset = start % 6;
    std::uint64_t count = 0;
    for (const auto& c : codes) {
        if (is_code_error(c)) return false;
        if (!(c == last) && seq_fault(last, c)) return false;
        if (underflow_fault(count, offset, c)) return false;
        count = next_phase0(count + offset, c) - offset;
        last = c;
    }
    return true;
}

} // namespace odo

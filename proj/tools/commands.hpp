#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "odo/config.hpp"

namespace odo::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Feeds 1-indexed phase codes to a fresh odometer (initialized at the
/// first code) and prints one line per step in the reference format:
///   shaft: 1 stat: true valid: true count:0 pos:0 speed:0
/// Returns 0 iff the final state is both ok and valid.
int cmd_replay(const std::vector<int>& codes, const OdoConfig& config,
               std::ostream& out, std::ostream& err);

/// Replay from a fixture stream (indices 0..7 per line; 0 and 7 are the
/// error patterns).
int cmd_replay_fixture(std::istream& fixture, const OdoConfig& config,
                       std::ostream& out, std::ostream& err);

struct SimulateOptions {
    std::string profile_spec; // path or inline JSON
    std::size_t horizon = 0;
    std::uint64_t init_enc_pos = 1;
    std::vector<double> marker_times_s;
};

/// Samples a motion profile, runs the odometer over it, and writes a CSV
/// trace with the machine outputs next to the physical ground truth.
int cmd_simulate(const SimulateOptions& options, const OdoConfig& config,
                 std::ostream& out, std::ostream& err);

struct CheckSamplingOptions {
    std::string profile_spec;
    int refinements = 4;
    double horizon_s = 5.0;
    std::uint64_t init_enc_pos = 1;
};

/// Verifies that each refined sampling of the profile retracts onto the
/// configured sampling (no code loss); prints one line per refinement.
int cmd_check_sampling(const CheckSamplingOptions& options, const OdoConfig& config,
                       std::ostream& out, std::ostream& err);

struct GenOptions {
    std::size_t length = 0;
    std::uint32_t seed = 0;
    std::vector<std::string> faults; // kind@pos
};

/// Emits a deterministic valid test sequence in fixture format, optionally
/// with injected faults.
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

} // namespace odo::cli

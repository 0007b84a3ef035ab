#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odo/config.hpp"
#include "odo/motion.hpp"
#include "odo/phase.hpp"

namespace odo {

// ---------------------------------------------------------- admissibility

struct AdmissibilityViolation {
    double t;
    std::string constraint; // e.g. "speed above bound"
    double value;
};

struct AdmissibilityReport {
    bool ok = true;
    // The built-in profile families are differentiable by construction;
    // recorded here so the report covers every admissibility clause.
    bool differentiable_by_construction = true;
    std::vector<AdmissibilityViolation> violations;
};

/// Checks on the given grid that the profile is nonnegative, zero before the
/// start, and within the configured speed and acceleration bounds. The grid
/// must be non-empty and sorted ascending.
AdmissibilityReport is_normally_behaved(const MotionProfile& profile,
                                        const OdoConfig& config,
                                        std::span<const double> grid);

/// Default admissibility grid for [0, horizon_s]: `points_per_interval`
/// samples per sampling interval, plus a few probes at t <= 0.
std::vector<double> default_check_grid(const OdoConfig& config, double horizon_s,
                                       std::size_t points_per_interval = 10);

// ---------------------------------------------------------- discretization

/// Encoder snapshot produced by a distance function at time x:
/// phase(floor(distance / delta_s_res) + init_enc_pos). Uses the 1-indexed
/// phase view, and the exact resolution distance.
PhaseCode encoding(const MotionProfile& profile, const OdoConfig& config,
                   std::uint64_t init_enc_pos, double x);

/// encoding at t = n * sample_interval.
PhaseCode sampling(const MotionProfile& profile, const OdoConfig& config,
                   std::uint64_t init_enc_pos, double sample_interval_s,
                   std::uint64_t n);

/// Materialized sampling sequence for n = 0 .. horizon_n - 1.
std::vector<PhaseCode> sample_trace(const MotionProfile& profile,
                                    const OdoConfig& config,
                                    std::uint64_t init_enc_pos,
                                    double sample_interval_s,
                                    std::size_t horizon_n);

// -------------------------------------------------------------- retraction

/// A stuttering index map: map[0] = 0, steps in {0, 1}. Witnesses that a
/// finer sampling of the same motion is the coarser one with repetitions,
/// i.e. that the coarser sampling lost no code.
struct Retraction {
    std::vector<std::size_t> map;
};

/// True iff `map` is a valid stuttering retraction with
/// fine[n] == coarse[map[n]] for all n.
bool is_valid_retraction(std::span<const PhaseCode> fine,
                         std::span<const PhaseCode> coarse,
                         std::span<const std::size_t> map);

struct RetractionSearch {
    std::optional<Retraction> retraction;
    /// Longest fine prefix that embeds into the coarse sequence. When the
    /// search fails, matched_prefix is the first fine index that cannot be
    /// matched (the located lost code).
    std::size_t matched_prefix = 0;
};

/// Searches for a stuttering retraction by depth-first exploration over
/// (fine index, coarse index) states with memoization of dead states.
/// Greedy single-pass matching is incomplete when adjacent coarse codes
/// repeat, so both "stay" and "advance" branches are explored.
RetractionSearch find_retraction_detailed(std::span<const PhaseCode> fine,
                                          std::span<const PhaseCode> coarse);

std::optional<Retraction> find_retraction(std::span<const PhaseCode> fine,
                                          std::span<const PhaseCode> coarse);

// ----------------------------------------------------------- no-loss check

struct NoLossCheck {
    int divisor = 0;         ///< fine interval = sampling_interval / divisor
    double interval_s = 0.0;
    bool pass = false;
    std::size_t fail_index = 0; ///< first unmatched fine index when !pass
    std::optional<Retraction> retraction;
};

struct NoLossReport {
    bool hypothesis_holds = false; ///< dt_odo * Speed_Max < delta_s_res
    bool admissible = false;
    bool all_pass = false;
    std::vector<NoLossCheck> checks;
};

/// Desk-scale instantiation of the sampling soundness theorem: for each of
/// `refinements` finer intervals dt in {dt_odo/2, dt_odo/3, ...}, samples
/// the profile at dt and at dt_odo over [0, horizon_s] and verifies that a
/// stuttering retraction maps the fine trace onto the coarse one. Runs the
/// checks even when the hypothesis is violated — that is how a lossy
/// configuration is exhibited.
NoLossReport check_no_loss(const MotionProfile& profile, const OdoConfig& config,
                           std::uint64_t init_enc_pos, double horizon_s,
                           int refinements);

// ------------------------------------------------------------ quantization

enum class Quantity { time, distance, speed, accel, jerk };

Rat resolution_of(Quantity q);

/// floor(value / resolution) as an unsigned 32-bit word. Values outside
/// [0, 2^32 * resolution) are a domain error — no silent wrap on the
/// physics side.
std::uint32_t quantize(double value, Quantity q);

/// word * resolution, back in SI units.
double dequantize(std::uint32_t word, Quantity q);

/// Signed view used for output speed / acceleration / jerk words.
double dequantize_signed(std::int32_t word, Quantity q);

} // namespace odo

#pragma once

#include <memory>
#include <string>
#include <vector>

namespace odo {

/// A continuous distance function with analytic derivatives up to jerk.
/// Every built-in family guarantees distance_at(t) = 0 for t <= 0 and
/// distance_at(t) >= 0, nondecreasing, for all t; speed/accel bounds are
/// checked separately against a configuration (see is_normally_behaved).
class MotionProfile {
public:
    virtual ~MotionProfile() = default;

    virtual double distance_at(double t) const = 0;
    virtual double speed_at(double t) const = 0;
    virtual double accel_at(double t) const = 0;
    virtual double jerk_at(double t) const = 0;

    /// Times where a derivative is discontinuous (excluded from
    /// finite-difference grids). Always includes 0.
    virtual std::vector<double> corner_times() const { return {0.0}; }

    virtual std::string describe() const = 0;
};

/// distance = c1*t + c2*t^2 + c3*t^3 for t > 0. Coefficients must be
/// nonnegative so the distance stays nonnegative and nondecreasing.
class PolynomialProfile final : public MotionProfile {
public:
    PolynomialProfile(double c1, double c2 = 0.0, double c3 = 0.0);

    double distance_at(double t) const override;
    double speed_at(double t) const override;
    double accel_at(double t) const override;
    double jerk_at(double t) const override;
    std::string describe() const override;

private:
    double c1_, c2_, c3_;
};

/// Speed ramps at a constant rate to a cruise value, holds it for a given
/// duration, then optionally ramps back to zero and stands still
/// (decel_mps2 = 0 keeps cruising forever).
class TrapezoidProfile final : public MotionProfile {
public:
    TrapezoidProfile(double accel_mps2, double cruise_speed_mps,
                     double cruise_duration_s, double decel_mps2 = 0.0);

    double distance_at(double t) const override;
    double speed_at(double t) const override;
    double accel_at(double t) const override;
    double jerk_at(double t) const override;
    std::vector<double> corner_times() const override;
    std::string describe() const override;

private:
    double accel_, cruise_, decel_;
    double t_cruise_begin_, t_cruise_end_, t_stop_;
    double d_cruise_begin_, d_cruise_end_, d_stop_;
};

/// distance = v*t - (v/omega)*sin(omega*t): speed oscillates between 0 and
/// 2v around a mean of v, smooth at the start (speed(0) = accel(0) = 0).
class SinusoidProfile final : public MotionProfile {
public:
    SinusoidProfile(double mean_speed_mps, double omega_rad_per_s);

    double distance_at(double t) const override;
    double speed_at(double t) const override;
    double accel_at(double t) const override;
    double jerk_at(double t) const override;
    std::string describe() const override;

private:
    double v_, omega_;
};

/// Concatenation of profiles, each driven for a fixed duration with the
/// accumulated distance carried across joints; the last segment keeps
/// running past its end. Distance is continuous; derivatives may jump at
/// joints (reported as corners).
class PiecewiseProfile final : public MotionProfile {
public:
    struct Segment {
        double duration_s;
        std::shared_ptr<const MotionProfile> profile;
    };

    explicit PiecewiseProfile(std::vector<Segment> segments);

    double distance_at(double t) const override;
    double speed_at(double t) const override;
    double accel_at(double t) const override;
    double jerk_at(double t) const override;
    std::vector<double> corner_times() const override;
    std::string describe() const override;

private:
    // Returns (segment index, local time within it).
    std::pair<std::size_t, double> locate(double t) const;

    std::vector<Segment> segments_;
    std::vector<double> start_times_;
    std::vector<double> start_distances_;
};

} // namespace odo

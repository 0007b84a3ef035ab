#include "odo/motion.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace odo {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

// ---------------------------------------------------------------- polynomial

PolynomialProfile::PolynomialProfile(double c1, double c2, double c3)
    : c1_(c1), c2_(c2), c3_(c3) {
    if (c1 < 0 || c2 < 0 || c3 < 0)
        throw std::invalid_argument("PolynomialProfile: coefficients must be nonnegative");
}

double PolynomialProfile::distance_at(double t) const {
    if (t <= 0) return 0.0;
    return t * (c1_ + t * (c2_ + t * c3_));
}

double PolynomialProfile::speed_at(double t) const {
    if (t <= 0) return 0.0;
    return c1_ + t * (2.0 * c2_ + t * 3.0 * c3_);
}

double PolynomialProfile::accel_at(double t) const {
    if (t <= 0) return 0.0;
    return 2.0 * c2_ + 6.0 * c3_ * t;
}

double PolynomialProfile::jerk_at(double t) const {
    if (t <= 0) return 0.0;
    return 6.0 * c3_;
}

std::string PolynomialProfile::describe() const {
    return "polynomial(c1=" + fmt(c1_) + ",c2=" + fmt(c2_) + ",c3=" + fmt(c3_) + ")";
}

// ----------------------------------------------------------------- trapezoid

TrapezoidProfile::TrapezoidProfile(double accel_mps2, double cruise_speed_mps,
                                   double cruise_duration_s, double decel_mps2)
    : accel_(accel_mps2), cruise_(cruise_speed_mps), decel_(decel_mps2) {
    if (!(accel_mps2 > 0)) throw std::invalid_argument("TrapezoidProfile: accel must be positive");
    if (!(cruise_speed_mps > 0))
        throw std::invalid_argument("TrapezoidProfile: cruise speed must be positive");
    if (cruise_duration_s < 0)
        throw std::invalid_argument("TrapezoidProfile: cruise duration must be nonnegative");
    if (decel_mps2 < 0)
        throw std::invalid_argument("TrapezoidProfile: decel must be nonnegative");

    t_cruise_begin_ = cruise_ / accel_;
    d_cruise_begin_ = 0.5 * cruise_ * t_cruise_begin_;
    if (decel_ > 0) {
        t_cruise_end_ = t_cruise_begin_ + cruise_duration_s;
        d_cruise_end_ = d_cruise_begin_ + cruise_ * cruise_duration_s;
        t_stop_ = t_cruise_end_ + cruise_ / decel_;
        d_stop_ = d_cruise_end_ + 0.5 * cruise_ * (cruise_ / decel_);
    } else {
        t_cruise_end_ = t_stop_ = std::numeric_limits<double>::infinity();
        d_cruise_end_ = d_stop_ = std::numeric_limits<double>::infinity();
    }
}

double TrapezoidProfile::distance_at(double t) const {
    if (t <= 0) return 0.0;
    if (t <= t_cruise_begin_) return 0.5 * accel_ * t * t;
    if (t <= t_cruise_end_) return d_cruise_begin_ + cruise_ * (t - t_cruise_begin_);
    if (t <= t_stop_) {
        const double u = t - t_cruise_end_;
        return d_cruise_end_ + cruise_ * u - 0.5 * decel_ * u * u;
    }
    return d_stop_;
}

double TrapezoidProfile::speed_at(double t) const {
    if (t <= 0) return 0.0;
    if (t <= t_cruise_begin_) return accel_ * t;
    if (t <= t_cruise_end_) return cruise_;
    if (t <= t_stop_) return cruise_ - decel_ * (t - t_cruise_end_);
    return 0.0;
}

double TrapezoidProfile::accel_at(double t) const {
    if (t <= 0) return 0.0;
    if (t <= t_cruise_begin_) return accel_;
    if (t <= t_cruise_end_) return 0.0;
    if (t <= t_stop_) return -decel_;
    return 0.0;
}

double TrapezoidProfile::jerk_at(double) const { return 0.0; }

std::vector<double> TrapezoidProfile::corner_times() const {
    std::vector<double> ts{0.0, t_cruise_begin_};
    if (decel_ > 0) {
        ts.push_back(t_cruise_end_);
        ts.push_back(t_stop_);
    }
    return ts;
}

std::string TrapezoidProfile::describe() const {
    return "trapezoid(a=" + fmt(accel_) + ",v=" + fmt(cruise_) +
           ",cruise_end=" + fmt(t_cruise_end_) + ",d=" + fmt(decel_) + ")";
}

// ------------------------------------------------------------------ sinusoid

SinusoidProfile::SinusoidProfile(double mean_speed_mps, double omega_rad_per_s)
    : v_(mean_speed_mps), omega_(omega_rad_per_s) {
    if (!(mean_speed_mps > 0))
        throw std::invalid_argument("SinusoidProfile: mean speed must be positive");
    if (!(omega_rad_per_s > 0))
        throw std::invalid_argument("SinusoidProfile: omega must be positive");
}

double SinusoidProfile::distance_at(double t) const {
    if (t <= 0) return 0.0;
    return v_ * t - (v_ / omega_) * std::sin(omega_ * t);
}

double SinusoidProfile::speed_at(double t) const {
    if (t <= 0) return 0.0;
    return v_ * (1.0 - std::cos(omega_ * t));
}

double SinusoidProfile::accel_at(double t) const {
    if (t <= 0) return 0.0;
    return v_ * omega_ * std::sin(omega_ * t);
}

double SinusoidProfile::jerk_at(double t) const {
    if (t <= 0) return 0.0;
    return v_ * omega_ * omega_ * std::cos(omega_ * t);
}

std::string SinusoidProfile::describe() const {
    return "sinusoid(v=" + fmt(v_) + ",omega=" + fmt(omega_) + ")";
}

// ----------------------------------------------------------------- piecewise

PiecewiseProfile::PiecewiseProfile(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty())
        throw std::invalid_argument("PiecewiseProfile: needs at least one segment");
    double t0 = 0.0;
    double d0 = 0.0;
    for (const auto& s : segments_) {
        if (!(s.duration_s > 0))
            throw std::invalid_argument("PiecewiseProfile: segment durations must be positive");
        if (!s.profile)
            throw std::invalid_argument("PiecewiseProfile: null segment profile");
        start_times_.push_back(t0);
        start_distances_.push_back(d0);
        t0 += s.duration_s;
        d0 += s.profile->distance_at(s.duration_s);
    }
}

std::pair<std::size_t, double> PiecewiseProfile::locate(double t) const {
    std::size_t i = segments_.size() - 1;
    while (i > 0 && t < start_times_[i]) --i;
    return {i, t - start_times_[i]};
}

double PiecewiseProfile::distance_at(double t) const {
    if (t <= 0) return 0.0;
    const auto [i, local] = locate(t);
    return start_distances_[i] + segments_[i].profile->distance_at(local);
}

double PiecewiseProfile::speed_at(double t) const {
    if (t <= 0) return 0.0;
    const auto [i, local] = locate(t);
    return segments_[i].profile->speed_at(local);
}

double PiecewiseProfile::accel_at(double t) const {
    if (t <= 0) return 0.0;
    const auto [i, local] = locate(t);
    return segments_[i].profile->accel_at(local);
}

double PiecewiseProfile::jerk_at(double t) const {
    if (t <= 0) return 0.0;
    const auto [i, local] = locate(t);
    return segments_[i].profile->jerk_at(local);
}

std::vector<double> PiecewiseProfile::corner_times() const {
    std::vector<double> ts;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        ts.push_back(start_times_[i]);
        for (double c : segments_[i].profile->corner_times()) {
            const double shifted = start_times_[i] + c;
            const bool inside = i + 1 == segments_.size() ||
                                shifted < start_times_[i] + segments_[i].duration_s;
            if (inside) ts.push_back(shifted);
        }
    }
    return ts;
}

std::string PiecewiseProfile::describe() const {
    std::string s = "piecewise(";
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i) s += ";";
        s += fmt(segments_[i].duration_s) + "s:" + segments_[i].profile->describe();
    }
    return s + ")";
}

} // namespace odo

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace odo {

/// Exact rational number over int64, always normalized (den > 0, gcd = 1).
/// Intermediate products are computed in 128-bit and checked on the way back,
/// so overflow raises instead of wrapping.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    constexpr Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr Rat operator-() const { return raw(-num_, den_); }

    friend constexpr Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend constexpr Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend constexpr Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend constexpr Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend constexpr bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend constexpr bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend constexpr bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend constexpr bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Largest integer <= this value.
    constexpr std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    /// round(x) = floor(x + 1/2): ties go up (3.75 -> 4, 22.5 -> 23, -0.5 -> 0).
    constexpr std::int64_t round_half_up() const {
        return from128(i128(num_) * 2 + den_, i128(den_) * 2).floor();
    }

    constexpr double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static constexpr Rat raw(std::int64_t n, std::int64_t d) {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static constexpr Rat from128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rat: value out of 64-bit range");
        return raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }

    static constexpr i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    constexpr void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace odo

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "odo/config.hpp"
#include "odo/motion.hpp"
#include "odo/sampling.hpp"

using namespace odo;

namespace {

OdoConfig test_config() {
    OdoConfig c;
    c.ensure_valid();
    return c;
}

// Config with an exact unit resolution distance: pi * (6/pi) / (6 * 1) = 1.
OdoConfig unit_resolution_config() {
    OdoConfig c;
    c.tpw = 1;
    c.wheel_diameter_m = 6.0 / std::numbers::pi;
    c.speed_max_mps = 1000.0;
    c.accel_max_mps2 = 1000.0;
    return c;
}

// Independent oracle: exhaustive enumeration of all stuttering maps.
bool retraction_exists_brute(const std::vector<PhaseCode>& fine,
                             const std::vector<PhaseCode>& coarse, std::size_t n = 0,
                             std::size_t j = 0) {
    if (j >= coarse.size() || !(fine[n] == coarse[j])) return false;
    if (n + 1 == fine.size()) return true;
    return retraction_exists_brute(fine, coarse, n + 1, j) ||
           retraction_exists_brute(fine, coarse, n + 1, j + 1);
}

std::vector<PhaseCode> rows(std::initializer_list<std::uint64_t> rs) {
    std::vector<PhaseCode> v;
    for (auto r : rs) v.push_back(phase0(r));
    return v;
}

} // namespace

TEST_CASE("resolution distance of the shaft") {
    OdoConfig c = test_config();
    c.tpw = 100;
    c.wheel_diameter_m = 0.9;
    CHECK(delta_s_res(c) == doctest::Approx(0.0047123889803846899).epsilon(1e-12));

    OdoConfig doubled = c;
    doubled.wheel_diameter_m = 1.8;
    CHECK(delta_s_res(doubled) == doctest::Approx(2.0 * delta_s_res(c)));

    OdoConfig finer = c;
    finer.tpw = 200;
    CHECK(delta_s_res(finer) < delta_s_res(c)); // monotone in tooth count
}

TEST_CASE("encoding uses the 1-indexed phase view") {
    const OdoConfig c = unit_resolution_config();
    const PolynomialProfile zero(0.0);
    CHECK(encoding(zero, c, 1, 0.0) == phase(1));
    CHECK(encoding(zero, c, 1, 123.0) == PhaseCode{false, false, true});

    const PolynomialProfile unit(1.0); // distance = t, resolution 1
    CHECK(encoding(unit, c, 0, 2.5) == phase(2));
    CHECK(encoding(unit, c, 0, 2.5) == phase0(1));

    // Shifting the initial position by a full cycle changes nothing.
    for (double x : {0.0, 1.3, 4.9, 11.2})
        CHECK(encoding(unit, c, 3, x) == encoding(unit, c, 9, x));
}

TEST_CASE("sampling is encoding on a uniform grid") {
    const OdoConfig c = unit_resolution_config();
    const PolynomialProfile unit(1.0);
    CHECK(sampling(unit, c, 0, 0.5, 0) == encoding(unit, c, 0, 0.0));
    CHECK(sampling(unit, c, 0, 0.5, 5) == encoding(unit, c, 0, 2.5));
    // Doubling the interval subsamples every other index.
    for (std::uint64_t n = 0; n < 40; ++n)
        CHECK(sampling(unit, c, 2, 0.4, n) == sampling(unit, c, 2, 0.2, 2 * n));

    const auto trace = sample_trace(unit, c, 0, 0.5, 8);
    REQUIRE(trace.size() == 8);
    for (std::uint64_t n = 0; n < 8; ++n) CHECK(trace[n] == sampling(unit, c, 0, 0.5, n));
}

TEST_CASE("admissibility checks on a grid") {
    OdoConfig c = test_config(); // speed bound 0.5, accel bound 2.0
    const auto grid = default_check_grid(c, 5.0);

    CHECK(is_normally_behaved(PolynomialProfile(0.3), c, grid).ok);
    CHECK(is_normally_behaved(PolynomialProfile(0.0), c, grid).ok);

    const auto bad = is_normally_behaved(PolynomialProfile(0.55), c, grid);
    CHECK_FALSE(bad.ok);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations.front().constraint == "speed above bound");

    // Peak speed 10% above the bound, reached mid-run: peak = 2 * mean.
    const SinusoidProfile peaky(1.1 * c.speed_max_mps / 2.0, 1.0);
    const auto report = is_normally_behaved(peaky, c, grid);
    CHECK_FALSE(report.ok);
    bool found_speed = false;
    for (const auto& v : report.violations) found_speed |= v.constraint == "speed above bound";
    CHECK(found_speed);
}

TEST_CASE("retraction validation and search") {
    const auto a = phase0(0), b = phase0(1), c = phase0(2);

    SUBCASE("identity when both sequences agree") {
        const auto fine = rows({0, 1, 2, 3});
        const auto found = find_retraction(fine, fine);
        REQUIRE(found.has_value());
        CHECK(found->map == std::vector<std::size_t>{0, 1, 2, 3});
        CHECK(is_valid_retraction(fine, fine, found->map));
    }

    SUBCASE("stuttered fine sequence") {
        const std::vector<PhaseCode> fine{a, a, b, b, c};
        const std::vector<PhaseCode> coarse{a, b, c};
        const auto found = find_retraction(fine, coarse);
        REQUIRE(found.has_value());
        CHECK(found->map == std::vector<std::size_t>{0, 0, 1, 1, 2});
    }

    SUBCASE("code missing from the coarse sequence") {
        const std::vector<PhaseCode> fine{a, b, c};
        const std::vector<PhaseCode> coarse{a, c};
        const auto search = find_retraction_detailed(fine, coarse);
        CHECK_FALSE(search.retraction.has_value());
        CHECK(search.matched_prefix == 1); // fine[1] is the first lost code
    }

    SUBCASE("repeated adjacent coarse codes defeat stay-greedy matching") {
        // A matcher that always stutters when the current coarse code still
        // matches never reaches index 2 here; the search must advance early.
        const std::vector<PhaseCode> fine{a, a, b};
        const std::vector<PhaseCode> coarse{a, a, b};
        const auto found = find_retraction(fine, coarse);
        REQUIRE(found.has_value());
        CHECK(is_valid_retraction(fine, coarse, found->map));
        CHECK(found->map == std::vector<std::size_t>{0, 1, 2});
    }

    SUBCASE("agrees with exhaustive enumeration") {
        // All code sequences over a 3-letter alphabet, lengths 5 and 3.
        const PhaseCode alpha[3] = {a, b, c};
        for (int f = 0; f < 243; ++f)
            for (int g = 0; g < 27; ++g) {
                std::vector<PhaseCode> fine, coarse;
                for (int i = 0, x = f; i < 5; ++i, x /= 3) fine.push_back(alpha[x % 3]);
                for (int i = 0, x = g; i < 3; ++i, x /= 3) coarse.push_back(alpha[x % 3]);
                const auto found = find_retraction(fine, coarse);
                CHECK(found.has_value() == retraction_exists_brute(fine, coarse));
                if (found) CHECK(is_valid_retraction(fine, coarse, found->map));
            }
    }
}

TEST_CASE("no-loss instances of the sampling theorem") {
    OdoConfig c = test_config();
    REQUIRE(c.sampling_sound());

    SUBCASE("compliant profiles pass every refinement") {
        const PolynomialProfile ramp(0.3);
        const auto report = check_no_loss(ramp, c, 1, 3.0, 4);
        CHECK(report.hypothesis_holds);
        CHECK(report.admissible);
        CHECK(report.all_pass);
        CHECK(report.checks.size() == 4);
        for (const auto& check : report.checks) {
            REQUIRE(check.retraction.has_value());
            CHECK(check.retraction->map.front() == 0);
        }
    }

    SUBCASE("zero profile is trivially stutter-equivalent") {
        const PolynomialProfile zero(0.0);
        const auto report = check_no_loss(zero, c, 4, 2.0, 3);
        CHECK(report.all_pass);
    }

    SUBCASE("violating configuration loses codes") {
        // Speed tuned so one coarse interval crosses two code boundaries:
        // dt * v = 2 * delta_s_res.
        OdoConfig lossy = c;
        const double v = 2.0 * delta_s_res(lossy) / lossy.sampling_interval_s.to_double();
        lossy.speed_max_mps = 1.1 * v;
        REQUIRE_FALSE(lossy.sampling_sound());
        const PolynomialProfile fast(v);
        const auto report = check_no_loss(fast, lossy, 1, 2.0, 4);
        CHECK_FALSE(report.hypothesis_holds);
        CHECK_FALSE(report.all_pass);
        bool some_fail = false;
        for (const auto& check : report.checks)
            if (!check.pass) {
                some_fail = true;
                CHECK(check.fail_index > 0);
                CHECK(check.fail_index < 20); // located early, first skipped code
            }
        CHECK(some_fail);
    }
}

TEST_CASE("quantization") {
    CHECK(quantize(0.0, Quantity::distance) == 0);
    CHECK(quantize(1.2345, Quantity::distance) == 1234); // floor(1234.5)
    CHECK(dequantize(1234, Quantity::distance) == doctest::Approx(1.234));
    CHECK(quantize(0.0262, Quantity::speed) == 20); // floor(20.15...)
    CHECK(quantize(1.0, Quantity::time) == 100);
    CHECK(quantize(0.0113, Quantity::accel) == 2);
    CHECK(dequantize_signed(-4, Quantity::speed) == doctest::Approx(-0.0052));

    CHECK_THROWS_AS(quantize(-0.5, Quantity::distance), std::domain_error);
    CHECK_THROWS_AS(quantize(4.5e6, Quantity::distance), std::domain_error);

    // Sandwich: dequantize(quantize(x)) sits within one resolution step below x.
    for (Quantity q : {Quantity::time, Quantity::distance, Quantity::speed, Quantity::accel,
                       Quantity::jerk}) {
        const double res = resolution_of(q).to_double();
        for (double x = 0.0; x < 3.0; x += 0.0371) {
            const double back = dequantize(quantize(x, q), q);
            CHECK(back <= x + 1e-12);
            CHECK(back > x - res - 1e-12);
        }
    }
}

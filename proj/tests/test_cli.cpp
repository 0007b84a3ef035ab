#include "doctest.h"

#include <sstream>

#include "commands.hpp"
#include "odo/config_io.hpp"
#include "odo/harness.hpp"

using namespace odo;
using namespace odo::cli;

namespace {

const char* kReferenceRun =
    "shaft: 1 stat: true valid: true count:0 pos:0 speed:0\n"
    "shaft: 2 stat: true valid: true count:1 pos:5 speed:4\n"
    "shaft: 3 stat: true valid: true count:2 pos:10 speed:8\n"
    "shaft: 4 stat: true valid: true count:3 pos:15 speed:11\n"
    "shaft: 5 stat: true valid: true count:4 pos:20 speed:15\n"
    "shaft: 6 stat: true valid: true count:5 pos:26 speed:19\n"
    "shaft: 1 stat: true valid: true count:6 pos:31 speed:23\n"
    "shaft: 2 stat: true valid: true count:7 pos:36 speed:26\n";

OdoConfig defaults() {
    OdoConfig c;
    c.ensure_valid();
    return c;
}

} // namespace

TEST_CASE("replay reproduces the reference output byte for byte") {
    std::ostringstream out, err;
    const int rc = cmd_replay({1, 2, 3, 4, 5, 6, 1, 2}, defaults(), out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str() == kReferenceRun);
    CHECK(err.str().empty());
}

TEST_CASE("replay of a single code") {
    std::ostringstream out, err;
    const int rc = cmd_replay({1}, defaults(), out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str() == "shaft: 1 stat: true valid: true count:0 pos:0 speed:0\n");
}

TEST_CASE("replay flags a sequence fault and exits nonzero") {
    std::ostringstream out, err;
    const int rc = cmd_replay({1, 3}, defaults(), out, err);
    CHECK(rc == kExitCheckFailed);
    CHECK(out.str() ==
          "shaft: 1 stat: true valid: true count:0 pos:0 speed:0\n"
          "shaft: 3 stat: true valid: false count:0 pos:0 speed:0\n");
}

TEST_CASE("replay rejects out-of-range codes") {
    std::ostringstream out, err;
    CHECK(cmd_replay({1, 7}, defaults(), out, err) == kExitUsage);
    CHECK(cmd_replay({0}, defaults(), out, err) == kExitUsage);
    CHECK(cmd_replay({}, defaults(), out, err) == kExitUsage);
}

TEST_CASE("gen then replay round-trips clean vectors") {
    std::ostringstream fixture, err;
    GenOptions gen;
    gen.length = 80;
    gen.seed = 9;
    REQUIRE(cmd_gen(gen, fixture, err) == kExitOk);

    std::istringstream in(fixture.str());
    std::ostringstream out;
    CHECK(cmd_replay_fixture(in, defaults(), out, err) == kExitOk);

    // Deterministic: the same options emit the same bytes.
    std::ostringstream again;
    REQUIRE(cmd_gen(gen, again, err) == kExitOk);
    CHECK(again.str() == fixture.str());
}

TEST_CASE("gen with an injected fault makes the replay fail") {
    std::ostringstream fixture, err;
    GenOptions gen;
    gen.length = 40;
    gen.seed = 3;
    gen.faults = {"skip_transition@17"};
    REQUIRE(cmd_gen(gen, fixture, err) == kExitOk);

    std::istringstream in(fixture.str());
    std::ostringstream out;
    CHECK(cmd_replay_fixture(in, defaults(), out, err) == kExitCheckFailed);
}

TEST_CASE("gen usage errors") {
    std::ostringstream out, err;
    GenOptions bad_kind;
    bad_kind.length = 10;
    bad_kind.faults = {"meteor_strike@2"};
    CHECK(cmd_gen(bad_kind, out, err) == kExitUsage);

    GenOptions bad_pos;
    bad_pos.length = 10;
    bad_pos.faults = {"skip_transition@10"};
    CHECK(cmd_gen(bad_pos, out, err) == kExitUsage);

    GenOptions no_len;
    CHECK(cmd_gen(no_len, out, err) == kExitUsage);
}

TEST_CASE("config parsing") {
    SUBCASE("defaults") {
        const auto c = config_from_json_text("{}");
        CHECK(c.tpw == 90);
        CHECK(c.n_avg == 10);
        CHECK(c.delta_s_res_approx_mm == Rat(26, 5));
        CHECK(c.speed_scale == Rat(15, 4));
        CHECK(c.fitted);
        CHECK(c.sampling_sound());
    }

    SUBCASE("explicit values and derived speed scale") {
        const auto c = config_from_json_text(R"({
            "tpw": 100, "wheel_diameter_m": 0.9, "n_avg": 12,
            "sampling_interval_s": 0.02, "speed_max_mps": 0.2,
            "accel_max_mps2": 1.0, "delta_s_res_approx_mm": [47, 10],
            "speed_scale": "derived", "fitted": false
        })");
        CHECK(c.tpw == 100);
        CHECK(c.sampling_interval_s == Rat(1, 50));
        // (47/10 mm -> m) / (12 * 0.02 s * 13e-4 m/s) = 47/10000 / (39/125000)
        CHECK(c.speed_scale == c.derived_speed_scale());
        CHECK(c.speed_scale == Rat(47, 10000) / (Rat(12) * Rat(1, 50) * Rat(13, 10000)));
    }

    SUBCASE("unknown keys are rejected") {
        CHECK_THROWS_WITH_AS(config_from_json_text(R"({"tpq": 90})"),
                             doctest::Contains("unknown key 'tpq'"), std::runtime_error);
    }

    SUBCASE("malformed json carries a line diagnostic") {
        CHECK_THROWS_WITH_AS(config_from_json_text("{\n  \"tpw\": 90,\n  oops\n}"),
                             doctest::Contains("line 3"), std::runtime_error);
    }

    SUBCASE("bad rationals and off-grid intervals") {
        CHECK_THROWS_WITH_AS(config_from_json_text(R"({"delta_s_res_approx_mm": [1, 0]})"),
                             doctest::Contains("delta_s_res_approx_mm"), std::runtime_error);
        CHECK_THROWS_WITH_AS(config_from_json_text(R"({"sampling_interval_s": 0.015})"),
                             doctest::Contains("sampling_interval_s"), std::runtime_error);
    }

    SUBCASE("non-fitted resolution must stay within 1% of the physics") {
        CHECK_THROWS_WITH_AS(
            config_from_json_text(R"({"fitted": false, "delta_s_res_approx_mm": [6, 1]})"),
            doctest::Contains("1%"), std::invalid_argument);
        // The default rational is 0.7% off the default physics: accepted.
        const auto c = config_from_json_text(R"({"fitted": false})");
        CHECK_FALSE(c.fitted);
    }
}

TEST_CASE("profile parsing") {
    SUBCASE("every kind constructs") {
        CHECK(profile_from_json_text(R"({"kind":"polynomial","c1":0.3})")->speed_at(1.0) ==
              doctest::Approx(0.3));
        CHECK(profile_from_json_text(
                  R"({"kind":"trapezoid","accel_mps2":1.0,"cruise_speed_mps":2.0,
                      "cruise_duration_s":3.0,"decel_mps2":1.0})")
                  ->distance_at(7.0) == doctest::Approx(10.0));
        CHECK(profile_from_json_text(
                  R"({"kind":"sinusoid","mean_speed_mps":1.0,"omega_rad_per_s":2.0})")
                  ->speed_at(0.0) == doctest::Approx(0.0));
        const auto piecewise = profile_from_json_text(R"({
            "kind": "piecewise",
            "segments": [
                {"duration_s": 2.0, "profile": {"kind": "polynomial", "c1": 1.0}},
                {"duration_s": 3.0, "profile": {"kind": "polynomial", "c1": 0.5}}
            ]
        })");
        CHECK(piecewise->distance_at(4.0) == doctest::Approx(3.0));
    }

    SUBCASE("missing keys are reported by name") {
        CHECK_THROWS_WITH_AS(profile_from_json_text(R"({"kind":"trapezoid"})"),
                             doctest::Contains("accel_mps2"), std::runtime_error);
        CHECK_THROWS_WITH_AS(profile_from_json_text(R"({"c1": 1.0})"),
                             doctest::Contains("kind"), std::runtime_error);
    }

    SUBCASE("unknown keys and kinds are rejected") {
        CHECK_THROWS_WITH_AS(profile_from_json_text(R"({"kind":"polynomial","c9":1.0})"),
                             doctest::Contains("c9"), std::runtime_error);
        CHECK_THROWS_WITH_AS(profile_from_json_text(R"({"kind":"warp"})"),
                             doctest::Contains("warp"), std::runtime_error);
    }
}

TEST_CASE("simulate writes the machine trace next to the truth") {
    OdoConfig c = defaults();
    c.fitted = false;
    c.speed_scale = c.derived_speed_scale();

    SimulateOptions opt;
    opt.profile_spec = R"({"kind":"polynomial","c1":0.0})";
    opt.horizon = 20;
    std::ostringstream out, err;
    REQUIRE(cmd_simulate(opt, c, out, err) == kExitOk);

    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "n,t_s,c1,c2,c3,status,valid,count,timestamp,rel_pos_mm,speed_u,accel_u,jerk_u,"
          "true_pos_m,true_speed_mps");
    std::vector<std::string> rows;
    for (std::string row; std::getline(lines, row);) rows.push_back(row);
    REQUIRE(rows.size() == 20);
    // Zero profile at init 1: constant code (0,0,1), counts frozen at zero,
    // timestamp ticking.
    CHECK(rows.front() == "0,0,0,0,1,1,1,0,1,0,0,0,0,0,0");
    CHECK(rows.back() == "19,0.19,0,0,1,1,1,0,20,0,0,0,0,0,0");
}

TEST_CASE("simulate surfaces hypothesis violations and bad specs") {
    std::ostringstream out, err;
    SimulateOptions opt;
    opt.profile_spec = R"({"kind":"polynomial","c1":0.9})"; // above speed bound
    opt.horizon = 10;
    CHECK(cmd_simulate(opt, defaults(), out, err) == kExitCheckFailed);
    CHECK_FALSE(err.str().empty());

    SimulateOptions bad_spec;
    bad_spec.profile_spec = R"({"kind":"trapezoid"})";
    bad_spec.horizon = 10;
    std::ostringstream err2;
    CHECK(cmd_simulate(bad_spec, defaults(), out, err2) == kExitUsage);
    CHECK(err2.str().find("accel_mps2") != std::string::npos);
}

TEST_CASE("simulate accepts marker times inside the horizon only") {
    SimulateOptions opt;
    opt.profile_spec = R"({"kind":"polynomial","c1":0.3})";
    opt.horizon = 30;
    opt.marker_times_s = {0.15};
    std::ostringstream out, err;
    CHECK(cmd_simulate(opt, defaults(), out, err) == kExitOk);

    opt.marker_times_s = {5.0}; // beyond 30 steps of 0.01 s
    std::ostringstream out2, err2;
    CHECK(cmd_simulate(opt, defaults(), out2, err2) == kExitUsage);
    CHECK(err2.str().find("marker") != std::string::npos);
}

TEST_CASE("check-sampling exit codes") {
    std::ostringstream out, err;
    CheckSamplingOptions opt;
    opt.profile_spec = R"({"kind":"polynomial","c1":0.3})";
    opt.refinements = 3;
    opt.horizon_s = 2.0;
    CHECK(cmd_check_sampling(opt, defaults(), out, err) == kExitOk);
    CHECK(out.str().find("pass") != std::string::npos);

    // A configuration fast enough to skip codes at the coarse rate.
    OdoConfig lossy = defaults();
    lossy.speed_max_mps = 1.2;
    CheckSamplingOptions fast = opt;
    fast.profile_spec = R"({"kind":"polynomial","c1":1.1})";
    std::ostringstream out2;
    CHECK(cmd_check_sampling(fast, lossy, out2, err) == kExitCheckFailed);
    CHECK(out2.str().find("FAIL") != std::string::npos);
    CHECK(out2.str().find("lost code") != std::string::npos);
}

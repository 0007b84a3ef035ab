#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "odo/config_io.hpp"

namespace {

bool looks_like_code(const char* arg) {
    const std::string s(arg);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

std::string config_help() {
    return "Configuration file keys (JSON object, all optional):\n"
           "  tpw                    encoder teeth per wheelturn     (default 90)\n"
           "  wheel_diameter_m       wheel diameter in meters        (default 0.9)\n"
           "  n_avg                  averaging window length         (default 10)\n"
           "  sampling_interval_s    multiple of 0.01 s              (default 0.01)\n"
           "  speed_max_mps          speed bound for admissibility   (default 0.5)\n"
           "  accel_max_mps2         acceleration bound              (default 2.0)\n"
           "  delta_s_res_approx_mm  rational [num,den], mm/count    (default [26,5])\n"
           "  speed_scale            rational [num,den] or \"derived\" (default [15,4])\n"
           "  fitted                 constants fitted to a recorded run (default true)\n"
           "Defaults replay the reference 8-step transcript exactly.";
}

} // namespace

int main(int argc, char** argv) {
    using namespace odo::cli;

    CLI::App app{"Shaft-encoder odometry simulator and verification kit"};
    app.footer(config_help());

    std::string config_path;
    app.add_option("--config", config_path, "JSON configuration file (see footer)");

    // replay
    std::vector<int> replay_codes;
    std::string replay_file;
    auto* replay = app.add_subcommand(
        "replay", "Feed phase codes (1..6) to a fresh odometer and print each step");
    replay->add_option("codes", replay_codes, "phase codes, 1-indexed table rows");
    replay->add_option("--file", replay_file,
                       "read codes from a fixture file instead ('-' for stdin)");

    // simulate
    SimulateOptions sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Sample a motion profile, run the odometer, write a CSV trace");
    simulate->add_option("--profile", sim.profile_spec, "profile spec: JSON file or inline JSON")
        ->required();
    simulate->add_option("--horizon", sim.horizon, "number of sampling steps")->required();
    simulate->add_option("--init", sim.init_enc_pos, "initial encoder position (default 1)");
    simulate->add_option("--marker-at", sim.marker_times_s,
                         "assert the marker input at time t (repeatable)");
    std::string sim_out = "-";
    simulate->add_option("--out", sim_out, "output path (default stdout)");

    // check-sampling
    CheckSamplingOptions chk;
    auto* check = app.add_subcommand(
        "check-sampling", "Verify refined samplings retract onto the configured one");
    check->add_option("--profile", chk.profile_spec, "profile spec: JSON file or inline JSON")
        ->required();
    check->add_option("--refine", chk.refinements, "number of refinement levels (default 4)");
    check->add_option("--horizon", chk.horizon_s, "horizon in seconds (default 5.0)");
    check->add_option("--init", chk.init_enc_pos, "initial encoder position (default 1)");

    // gen
    GenOptions gen;
    auto* generate = app.add_subcommand("gen", "Emit a deterministic valid test sequence");
    generate->add_option("--len", gen.length, "sequence length")->required();
    generate->add_option("--seed", gen.seed, "generator seed (default 0)");
    generate->add_option(
        "--fault", gen.faults,
        "inject a fault, kind@pos; kinds: error_code_ttt, error_code_fff, "
        "skip_transition, reverse_glitch, underflow_probe (repeatable)");

    app.require_subcommand(0, 1);

    // Bare numeric arguments replay directly: `odo 1 2 3` == `odo replay 1 2 3`.
    std::vector<char*> args(argv, argv + argc);
    if (argc > 1 && looks_like_code(argv[1])) {
        static std::string replay_word = "replay";
        args.insert(args.begin() + 1, replay_word.data());
    }

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    odo::OdoConfig config;
    try {
        if (!config_path.empty()) config = odo::load_config_file(config_path);
        config.ensure_valid();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (replay->parsed()) {
            if (!replay_file.empty()) {
                if (replay_file == "-")
                    return cmd_replay_fixture(std::cin, config, std::cout, std::cerr);
                std::ifstream in(replay_file);
                if (!in) {
                    std::cerr << "replay: cannot open '" << replay_file << "'\n";
                    return kExitUsage;
                }
                return cmd_replay_fixture(in, config, std::cout, std::cerr);
            }
            return cmd_replay(replay_codes, config, std::cout, std::cerr);
        }
        if (simulate->parsed()) {
            if (sim_out == "-") return cmd_simulate(sim, config, std::cout, std::cerr);
            std::ofstream out(sim_out);
            if (!out) {
                std::cerr << "simulate: cannot open '" << sim_out << "' for writing\n";
                return kExitUsage;
            }
            return cmd_simulate(sim, config, out, std::cerr);
        }
        if (check->parsed()) return cmd_check_sampling(chk, config, std::cout, std::cerr);
        if (generate->parsed()) return cmd_gen(gen, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    std::cout << app.help();
    return kExitUsage;
}

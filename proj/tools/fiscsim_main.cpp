#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fiscsim/cli.hpp"
#include "fiscsim/config.hpp"
#include "fiscsim/errors.hpp"
#include "fiscsim/report.hpp"

namespace {

// Config text precedence: --config flag, then FISCSIM_CONFIG, then built-in defaults.
std::string load_config_text(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("FISCSIM_CONFIG")) path = env;
    }
    if (path.empty()) return "{}";
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fiscsim::ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fiscsim::ConfigError("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fiscal scenario simulator: CES production, household consumption, "
                 "policy rules, and fiscal multiplier experiments"};
    app.require_subcommand(0);

    std::string command;
    std::string config_path;
    std::string format;
    std::string out_path;
    long long seed = 0;

    app.add_option("command", command,
                   "one of: table1, scenario, multiplier, mpc, production, path")
        ->required();
    app.add_option("--config", config_path, "path to a JSON config file");
    CLI::Option* format_opt =
        app.add_option("--format", format, "output format: csv, json, or markdown");
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    CLI::Option* seed_opt = app.add_option("--seed", seed, "RNG seed for stochastic paths");

    CLI11_PARSE(app, argc, argv);

    try {
        fiscsim::RunConfig cfg = fiscsim::parse_config(load_config_text(config_path));
        if (format_opt->count() > 0) cfg.output_format = format;
        if (seed_opt->count() > 0) {
            if (seed < 0) throw fiscsim::ConfigError("--seed must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(seed);
        }
        fiscsim::Report report = fiscsim::run_command(command, cfg);
        write_output(out_path, fiscsim::emit_report(report, cfg.output_format));
        return 0;
    } catch (const fiscsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fiscsim::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace qopamp::cli;

    CLI::App app{"Quantum noise of an ideal operational amplifier used as a measurement device"};
    app.require_subcommand(1);

    std::string config;
    std::optional<double> omega;
    std::optional<std::string> out_path;

    auto* verify = app.add_subcommand("verify", "Check commutator preservation and both evaluation routes");
    auto* scatter = app.add_subcommand("scatter", "Print the scattering coefficients at one frequency");
    auto* sweep = app.add_subcommand("sweep", "Write the added-noise sweep as CSV");
    auto* optimize = app.add_subcommand("optimize", "Find the impedance matching optimum");
    for (auto* sub : {verify, scatter, sweep, optimize}) {
        sub->add_option("--config", config, "Configuration file")->required();
    }
    scatter->add_option("--omega", omega, "Angular frequency in rad/s (default: sweep omega_min)");
    sweep->add_option("--out", out_path, "Output CSV path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (*verify) return run_verify(config, std::cout, std::cerr);
    if (*scatter) return run_scatter(config, omega, std::cout, std::cerr);
    if (*sweep) return run_sweep(config, out_path, std::cout, std::cerr);
    return run_optimize(config, std::cout, std::cerr);
}

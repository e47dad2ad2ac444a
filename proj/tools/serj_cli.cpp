#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "serj/commands.hpp"
#include "serj/config.hpp"
#include "serj/errors.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string output;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string sweep_expression;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file");
    cmd->add_option("--output", opts.output, "result file (default: stdout)");
    cmd->add_option("--format", opts.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--trials", opts.trials, "Monte Carlo trials (validate)");
}

int run(const std::string& command, const CliOptions& opts) {
    serj::RunConfig config = opts.config_path.empty()
                                 ? serj::parse_config("")
                                 : serj::parse_config_file(opts.config_path);
    config.command = serj::command_from_name(command);
    if (!opts.output.empty()) config.output_path = opts.output;
    if (!opts.format.empty()) config.format = serj::format_from_name(opts.format);
    if (opts.seed) {
        config.seed = *opts.seed;
        if (config.scenario) config.scenario->seed = *opts.seed;
    }
    if (opts.trials) config.trials = *opts.trials;
    if (!opts.sweep_expression.empty())
        config.scenario =
            serj::apply_sweep_expression(config.scenario, opts.sweep_expression);

    if (config.command == serj::Command::Sweep && !config.scenario)
        throw serj::config_error("scenario",
                                 "sweep needs a scenario (or a --sweep expression)");
    if ((config.command == serj::Command::Route ||
         config.command == serj::Command::Validate) &&
        !config.topology)
        throw serj::config_error("topology", "route/validate need a topology source");

    return serj::dispatch(config, std::cout, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serj: minimum-energy routing with per-hop secrecy by random jamming"};
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* route = app.add_subcommand(
        "route", "compute the minimum-energy secret path for a topology");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "scan one variable and tabulate the aggregate power");
    CLI::App* validate = app.add_subcommand(
        "validate", "check analytic outage against Monte Carlo fading");
    add_common_options(route, opts);
    add_common_options(sweep, opts);
    add_common_options(validate, opts);
    sweep->add_option("--sweep", opts.sweep_expression,
                      "swept variable as param=start:stop:step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? serj::kExitOk : serj::kExitConfig;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opts);
    } catch (const serj::config_error& e) {
        std::cerr << "{\"error\":{\"code\":2,\"kind\":\"config_error\",\"message\":\""
                  << e.what() << "\"}}\n";
        return serj::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return serj::kExitInternal;
    }
}

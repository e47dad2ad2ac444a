#include "serj/commands.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "serj/errors.hpp"
#include "serj/io.hpp"
#include "serj/reliability.hpp"
#include "serj/routing.hpp"

namespace serj {

namespace {

void write_result(const RunConfig& config, const std::string& text, std::ostream& out,
                  std::ostream& diag) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path);
    if (!file) throw config_error("output", "cannot open '" + config.output_path + "'");
    file << text;
    diag << "wrote " << config.output_path << "\n";
}

void warn_on_power(const RunConfig& config, const RouteResult& route, std::ostream& diag) {
    if (!std::isfinite(config.power_warning)) return;
    for (std::size_t i = 0; i < route.path.size(); ++i) {
        const double total =
            route.allocation.transmit_powers[i] + route.allocation.jamming_powers[i];
        if (total > config.power_warning)
            diag << "warning: link " << route.path[i].from << "->" << route.path[i].to
                 << " needs power " << format_double(total) << " above threshold "
                 << format_double(config.power_warning) << "\n";
    }
}

} // namespace

int cmd_route(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (!config.topology)
        throw config_error("topology", "route needs a topology source");
    const RouteResult route =
        serj_route(*config.topology, config.params, config.max_link_distance);
    const double budget_eta = eta(config.params, route.plan);
    warn_on_power(config, route, diag);
    if (config.format == OutputFormat::Csv)
        write_result(config, route_to_csv(route, budget_eta), out, diag);
    else
        write_result(config, route_to_json(route, budget_eta).dump() + "\n", out, diag);
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (!config.scenario)
        throw config_error("scenario", "sweep needs a scenario");
    const SweepResult result = run_sweep(*config.scenario, config.params);
    if (config.format == OutputFormat::Csv)
        write_result(config, sweep_to_csv(result), out, diag);
    else
        write_result(config, sweep_to_jsonl(result), out, diag);
    return kExitOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (!config.topology)
        throw config_error("topology", "validate needs a topology source");
    const RouteResult route =
        serj_route(*config.topology, config.params, config.max_link_distance);
    const MonteCarloOutage empirical =
        monte_carlo_outage(route.path, route.allocation, config.params, route.plan,
                           config.trials, config.seed);

    std::vector<ValidationRow> rows;
    std::vector<double> analytic_links;
    bool all_pass = true;
    for (std::size_t i = 0; i < route.path.size(); ++i) {
        const double analytic =
            link_outage_probability(route.allocation.transmit_powers[i],
                                    route.path[i].distance, config.params, route.plan);
        analytic_links.push_back(analytic);
        const double bound =
            3.0 * std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(config.trials));
        const bool pass = std::abs(empirical.per_link[i] - analytic) <= bound;
        all_pass = all_pass && pass;
        rows.push_back(ValidationRow{route.path[i].from + "->" + route.path[i].to, analytic,
                                     empirical.per_link[i], bound, pass});
    }
    const double analytic_e2e = end_to_end_outage(analytic_links);
    const double bound_e2e =
        3.0 *
        std::sqrt(analytic_e2e * (1.0 - analytic_e2e) / static_cast<double>(config.trials));
    const bool pass_e2e = std::abs(empirical.end_to_end - analytic_e2e) <= bound_e2e;
    all_pass = all_pass && pass_e2e;
    rows.push_back(
        ValidationRow{"end_to_end", analytic_e2e, empirical.end_to_end, bound_e2e, pass_e2e});

    if (config.format == OutputFormat::Csv)
        write_result(config, validation_to_csv(rows), out, diag);
    else
        write_result(config, validation_to_jsonl(rows), out, diag);
    return all_pass ? kExitOk : kExitValidationFailed;
}

namespace {

int describe(std::ostream& diag, int code, const char* kind, const std::string& message,
             const std::string& field = "") {
    nlohmann::ordered_json record{{"error", {{"code", code}, {"kind", kind},
                                             {"message", message}}}};
    if (!field.empty()) record["error"]["field"] = field;
    diag << record.dump() << "\n";
    return code;
}

} // namespace

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& diag) noexcept {
    try {
        switch (config.command) {
        case Command::Route:
            return cmd_route(config, out, diag);
        case Command::Sweep:
            return cmd_sweep(config, out, diag);
        case Command::Validate:
            return cmd_validate(config, out, diag);
        }
        return kExitInternal;
    } catch (const config_error& e) {
        return describe(diag, kExitConfig, "config_error", e.what(), e.field());
    } catch (const secrecy_infeasible_error& e) {
        return describe(diag, kExitSecrecyInfeasible, "secrecy_infeasible", e.what());
    } catch (const reliability_infeasible_error& e) {
        return describe(diag, kExitReliabilityInfeasible, "reliability_infeasible", e.what());
    } catch (const no_path_error& e) {
        // Only reachable when max_link_distance sparsified the graph apart.
        return describe(diag, kExitConfig, "no_path", e.what());
    } catch (const std::exception& e) {
        return describe(diag, kExitInternal, "internal", e.what());
    }
}

} // namespace serj

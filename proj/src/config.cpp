#include "serj/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "serj/errors.hpp"
#include "serj/io.hpp"

namespace serj {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const char* where,
                         std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return item.key() == k;
            }) == known.end())
            throw config_error(std::string(where) + "." + item.key(), "unknown field");
    }
}

template <typename T>
T get_field(const json& obj, const char* where, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error(std::string(where) + "." + key, "invalid value");
    }
}

SystemParams parse_params(const json& doc) {
    SystemParams p; // defaults are the reference operating point
    if (!doc.contains("params")) return p;
    const json& obj = doc.at("params");
    if (!obj.is_object()) throw config_error("params", "must be an object");
    reject_unknown_keys(obj, "params",
                        {"alpha", "theta", "sigma_d_sq", "delta_d_sq", "b_d", "b_e", "l",
                         "gamma_d_star", "gamma_e_star", "epsilon"});
    p.alpha = get_field(obj, "params", "alpha", p.alpha);
    p.theta = get_field(obj, "params", "theta", p.theta);
    p.sigma_d_sq = get_field(obj, "params", "sigma_d_sq", p.sigma_d_sq);
    p.delta_d_sq = get_field(obj, "params", "delta_d_sq", p.delta_d_sq);
    p.b_d = get_field(obj, "params", "b_d", p.b_d);
    p.b_e = get_field(obj, "params", "b_e", p.b_e);
    p.l = get_field(obj, "params", "l", p.l);
    p.gamma_d_star = get_field(obj, "params", "gamma_d_star", p.gamma_d_star);
    p.gamma_e_star = get_field(obj, "params", "gamma_e_star", p.gamma_e_star);
    p.epsilon = get_field(obj, "params", "epsilon", p.epsilon);
    p.validate();
    return p;
}

std::vector<double> grid_from_range(double start, double stop, double step,
                                    const char* where) {
    if (!(step > 0.0)) throw config_error(where, "step must be > 0");
    if (stop < start) throw config_error(where, "stop must be >= start");
    std::vector<double> values;
    const double slack = step * 1e-9;
    for (double v = start; v <= stop + slack; v += step) values.push_back(v);
    if (values.empty()) throw config_error(where, "empty grid");
    return values;
}

SweepScenario parse_scenario(const json& doc) {
    const json& obj = doc.at("scenario");
    if (!obj.is_object()) throw config_error("scenario", "must be an object");
    reject_unknown_keys(obj, "scenario",
                        {"sweep", "values", "start", "stop", "step", "mode", "d_sd",
                         "n_nodes", "side", "realizations"});
    SweepScenario sc;
    if (!obj.contains("sweep")) throw config_error("scenario.sweep", "missing");
    sc.param = sweep_param_from_name(get_field<std::string>(obj, "scenario", "sweep", ""));

    const bool has_values = obj.contains("values");
    const bool has_range = obj.contains("start") || obj.contains("stop") || obj.contains("step");
    if (has_values && has_range)
        throw config_error("scenario", "give either values or start/stop/step, not both");
    if (has_values) {
        sc.grid = get_field<std::vector<double>>(obj, "scenario", "values", {});
        if (sc.grid.empty()) throw config_error("scenario.values", "empty grid");
    } else if (has_range) {
        const double start = get_field<double>(obj, "scenario", "start", 0.0);
        const double stop = get_field<double>(obj, "scenario", "stop", start);
        const double step = get_field<double>(obj, "scenario", "step", 1.0);
        sc.grid = grid_from_range(start, stop, step, "scenario");
    } else {
        throw config_error("scenario", "missing grid (values or start/stop/step)");
    }

    sc.mode = sc.param == SweepParam::NodeCount ? SweepScenario::Mode::MultiHop
                                                : SweepScenario::Mode::SingleHop;
    if (obj.contains("mode")) {
        const auto mode = get_field<std::string>(obj, "scenario", "mode", "");
        if (mode == "single_hop")
            sc.mode = SweepScenario::Mode::SingleHop;
        else if (mode == "multi_hop")
            sc.mode = SweepScenario::Mode::MultiHop;
        else
            throw config_error("scenario.mode", "expected single_hop or multi_hop");
    }
    sc.d_sd = get_field(obj, "scenario", "d_sd", sc.d_sd);
    sc.n_nodes = get_field(obj, "scenario", "n_nodes", sc.n_nodes);
    sc.side = get_field(obj, "scenario", "side", sc.side);
    sc.realizations = get_field(obj, "scenario", "realizations", sc.realizations);
    return sc;
}

bool blank(const std::string& text) {
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

} // namespace

Command command_from_name(const std::string& name) {
    if (name == "route") return Command::Route;
    if (name == "sweep") return Command::Sweep;
    if (name == "validate") return Command::Validate;
    throw config_error("command", "expected route, sweep or validate");
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl" || name == "json-lines") return OutputFormat::JsonLines;
    throw config_error("format", "expected csv or jsonl");
}

RunConfig parse_config(const std::string& text, const std::string& base_dir) {
    json doc;
    if (blank(text)) {
        doc = json::object();
    } else {
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw config_error("config", std::string("parse error: ") + e.what());
        }
    }
    if (!doc.is_object()) throw config_error("config", "document must be a JSON object");
    reject_unknown_keys(doc, "config",
                        {"command", "params", "topology", "topology_file", "scenario",
                         "trials", "seed", "output", "format", "max_link_distance",
                         "power_warning"});

    RunConfig cfg;
    if (doc.contains("command"))
        cfg.command = command_from_name(get_field<std::string>(doc, "config", "command", ""));
    cfg.params = parse_params(doc);

    const bool has_inline = doc.contains("topology");
    const bool has_file = doc.contains("topology_file");
    if (has_inline && has_file)
        throw config_error("topology", "give either topology or topology_file, not both");
    if (has_inline) {
        const json& obj = doc.at("topology");
        if (!obj.is_object()) throw config_error("topology", "must be an object");
        if (obj.contains("nodes")) {
            cfg.topology = topology_from_json(obj);
        } else {
            reject_unknown_keys(obj, "topology", {"n_nodes", "side", "seed"});
            TopologySpec spec;
            spec.n_nodes = get_field(obj, "topology", "n_nodes", spec.n_nodes);
            spec.side = get_field(obj, "topology", "side", spec.side);
            spec.seed = get_field(obj, "topology", "seed", spec.seed);
            if (spec.n_nodes < 2) throw config_error("topology.n_nodes", "must be >= 2");
            if (!(spec.side > 0.0)) throw config_error("topology.side", "must be > 0");
            cfg.topology = generate_topology(spec);
        }
    } else if (has_file) {
        std::filesystem::path path(get_field<std::string>(doc, "config", "topology_file", ""));
        if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
        cfg.topology = load_topology_file(path.string());
    }

    cfg.trials = get_field(doc, "config", "trials", cfg.trials);
    if (cfg.trials < 1) throw config_error("trials", "must be >= 1");
    cfg.seed = get_field(doc, "config", "seed", cfg.seed);
    cfg.output_path = get_field<std::string>(doc, "config", "output", "");
    if (doc.contains("format"))
        cfg.format = format_from_name(get_field<std::string>(doc, "config", "format", ""));
    cfg.max_link_distance =
        get_field(doc, "config", "max_link_distance", cfg.max_link_distance);
    if (!(cfg.max_link_distance > 0.0))
        throw config_error("max_link_distance", "must be > 0");
    cfg.power_warning = get_field(doc, "config", "power_warning", cfg.power_warning);
    if (!(cfg.power_warning > 0.0)) throw config_error("power_warning", "must be > 0");

    if (doc.contains("scenario")) {
        auto scenario = parse_scenario(doc);
        scenario.seed = cfg.seed;
        cfg.scenario = std::move(scenario);
    }

    // Command-specific requirements apply once the command is known; the CLI
    // sets it from the subcommand after parsing, so only check here when the
    // document names one itself.
    if (doc.contains("command")) {
        if ((cfg.command == Command::Route || cfg.command == Command::Validate) &&
            !cfg.topology)
            throw config_error("topology", "route/validate need a topology source");
        if (cfg.command == Command::Sweep && !cfg.scenario)
            throw config_error("scenario", "sweep needs a scenario");
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config", "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const std::string base = std::filesystem::path(path).parent_path().string();
    return parse_config(text.str(), base.empty() ? "." : base);
}

SweepScenario apply_sweep_expression(std::optional<SweepScenario> base,
                                     const std::string& expression) {
    const auto eq = expression.find('=');
    if (eq == std::string::npos)
        throw config_error("sweep", "expected param=start:stop:step");
    const std::string name = expression.substr(0, eq);
    const std::string range = expression.substr(eq + 1);

    std::vector<std::string> pieces;
    std::size_t pos = 0;
    while (true) {
        const auto colon = range.find(':', pos);
        pieces.push_back(range.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (pieces.size() != 3) throw config_error("sweep", "expected param=start:stop:step");

    double bounds[3];
    for (int i = 0; i < 3; ++i) {
        try {
            std::size_t used = 0;
            bounds[i] = std::stod(pieces[i], &used);
            if (used != pieces[i].size()) throw std::invalid_argument(pieces[i]);
        } catch (const std::exception&) {
            throw config_error("sweep", "expected param=start:stop:step");
        }
    }

    SweepScenario sc = base ? *base : SweepScenario{};
    sc.param = sweep_param_from_name(name);
    sc.grid = grid_from_range(bounds[0], bounds[1], bounds[2], "sweep");
    if (sc.param == SweepParam::NodeCount) sc.mode = SweepScenario::Mode::MultiHop;
    return sc;
}

} // namespace serj

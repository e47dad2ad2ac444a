#include "serj/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "serj/errors.hpp"

namespace serj {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

NetworkTopology topology_from_json(const json& doc) {
    if (!doc.is_object()) throw config_error("topology", "document must be a JSON object");
    NetworkTopology topo;
    try {
        for (const auto& entry : doc.at("nodes")) {
            topo.nodes.push_back(Node{entry.at("id").get<std::string>(),
                                      entry.at("x").get<double>(),
                                      entry.at("y").get<double>()});
        }
        topo.source = doc.at("source").get<std::string>();
        topo.destination = doc.at("destination").get<std::string>();
    } catch (const json::exception& e) {
        throw config_error("topology", e.what());
    }
    topo.validate();
    return topo;
}

NetworkTopology load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("topology_file", "cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw config_error("topology_file", std::string("parse error: ") + e.what());
    }
    return topology_from_json(doc);
}

ordered_json route_to_json(const RouteResult& route, double eta) {
    ordered_json doc;
    doc["path"] = ordered_json::array();
    if (!route.path.empty()) {
        doc["path"].push_back(route.path.front().from);
        for (const auto& link : route.path) doc["path"].push_back(link.to);
    }
    doc["links"] = ordered_json::array();
    for (std::size_t i = 0; i < route.path.size(); ++i) {
        const auto& link = route.path[i];
        const double p_s = route.allocation.transmit_powers[i];
        const double p_j = route.allocation.jamming_powers[i];
        doc["links"].push_back(ordered_json{{"from", link.from},
                                            {"to", link.to},
                                            {"distance", link.distance},
                                            {"p_s", p_s},
                                            {"p_j", p_j},
                                            {"cost", p_s + p_j}});
    }
    doc["k_bits"] = route.plan.k_bits;
    doc["beta"] = route.plan.beta;
    doc["gamma_e_achieved"] = route.plan.gamma_e_achieved;
    doc["eta"] = eta;
    doc["weight"] = route.weight;
    doc["total_cost"] = route.allocation.total_cost;
    return doc;
}

ParsedRoute route_from_json(const json& doc) {
    ParsedRoute parsed;
    try {
        for (const auto& entry : doc.at("links")) {
            Link link{entry.at("from").get<std::string>(), entry.at("to").get<std::string>(),
                      entry.at("distance").get<double>()};
            parsed.route.path.push_back(link);
            parsed.route.allocation.links.push_back(link);
            parsed.route.allocation.transmit_powers.push_back(entry.at("p_s").get<double>());
            parsed.route.allocation.jamming_powers.push_back(entry.at("p_j").get<double>());
        }
        parsed.route.plan.k_bits = doc.at("k_bits").get<int>();
        parsed.route.plan.beta = doc.at("beta").get<double>();
        parsed.route.plan.gamma_e_achieved = doc.at("gamma_e_achieved").get<double>();
        parsed.route.weight = doc.at("weight").get<double>();
        parsed.route.allocation.total_cost = doc.at("total_cost").get<double>();
        parsed.eta = doc.at("eta").get<double>();
    } catch (const json::exception& e) {
        throw config_error("route", e.what());
    }
    return parsed;
}

std::string route_to_csv(const RouteResult& route, double eta) {
    std::ostringstream out;
    out << "hop,from,to,distance,p_s,p_j,link_cost,K,beta,eta,weight,total_cost\n";
    for (std::size_t i = 0; i < route.path.size(); ++i) {
        const auto& link = route.path[i];
        const double p_s = route.allocation.transmit_powers[i];
        const double p_j = route.allocation.jamming_powers[i];
        out << i + 1 << ',' << link.from << ',' << link.to << ','
            << format_double(link.distance) << ',' << format_double(p_s) << ','
            << format_double(p_j) << ',' << format_double(p_s + p_j) << ','
            << route.plan.k_bits << ',' << format_double(route.plan.beta) << ','
            << format_double(eta) << ',' << format_double(route.weight) << ','
            << format_double(route.allocation.total_cost) << '\n';
    }
    return out.str();
}

namespace {

void append_sweep_row_csv(std::ostringstream& out, const SweepRow& row) {
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", row.wall_ms);
    out << row.swept_param << ',' << format_double(row.value) << ','
        << format_double(row.p_total) << ',' << format_double(row.hops) << ','
        << row.k_bits << ',' << format_double(row.beta) << ',' << format_double(row.eta)
        << ',' << wall << '\n';
}

ordered_json sweep_row_json(const SweepRow& row) {
    return ordered_json{{"swept_param", row.swept_param}, {"value", row.value},
                        {"P_total", row.p_total},         {"hops", row.hops},
                        {"K", row.k_bits},                {"beta", row.beta},
                        {"eta", row.eta},                 {"wall_ms", row.wall_ms}};
}

} // namespace

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "swept_param,value,P_total,hops,K,beta,eta,wall_ms\n";
    for (const auto& row : result.rows) append_sweep_row_csv(out, row);
    return out.str();
}

std::string sweep_to_jsonl(const SweepResult& result) {
    std::ostringstream out;
    for (const auto& row : result.rows) out << sweep_row_json(row).dump() << '\n';
    return out.str();
}

std::string validation_to_csv(const std::vector<ValidationRow>& rows) {
    std::ostringstream out;
    out << "link,analytic_pout,empirical_pout,bound_3sigma,pass\n";
    for (const auto& row : rows) {
        out << row.link << ',' << format_double(row.analytic) << ','
            << format_double(row.empirical) << ',' << format_double(row.bound_3sigma)
            << ',' << (row.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string validation_to_jsonl(const std::vector<ValidationRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << ordered_json{{"link", row.link},
                            {"analytic_pout", row.analytic},
                            {"empirical_pout", row.empirical},
                            {"bound_3sigma", row.bound_3sigma},
                            {"pass", row.pass}}
                   .dump()
            << '\n';
    }
    return out.str();
}

} // namespace serj

#ifndef SERJ_IO_HPP
#define SERJ_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "serj/routing.hpp"
#include "serj/simulation.hpp"

namespace serj {

/// Topology document: {"nodes": [{"id", "x", "y"}, ...],
///                     "source": id, "destination": id}
NetworkTopology topology_from_json(const nlohmann::json& doc);
NetworkTopology load_topology_file(const std::string& path);

/// Route serialization. Numbers survive a round trip at full precision.
nlohmann::ordered_json route_to_json(const RouteResult& route, double eta);

struct ParsedRoute {
    RouteResult route;
    double eta = 0.0;
};
ParsedRoute route_from_json(const nlohmann::json& doc);

std::string route_to_csv(const RouteResult& route, double eta);

/// Sweep serialization. CSV header:
///   swept_param,value,P_total,hops,K,beta,eta,wall_ms
/// JSON-lines mirrors the same fields record for record.
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_jsonl(const SweepResult& result);

struct ValidationRow {
    std::string link; // "from->to", or "end_to_end" for the aggregate row
    double analytic = 0.0;
    double empirical = 0.0;
    double bound_3sigma = 0.0;
    bool pass = false;
};

std::string validation_to_csv(const std::vector<ValidationRow>& rows);
std::string validation_to_jsonl(const std::vector<ValidationRow>& rows);

/// Shortest exact decimal form would also round-trip, but a fixed 17
/// significant digits keeps the column format predictable.
std::string format_double(double value);

} // namespace serj

#endif

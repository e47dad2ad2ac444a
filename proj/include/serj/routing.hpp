#ifndef SERJ_ROUTING_HPP
#define SERJ_ROUTING_HPP

#include <limits>
#include <string>
#include <vector>

#include "serj/allocation.hpp"
#include "serj/model.hpp"

namespace serj {

/// Routing weight of a single link: d^(alpha/2). Minimizing the sum of these
/// over a path minimizes the path's optimal power cost.
double link_weight(double distance, double alpha);

/// Candidate-link graph over the legitimate nodes. Complete by default;
/// max_link_distance sparsifies it for large deployments.
struct WeightedGraph {
    struct Edge {
        int to;
        double weight;
    };

    std::vector<std::string> ids;                  // node index -> id
    std::vector<std::pair<double, double>> coords; // node index -> position
    std::vector<int> tie_rank;                     // node index -> rank of id in lex order
    std::vector<std::vector<Edge>> adjacency;

    int index_of(const std::string& id) const;
    double distance(int a, int b) const;
};

WeightedGraph build_weighted_graph(
    const NetworkTopology& topology, const SystemParams& params,
    double max_link_distance = std::numeric_limits<double>::infinity());

struct ShortestPath {
    std::vector<std::string> nodes; // source .. destination
    double weight = 0.0;
};

/// Minimum-weight simple path. Ties are broken toward fewer hops, then the
/// lexicographically smallest node-id sequence, so results are reproducible.
/// Throws no_path_error if the endpoints are disconnected.
ShortestPath shortest_path(const WeightedGraph& graph, const std::string& source,
                           const std::string& destination);

/// Full routing output: minimum-weight path, its optimal power allocation,
/// and the secrecy plan in force. Eavesdroppers are not an input anywhere in
/// this pipeline, so the result is invariant to them by construction.
struct RouteResult {
    std::vector<Link> path;
    double weight = 0.0;
    PowerAllocation allocation;
    SecrecyPlan plan;
};

RouteResult serj_route(const NetworkTopology& topology, const SystemParams& params,
                       double max_link_distance = std::numeric_limits<double>::infinity());

} // namespace serj

#endif

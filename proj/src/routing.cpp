#include "serj/routing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "serj/errors.hpp"
#include "serj/reliability.hpp"

namespace serj {

double link_weight(double distance, double alpha) {
    if (!(distance > 0.0)) throw std::domain_error("link_weight: distance must be > 0");
    return std::pow(distance, 0.5 * alpha);
}

int WeightedGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return static_cast<int>(i);
    }
    throw config_error("nodes", "unknown node id '" + id + "'");
}

double WeightedGraph::distance(int a, int b) const {
    return std::hypot(coords[a].first - coords[b].first,
                      coords[a].second - coords[b].second);
}

WeightedGraph build_weighted_graph(const NetworkTopology& topology,
                                   const SystemParams& params, double max_link_distance) {
    if (topology.nodes.size() < 2)
        throw std::domain_error("build_weighted_graph: need at least two nodes");
    if (!(max_link_distance > 0.0))
        throw config_error("max_link_distance", "must be > 0");

    const int n = static_cast<int>(topology.nodes.size());
    WeightedGraph graph;
    graph.ids.reserve(n);
    graph.coords.reserve(n);
    for (const auto& node : topology.nodes) {
        graph.ids.push_back(node.id);
        graph.coords.emplace_back(node.x, node.y);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return graph.ids[a] < graph.ids[b]; });
    graph.tie_rank.assign(n, 0);
    for (int rank = 0; rank < n; ++rank) graph.tie_rank[order[rank]] = rank;

    graph.adjacency.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double d = graph.distance(a, b);
            if (d > max_link_distance) continue;
            const double w = link_weight(d, params.alpha);
            graph.adjacency[a].push_back({b, w});
            graph.adjacency[b].push_back({a, w});
        }
    }
    return graph;
}

namespace {

struct Label {
    double dist = std::numeric_limits<double>::infinity();
    int hops = 0;
    std::vector<int> path; // node indices, source first
    bool settled = false;
};

// Candidate path (labels[from].path + [to]) vs the incumbent at `to`, on
// exactly tied (dist, hops): lexicographic node-id order decides.
bool candidate_lex_smaller(const std::vector<Label>& labels, const WeightedGraph& graph,
                           int from, int to) {
    const auto& prefix = labels[from].path;
    const auto& incumbent = labels[to].path;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const int a = graph.tie_rank[prefix[i]];
        const int b = graph.tie_rank[incumbent[i]];
        if (a != b) return a < b;
    }
    return false; // identical path
}

} // namespace

ShortestPath shortest_path(const WeightedGraph& graph, const std::string& source,
                           const std::string& destination) {
    const int n = static_cast<int>(graph.ids.size());
    const int src = graph.index_of(source);
    const int dst = graph.index_of(destination);

    std::vector<Label> labels(n);
    labels[src].dist = 0.0;
    labels[src].hops = 0;
    labels[src].path = {src};

    // Dense-graph variant: linear scan for the next node instead of a heap,
    // O(n^2) total on complete graphs.
    for (int round = 0; round < n; ++round) {
        int u = -1;
        for (int v = 0; v < n; ++v) {
            if (labels[v].settled || !std::isfinite(labels[v].dist)) continue;
            if (u < 0 || labels[v].dist < labels[u].dist ||
                (labels[v].dist == labels[u].dist && labels[v].hops < labels[u].hops))
                u = v;
        }
        if (u < 0) break;
        labels[u].settled = true;
        if (u == dst) break;

        for (const auto& edge : graph.adjacency[u]) {
            Label& tail = labels[edge.to];
            if (tail.settled) continue;
            const double dist = labels[u].dist + edge.weight;
            const int hops = labels[u].hops + 1;
            bool better = false;
            if (dist < tail.dist) {
                better = true;
            } else if (dist == tail.dist) {
                if (hops < tail.hops) {
                    better = true;
                } else if (hops == tail.hops) {
                    better = candidate_lex_smaller(labels, graph, u, edge.to);
                }
            }
            if (better) {
                tail.dist = dist;
                tail.hops = hops;
                tail.path = labels[u].path;
                tail.path.push_back(edge.to);
            }
        }
    }

    if (!labels[dst].settled)
        throw no_path_error("shortest_path: '" + source + "' and '" + destination +
                            "' are disconnected");

    ShortestPath result;
    result.weight = labels[dst].dist;
    result.nodes.reserve(labels[dst].path.size());
    for (int idx : labels[dst].path) result.nodes.push_back(graph.ids[idx]);
    return result;
}

RouteResult serj_route(const NetworkTopology& topology, const SystemParams& params,
                       double max_link_distance) {
    params.validate();
    topology.validate();

    const SecrecyPlan plan = build_secrecy_plan(params);
    const ReliabilityBudget budget = reliability_budget(params, plan);

    const WeightedGraph graph = build_weighted_graph(topology, params, max_link_distance);
    const ShortestPath best = shortest_path(graph, topology.source, topology.destination);

    RouteResult result;
    result.weight = best.weight;
    result.plan = plan;
    result.path.reserve(best.nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < best.nodes.size(); ++i) {
        const int a = graph.index_of(best.nodes[i]);
        const int b = graph.index_of(best.nodes[i + 1]);
        result.path.push_back(Link{best.nodes[i], best.nodes[i + 1], graph.distance(a, b)});
    }
    result.allocation = optimal_power_allocation(result.path, budget, plan, params);
    return result;
}

} // namespace serj

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "serj/errors.hpp"
#include "serj/model.hpp"
#include "serj/reliability.hpp"
#include "serj/routing.hpp"
#include "serj/secrecy.hpp"
#include "serj/simulation.hpp"

namespace py = pybind11;

PYBIND11_MODULE(serj, m) {
    m.doc() = "Minimum-energy secure routing via random jamming";

    py::register_exception<serj::secrecy_infeasible_error>(m, "SecrecyInfeasibleError");
    py::register_exception<serj::reliability_infeasible_error>(m,
                                                               "ReliabilityInfeasibleError");
    py::register_exception<serj::rate_infeasible_error>(m, "RateInfeasibleError");
    py::register_exception<serj::config_error>(m, "ConfigError");
    py::register_exception<serj::no_path_error>(m, "NoPathError");

    py::class_<serj::SystemParams>(m, "SystemParams")
        .def(py::init([](double alpha, double theta, double sigma_d_sq, double delta_d_sq,
                         int b_d, int b_e, double l, double gamma_d_star,
                         double gamma_e_star, double epsilon) {
                 serj::SystemParams p{alpha,         theta,        sigma_d_sq,
                                      delta_d_sq,    b_d,          b_e,
                                      l,             gamma_d_star, gamma_e_star,
                                      epsilon};
                 p.validate();
                 return p;
             }),
             py::arg("alpha") = 3.0, py::arg("theta") = 1e-6,
             py::arg("sigma_d_sq") = 1.0, py::arg("delta_d_sq") = 0.0,
             py::arg("b_d") = 14, py::arg("b_e") = 14, py::arg("l") = 1.0,
             py::arg("gamma_d_star") = 42.0, py::arg("gamma_e_star") = 34.0,
             py::arg("epsilon") = 0.1)
        .def_readonly("alpha", &serj::SystemParams::alpha)
        .def_readonly("theta", &serj::SystemParams::theta)
        .def_readonly("sigma_d_sq", &serj::SystemParams::sigma_d_sq)
        .def_readonly("delta_d_sq", &serj::SystemParams::delta_d_sq)
        .def_readonly("b_d", &serj::SystemParams::b_d)
        .def_readonly("b_e", &serj::SystemParams::b_e)
        .def_readonly("l", &serj::SystemParams::l)
        .def_readonly("gamma_d_star", &serj::SystemParams::gamma_d_star)
        .def_readonly("gamma_e_star", &serj::SystemParams::gamma_e_star)
        .def_readonly("epsilon", &serj::SystemParams::epsilon)
        .def("effective_noise", &serj::SystemParams::effective_noise);

    py::class_<serj::Node>(m, "Node")
        .def(py::init<std::string, double, double>(), py::arg("id"), py::arg("x"),
             py::arg("y"))
        .def_readonly("id", &serj::Node::id)
        .def_readonly("x", &serj::Node::x)
        .def_readonly("y", &serj::Node::y);

    py::class_<serj::NetworkTopology>(m, "NetworkTopology")
        .def(py::init([](std::vector<serj::Node> nodes, std::string source,
                         std::string destination) {
                 serj::NetworkTopology t{std::move(nodes), std::move(source),
                                         std::move(destination)};
                 t.validate();
                 return t;
             }),
             py::arg("nodes"), py::arg("source"), py::arg("destination"))
        .def_readonly("nodes", &serj::NetworkTopology::nodes)
        .def_readonly("source", &serj::NetworkTopology::source)
        .def_readonly("destination", &serj::NetworkTopology::destination);

    py::class_<serj::Link>(m, "Link")
        .def(py::init<std::string, std::string, double>(), py::arg("from_id"),
             py::arg("to_id"), py::arg("distance"))
        .def_readonly("from_id", &serj::Link::from)
        .def_readonly("to_id", &serj::Link::to)
        .def_readonly("distance", &serj::Link::distance);

    py::class_<serj::SecrecyPlan>(m, "SecrecyPlan")
        .def_readonly("k_bits", &serj::SecrecyPlan::k_bits)
        .def_readonly("beta", &serj::SecrecyPlan::beta)
        .def_readonly("gamma_e_achieved", &serj::SecrecyPlan::gamma_e_achieved);

    py::class_<serj::ReliabilityBudget>(m, "ReliabilityBudget")
        .def_readonly("eta", &serj::ReliabilityBudget::eta)
        .def_readonly("epsilon", &serj::ReliabilityBudget::epsilon);

    py::class_<serj::PowerAllocation>(m, "PowerAllocation")
        .def_readonly("links", &serj::PowerAllocation::links)
        .def_readonly("transmit_powers", &serj::PowerAllocation::transmit_powers)
        .def_readonly("jamming_powers", &serj::PowerAllocation::jamming_powers)
        .def_readonly("total_cost", &serj::PowerAllocation::total_cost);

    py::class_<serj::RouteResult>(m, "RouteResult")
        .def_readonly("path", &serj::RouteResult::path)
        .def_readonly("weight", &serj::RouteResult::weight)
        .def_readonly("allocation", &serj::RouteResult::allocation)
        .def_readonly("plan", &serj::RouteResult::plan);

    py::class_<serj::TopologySpec>(m, "TopologySpec")
        .def(py::init<int, double, std::uint64_t>(), py::arg("n_nodes"),
             py::arg("side") = 5.0, py::arg("seed") = 0)
        .def_readonly("n_nodes", &serj::TopologySpec::n_nodes)
        .def_readonly("side", &serj::TopologySpec::side)
        .def_readonly("seed", &serj::TopologySpec::seed);

    py::class_<serj::MonteCarloOutage>(m, "MonteCarloOutage")
        .def_readonly("per_link", &serj::MonteCarloOutage::per_link)
        .def_readonly("end_to_end", &serj::MonteCarloOutage::end_to_end)
        .def_readonly("trials", &serj::MonteCarloOutage::trials);

    py::enum_<serj::SweepParam>(m, "SweepParam")
        .value("EAVESDROPPER_COUNT", serj::SweepParam::EavesdropperCount)
        .value("GUARD_RADIUS", serj::SweepParam::GuardRadius)
        .value("UNCERTAINTY_RADIUS", serj::SweepParam::UncertaintyRadius)
        .value("EAVESDROP_PROBABILITY", serj::SweepParam::EavesdropProbability)
        .value("SOURCE_DESTINATION_DISTANCE", serj::SweepParam::SourceDestinationDistance)
        .value("EAVESDROPPER_BITS", serj::SweepParam::EavesdropperBits)
        .value("NODE_COUNT", serj::SweepParam::NodeCount);

    py::class_<serj::SweepScenario>(m, "SweepScenario")
        .def(py::init([](serj::SweepParam param, std::vector<double> grid, bool multi_hop,
                         double d_sd, int n_nodes, double side, int realizations,
                         std::uint64_t seed) {
                 serj::SweepScenario sc;
                 sc.param = param;
                 sc.grid = std::move(grid);
                 sc.mode = multi_hop ? serj::SweepScenario::Mode::MultiHop
                                     : serj::SweepScenario::Mode::SingleHop;
                 sc.d_sd = d_sd;
                 sc.n_nodes = n_nodes;
                 sc.side = side;
                 sc.realizations = realizations;
                 sc.seed = seed;
                 return sc;
             }),
             py::arg("param"), py::arg("grid"), py::arg("multi_hop") = false,
             py::arg("d_sd") = 1.0, py::arg("n_nodes") = 25, py::arg("side") = 5.0,
             py::arg("realizations") = 10, py::arg("seed") = 0);

    py::class_<serj::SweepRow>(m, "SweepRow")
        .def_readonly("swept_param", &serj::SweepRow::swept_param)
        .def_readonly("value", &serj::SweepRow::value)
        .def_readonly("p_total", &serj::SweepRow::p_total)
        .def_readonly("hops", &serj::SweepRow::hops)
        .def_readonly("k_bits", &serj::SweepRow::k_bits)
        .def_readonly("beta", &serj::SweepRow::beta)
        .def_readonly("eta", &serj::SweepRow::eta)
        .def_readonly("wall_ms", &serj::SweepRow::wall_ms);

    py::class_<serj::SweepResult>(m, "SweepResult")
        .def_readonly("rows", &serj::SweepResult::rows);

    m.def("path_loss_gain", &serj::path_loss_gain, py::arg("distance"), py::arg("alpha"),
          py::arg("gain_sq"), "Received-power factor |h|^2 / d^alpha");
    m.def("adc_resolution_receiver", &serj::adc_resolution_receiver, py::arg("p_s"),
          py::arg("gain_sq"), py::arg("distance"), py::arg("params"));
    m.def("adc_resolution_eavesdropper", &serj::adc_resolution_eavesdropper,
          py::arg("p_s"), py::arg("gain_sq"), py::arg("distance"), py::arg("k_bits"),
          py::arg("params"));
    m.def("residual_jamming_variance", &serj::residual_jamming_variance, py::arg("p_j"),
          py::arg("gain_sq"), py::arg("distance"), py::arg("params"));
    m.def("gamma_d", &serj::gamma_d, py::arg("p_s"), py::arg("p_j"), py::arg("gain_sq"),
          py::arg("distance"), py::arg("params"),
          "Reliability metric at the legitimate receiver");
    m.def("gamma_e_worst_case", &serj::gamma_e_worst_case, py::arg("k_bits"),
          py::arg("params"), "Worst-case eavesdropper metric; location-independent");
    m.def("capacity_bound", &serj::capacity_bound, py::arg("gamma"));
    m.def("secrecy_rate", &serj::secrecy_rate, py::arg("params"));

    m.def("min_key_bits", &serj::min_key_bits, py::arg("params"));
    m.def("jamming_ratio", &serj::jamming_ratio, py::arg("k_bits"), py::arg("l"));
    m.def("build_secrecy_plan", &serj::build_secrecy_plan, py::arg("params"));
    m.def("reliability_feasible", &serj::reliability_feasible, py::arg("plan"),
          py::arg("params"));

    m.def("eta", &serj::eta, py::arg("params"), py::arg("plan"),
          "Reliability constant converting the outage budget into a power constraint");
    m.def("reliability_budget", &serj::reliability_budget, py::arg("params"),
          py::arg("plan"));
    m.def("link_outage_probability", &serj::link_outage_probability, py::arg("p_s"),
          py::arg("distance"), py::arg("params"), py::arg("plan"));
    m.def(
        "end_to_end_outage",
        [](const std::vector<double>& per_link) {
            return serj::end_to_end_outage(per_link);
        },
        py::arg("per_link"));

    m.def(
        "optimal_power_allocation",
        [](const std::vector<serj::Link>& path, const serj::ReliabilityBudget& budget,
           const serj::SecrecyPlan& plan, const serj::SystemParams& params) {
            return serj::optimal_power_allocation(path, budget, plan, params);
        },
        py::arg("path"), py::arg("budget"), py::arg("plan"), py::arg("params"));
    m.def(
        "path_total_cost",
        [](const std::vector<serj::Link>& path, const serj::ReliabilityBudget& budget,
           const serj::SecrecyPlan& plan, const serj::SystemParams& params) {
            return serj::path_total_cost(path, budget, plan, params);
        },
        py::arg("path"), py::arg("budget"), py::arg("plan"), py::arg("params"));

    m.def("link_weight", &serj::link_weight, py::arg("distance"), py::arg("alpha"));
    m.def("serj_route", &serj::serj_route, py::arg("topology"), py::arg("params"),
          py::arg("max_link_distance") = std::numeric_limits<double>::infinity(),
          "Minimum-energy secret route with optimal power allocation");

    m.def("generate_topology", &serj::generate_topology, py::arg("spec"));
    m.def("run_sweep", &serj::run_sweep, py::arg("scenario"), py::arg("params"),
          "One row per grid point, ascending in the swept value");
    m.def(
        "monte_carlo_outage",
        [](const std::vector<serj::Link>& path, const serj::PowerAllocation& allocation,
           const serj::SystemParams& params, const serj::SecrecyPlan& plan,
           std::uint64_t trials, std::uint64_t seed) {
            return serj::monte_carlo_outage(path, allocation, params, plan, trials, seed);
        },
        py::arg("path"), py::arg("allocation"), py::arg("params"), py::arg("plan"),
        py::arg("trials"), py::arg("seed"));

#ifdef SERJ_VERSION
#define SERJ_STR_INNER(x) #x
#define SERJ_STR(x) SERJ_STR_INNER(x)
    m.attr("__version__") = SERJ_STR(SERJ_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}

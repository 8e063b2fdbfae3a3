// Python bindings for the disclosure-dynamics library. Thin pass-through of
// the main operations; everything heavy stays in the C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "disclose/equilibrium.hpp"
#include "disclose/mathkit.hpp"
#include "disclose/stochastic.hpp"
#include "disclose/switching.hpp"
#include "disclose/valuation.hpp"
#include "disclose/zone.hpp"

namespace py = pybind11;

using disclose::equilibrium::LiabilitySchedule;
using disclose::equilibrium::ModelParams;
using disclose::equilibrium::Regime;

PYBIND11_MODULE(pydisclose, m) {
    m.doc() = "equilibrium disclosure dynamics under litigation risk";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double lambda_, double sigma, double kappa, double beta) {
                 ModelParams p{lambda_, sigma, kappa, beta};
                 p.validate();
                 return p;
             }),
             py::arg("lambda_") = 3.0, py::arg("sigma") = 3.0,
             py::arg("kappa") = 0.7, py::arg("beta") = 1.0)
        .def_readwrite("lambda_", &ModelParams::lambda)
        .def_readwrite("sigma", &ModelParams::sigma)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def_readwrite("beta", &ModelParams::beta)
        .def("validate", &ModelParams::validate)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(lambda_=" + std::to_string(p.lambda) +
                   ", sigma=" + std::to_string(p.sigma) +
                   ", kappa=" + std::to_string(p.kappa) +
                   ", beta=" + std::to_string(p.beta) + ")";
        });

    py::class_<LiabilitySchedule>(m, "LiabilitySchedule")
        .def_static("zero", &LiabilitySchedule::zero)
        .def_static("constant", &LiabilitySchedule::constant, py::arg("rho"))
        .def_static("charge", &LiabilitySchedule::charge, py::arg("c"))
        .def_static("self_consistent", &LiabilitySchedule::self_consistent);

    py::enum_<Regime>(m, "Regime")
        .value("candid_first", Regime::candid_first)
        .value("sparing_first", Regime::sparing_first);

    py::enum_<disclose::switching::Corner>(m, "Corner")
        .value("none", disclose::switching::Corner::none)
        .value("at_zero", disclose::switching::Corner::at_zero)
        .value("at_one", disclose::switching::Corner::at_one);

    py::class_<disclose::switching::SwitchSolution>(m, "SwitchSolution")
        .def_readonly("theta", &disclose::switching::SwitchSolution::theta)
        .def_readonly("regime", &disclose::switching::SwitchSolution::regime)
        .def_readonly("foc_residual",
                      &disclose::switching::SwitchSolution::foc_residual)
        .def_readonly("exists", &disclose::switching::SwitchSolution::exists)
        .def_readonly("corner", &disclose::switching::SwitchSolution::corner);

    py::enum_<disclose::zone::Label>(m, "Label")
        .value("dye_reduction", disclose::zone::Label::dye_reduction)
        .value("goldilocks", disclose::zone::Label::goldilocks)
        .value("candid_only", disclose::zone::Label::candid_only);

    py::class_<disclose::stochastic::SimResult>(m, "SimResult")
        .def_readonly("estimate", &disclose::stochastic::SimResult::estimate)
        .def_readonly("std_error", &disclose::stochastic::SimResult::std_error)
        .def_readonly("samples", &disclose::stochastic::SimResult::samples)
        .def_readonly("seed", &disclose::stochastic::SimResult::seed);

    // time kernel
    m.def(
        "h_rate",
        [](double t, double sigma) {
            return disclose::mathkit::h_rate(t, disclose::mathkit::Kernel{sigma});
        },
        py::arg("t"), py::arg("sigma"));
    m.def(
        "g_cum",
        [](double t, double sigma) {
            return disclose::mathkit::g_cum(t, disclose::mathkit::Kernel{sigma});
        },
        py::arg("t"), py::arg("sigma"));

    // trend curves
    m.def("trend_sparing", &disclose::equilibrium::trend_sparing, py::arg("t"),
          py::arg("params"), py::arg("schedule"));
    m.def("trend_with_switch", &disclose::equilibrium::trend_with_switch,
          py::arg("t"), py::arg("theta"), py::arg("regime"), py::arg("params"),
          py::arg("schedule"));
    m.def("gamma1_sparing", &disclose::equilibrium::gamma1_sparing,
          py::arg("params"), py::arg("schedule"));
    m.def("gamma1_selfconsistent", &disclose::equilibrium::gamma1_selfconsistent,
          py::arg("params"));
    m.def("liability_share", &disclose::equilibrium::liability_share,
          py::arg("schedule"), py::arg("t"), py::arg("params"));

    // valuation
    m.def("call_value", &disclose::valuation::call_value, py::arg("y"),
          py::arg("strike"), py::arg("ttm"), py::arg("sigma"));
    m.def("put_value", &disclose::valuation::put_value, py::arg("y"),
          py::arg("strike"), py::arg("ttm"), py::arg("sigma"));
    m.def("partial_expectation_below",
          &disclose::valuation::partial_expectation_below, py::arg("gamma1"),
          py::arg("sigma"));
    m.def("expected_shortfall_S1", &disclose::valuation::expected_shortfall_S1,
          py::arg("params"), py::arg("schedule"));
    m.def("net_of_damages", &disclose::valuation::net_of_damages, py::arg("y"),
          py::arg("rho"), py::arg("gamma1"));
    m.def("bankruptcy_threshold", &disclose::valuation::bankruptcy_threshold,
          py::arg("rho"), py::arg("gamma1"));
    m.def("nondisclosure_gap", &disclose::valuation::nondisclosure_gap,
          py::arg("y"), py::arg("t"), py::arg("rho"), py::arg("gamma1"),
          py::arg("sigma"));

    // switching
    m.def("rho1_terminal", &disclose::switching::rho1_terminal, py::arg("params"),
          py::arg("schedule"));
    m.def("theta_candid_first", &disclose::switching::theta_candid_first,
          py::arg("params"), py::arg("schedule"));
    m.def("theta_sparing_first", &disclose::switching::theta_sparing_first,
          py::arg("params"), py::arg("schedule"));
    m.def("c_bar", &disclose::switching::c_bar, py::arg("params"));
    m.def("c_bar_quadratic", &disclose::switching::c_bar_quadratic, py::arg("c"),
          py::arg("params"));
    m.def("theta_prime", &disclose::switching::theta_prime, py::arg("c"),
          py::arg("params"), py::arg("step") = 1e-4);

    // zone
    m.def(
        "incremental_loss",
        [](double c, double d, const ModelParams& p) {
            return disclose::zone::incremental_loss({c, d}, p);
        },
        py::arg("c"), py::arg("d"), py::arg("params"));
    m.def(
        "incremental_gain",
        [](double c, double d, const ModelParams& p) {
            return disclose::zone::incremental_gain({c, d}, p);
        },
        py::arg("c"), py::arg("d"), py::arg("params"));
    m.def("underline_c", &disclose::zone::underline_c, py::arg("params"));
    m.def("classify", &disclose::zone::classify, py::arg("c"), py::arg("params"));
    m.def("label_name", &disclose::zone::label_name, py::arg("label"));

    // stochastic
    m.def("min_cdf_drifted", &disclose::stochastic::min_cdf_drifted, py::arg("a"),
          py::arg("mu"), py::arg("T"));
    m.def("max_cdf_drifted", &disclose::stochastic::max_cdf_drifted, py::arg("a"),
          py::arg("mu"), py::arg("T"));
    m.def("mills_ratio", &disclose::stochastic::mills_ratio_BC, py::arg("params"));
    m.def("admissible_lambda_bound", &disclose::stochastic::admissible_lambda_bound,
          py::arg("regime"), py::arg("params"));
    m.def("scienter_prob_closed", &disclose::stochastic::scienter_prob_closed,
          py::arg("regime"), py::arg("params"));
    m.def(
        "scienter_prob_mc",
        [](const ModelParams& p, Regime regime, std::uint64_t samples,
           std::uint64_t seed, bool conditional) {
            disclose::stochastic::SimConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.mode = regime;
            cfg.params = p;
            return disclose::stochastic::scienter_prob_mc(cfg, conditional);
        },
        py::arg("params"), py::arg("regime"), py::arg("samples") = 100000,
        py::arg("seed") = 42, py::arg("conditional") = false);
}

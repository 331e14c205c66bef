// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: link-level simulator for IRS-assisted downlink secrecy
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irs/channel.hpp"
#include "irs/errors.hpp"
#include "irs/experiment.hpp"
#include "irs/geometry.hpp"
#include "irs/link.hpp"
#include "irs/strategy.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace irs;

namespace
{
    py::array_t<cplx> to_numpy(const CVector &v)
    {
        py::array_t<cplx> out(static_cast<py::ssize_t>(v.size()));
        std::copy(v.begin(), v.end(), out.mutable_data());
        return out;
    }

    py::array_t<cplx> to_numpy(const CMatrix &m)
    {
        py::array_t<cplx> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                w(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m(r, c);
        return out;
    }

    py::array_t<double> to_numpy(const UsageMatrix &u)
    {
        py::array_t<double> out({static_cast<py::ssize_t>(u.num_ues()), static_cast<py::ssize_t>(u.num_irs())});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t k = 0; k < u.num_ues(); ++k)
            for (std::size_t n = 0; n < u.num_irs(); ++n)
                w(static_cast<py::ssize_t>(k), static_cast<py::ssize_t>(n)) = u(k, n);
        return out;
    }

    Permutation to_permutation(std::vector<std::size_t> assignment)
    {
        return Permutation{std::move(assignment)};
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Link-level simulator for IRS-assisted downlink secrecy with permutation switching";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IllConditioned>(m, "IllConditioned", PyExc_ArithmeticError);
    py::register_exception<PlacementFailure>(m, "PlacementFailure", PyExc_RuntimeError);
    py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", PyExc_RuntimeError);
    py::register_exception<SizeLimit>(m, "SizeLimit", PyExc_RuntimeError);
    py::register_exception<Infeasible>(m, "Infeasible", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    // geometry
    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y)
        .def(py::self == py::self)
        .def("__repr__", [](const Point2 &p)
             { return "Point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; });
    m.def("distance", &distance);

    py::class_<ScenarioTemplate>(m, "ScenarioTemplate")
        .def(py::init<>())
        .def_readwrite("num_ues", &ScenarioTemplate::num_ues)
        .def_readwrite("num_irs", &ScenarioTemplate::num_irs)
        .def_readwrite("m_bs", &ScenarioTemplate::m_bs)
        .def_readwrite("m_ue", &ScenarioTemplate::m_ue)
        .def_readwrite("m_mn", &ScenarioTemplate::m_mn)
        .def_readwrite("irs_sides", &ScenarioTemplate::irs_sides)
        .def_readwrite("wavelength", &ScenarioTemplate::wavelength)
        .def_readwrite("bandwidth", &ScenarioTemplate::bandwidth)
        .def_readwrite("tx_power", &ScenarioTemplate::tx_power)
        .def_readwrite("noise_psd", &ScenarioTemplate::noise_psd)
        .def_readwrite("q_weights", &ScenarioTemplate::q_weights)
        .def_readwrite("victim", &ScenarioTemplate::victim)
        .def_readwrite("room_size", &ScenarioTemplate::room_size)
        .def_readwrite("mn_radius", &ScenarioTemplate::mn_radius)
        .def("validate", &ScenarioTemplate::validate);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("params", &Scenario::params)
        .def_readwrite("bs_position", &Scenario::bs_position)
        .def_readwrite("ue_positions", &Scenario::ue_positions)
        .def_readwrite("irs_positions", &Scenario::irs_positions)
        .def_readwrite("mn_position", &Scenario::mn_position)
        .def("validate", &Scenario::validate);
    m.def("random_scenario", &random_scenario, py::arg("seed"), py::arg("params") = ScenarioTemplate{});

    py::class_<Angle>(m, "Angle")
        .def_readonly("rad", &Angle::rad)
        .def_readonly("sin", &Angle::sin);
    py::class_<LinkAngles>(m, "LinkAngles")
        .def_readonly("beta", &LinkAngles::beta)
        .def_readonly("phi1", &LinkAngles::phi1)
        .def_readonly("phi2", &LinkAngles::phi2)
        .def_readonly("phi3", &LinkAngles::phi3)
        .def_readonly("alpha", &LinkAngles::alpha)
        .def_readonly("eta", &LinkAngles::eta)
        .def_readonly("d1", &LinkAngles::d1)
        .def_readonly("d2", &LinkAngles::d2)
        .def_readonly("d3", &LinkAngles::d3);
    m.def("observation_angle", &observation_angle);
    m.def("compute_angles", &compute_angles);

    // channel
    m.def("signature", [](double sin_beta, std::size_t n) { return to_numpy(signature(sin_beta, n)); },
          py::arg("sin_beta"), py::arg("m"));
    m.def("irs_signature", [](double sin_phi, std::size_t side) { return to_numpy(irs_signature(sin_phi, side)); },
          py::arg("sin_phi"), py::arg("side"));
    m.def("propagation_coeff", &propagation_coeff, py::arg("gain"), py::arg("area"), py::arg("distance"),
          py::arg("wavelength"));
    m.def("irs_area", &irs_area);

    py::class_<RankOneChannel>(m, "RankOneChannel")
        .def_readonly("a", &RankOneChannel::a)
        .def_readonly("c", &RankOneChannel::c)
        .def_property_readonly("p", [](const RankOneChannel &h) { return to_numpy(h.p); })
        .def_property_readonly("q", [](const RankOneChannel &h) { return to_numpy(h.q); })
        .def("matrix", [](const RankOneChannel &h) { return to_numpy(h.matrix()); });
    py::class_<ChannelSet>(m, "ChannelSet")
        .def_readonly("h1", &ChannelSet::h1)
        .def_readonly("h2", &ChannelSet::h2)
        .def_readonly("h3", &ChannelSet::h3);
    m.def("build_channels", &build_channels);

    py::class_<IrsProfile>(m, "IrsProfile")
        .def_readonly("steering", &IrsProfile::steering)
        .def_readonly("common_phase", &IrsProfile::common_phase)
        .def_readonly("side", &IrsProfile::side)
        .def_property_readonly("phases", [](const IrsProfile &p) { return to_numpy(p.phases); });
    m.def("irs_profile", &irs_profile, py::arg("steering"), py::arg("side"), py::arg("common_phase") = 0.0);
    m.def("steer_irs", &steer_irs);

    // link
    py::class_<LinkOptions>(m, "LinkOptions")
        .def(py::init<bool>(), py::arg("allow_nonidentity_q") = false)
        .def_readwrite("allow_nonidentity_q", &LinkOptions::allow_nonidentity_q);
    py::class_<LinkMetrics>(m, "LinkMetrics")
        .def_readonly("rate", &LinkMetrics::rate)
        .def_readonly("sinr_ue", &LinkMetrics::sinr_ue)
        .def_readonly("sinr_mn", &LinkMetrics::sinr_mn)
        .def_readonly("secrecy", &LinkMetrics::secrecy);
    m.def("effective_channel_matrix",
          [](const Scenario &s, const ChannelSet &ch, const LinkAngles &a, std::vector<std::size_t> p)
          { return to_numpy(effective_channels(s, ch, a, to_permutation(std::move(p))).h_tilde); },
          "M_BS x K end-to-end channel matrix for an assignment (UE k -> IRS p[k])");
    m.def("zf_precoder",
          [](const Scenario &s, const ChannelSet &ch, const LinkAngles &a, std::vector<std::size_t> p)
          {
              const auto zf = zf_precoder(s, effective_channels(s, ch, a, to_permutation(std::move(p))));
              return py::make_tuple(to_numpy(zf.gamma), zf.mu);
          },
          "Zero-forcing precoder and its scale mu for an assignment");
    m.def("evaluate_permutation",
          [](const Scenario &s, const ChannelSet &ch, const LinkAngles &a, std::vector<std::size_t> p,
             const LinkOptions &opts) { return evaluate_permutation(s, ch, a, to_permutation(std::move(p)), opts); },
          py::arg("scenario"), py::arg("channels"), py::arg("angles"), py::arg("assignment"),
          py::arg("options") = LinkOptions{});

    // strategy
    m.def("permutation_count", &permutation_count, py::arg("n"), py::arg("k"), py::arg("limit") = max_permutations);
    m.def("enumerate_permutations",
          [](std::size_t n, std::size_t k, std::size_t limit)
          {
              std::vector<std::vector<std::size_t>> out;
              for (auto &p : enumerate_permutations(n, k, limit))
                  out.push_back(std::move(p.assignment));
              return out;
          },
          py::arg("n"), py::arg("k"), py::arg("limit") = max_permutations);

    py::class_<PermutationTable>(m, "PermutationTable")
        .def_readonly("num_ues", &PermutationTable::num_ues)
        .def_readonly("num_irs", &PermutationTable::num_irs)
        .def_property_readonly("perms",
                               [](const PermutationTable &t)
                               {
                                   std::vector<std::vector<std::size_t>> out;
                                   for (const auto &p : t.perms)
                                       out.push_back(p.assignment);
                                   return out;
                               })
        .def_readonly("metrics", &PermutationTable::metrics)
        .def("sum_rate", &PermutationTable::sum_rate)
        .def("__len__", &PermutationTable::size);
    m.def("evaluate_all", &evaluate_all, py::arg("scenario"), py::arg("channels"), py::arg("angles"),
          py::arg("options") = LinkOptions{});

    py::enum_<SelectionMethod>(m, "SelectionMethod")
        .value("best_rate", SelectionMethod::best_rate)
        .value("uniform_irs", SelectionMethod::uniform_irs)
        .value("random", SelectionMethod::random)
        .value("explicit", SelectionMethod::explicit_list);

    py::class_<PermutationSet>(m, "PermutationSet")
        .def_readonly("members", &PermutationSet::members)
        .def_readonly("method", &PermutationSet::method)
        .def("__len__", &PermutationSet::size);
    m.def("make_set", &make_set, py::arg("table"), py::arg("members"),
          py::arg("method") = SelectionMethod::explicit_list);
    m.def("usage_matrix", [](const PermutationTable &t, const PermutationSet &s) { return to_numpy(usage_matrix(t, s)); });
    m.def("select_best_rate", &select_best_rate);
    m.def("select_uniform_irs", &select_uniform_irs);
    m.def("select_random", &select_random, py::arg("table"), py::arg("size"), py::arg("seed"));

    py::class_<SchedulePolicy>(m, "SchedulePolicy")
        .def(py::init([](std::size_t tau, std::size_t delta, double r_min) { return SchedulePolicy{tau, delta, r_min}; }),
             py::arg("tau") = 1, py::arg("delta") = 1, py::arg("r_min") = 0.0)
        .def_readwrite("tau", &SchedulePolicy::tau)
        .def_readwrite("delta", &SchedulePolicy::delta)
        .def_readwrite("r_min", &SchedulePolicy::r_min);
    m.def("average_rate", &average_rate);
    m.def("sr_static", &sr_static);
    m.def("sr_dynamic", &sr_dynamic);
    m.def("sr_combined", &sr_combined);

    py::class_<SweepEntry>(m, "SweepEntry")
        .def_readonly("candidate", &SweepEntry::candidate)
        .def_readonly("set_size", &SweepEntry::set_size)
        .def_readonly("tau", &SweepEntry::tau)
        .def_readonly("avg_rate", &SweepEntry::avg_rate)
        .def_readonly("sr_static", &SweepEntry::sr_static)
        .def_readonly("sr_dynamic", &SweepEntry::sr_dynamic)
        .def_readonly("sr_combined", &SweepEntry::sr_combined)
        .def_readonly("max_usage", &SweepEntry::max_usage)
        .def_readonly("feasible", &SweepEntry::feasible)
        .def_readonly("score", &SweepEntry::score);
    py::class_<ObjectiveResult>(m, "ObjectiveResult")
        .def_readonly("entries", &ObjectiveResult::entries)
        .def_readonly("best", &ObjectiveResult::best);
    m.def("evaluate_objective", &evaluate_objective, py::arg("table"), py::arg("candidates"), py::arg("tau_grid"),
          py::arg("delta"), py::arg("r_min") = 0.0);

    // experiment
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("scenario", &ExperimentConfig::scenario)
        .def_readwrite("link", &ExperimentConfig::link)
        .def_readwrite("seeds", &ExperimentConfig::seeds)
        .def_readwrite("tau_grid", &ExperimentConfig::tau_grid)
        .def_readwrite("set_sizes", &ExperimentConfig::set_sizes)
        .def_readwrite("methods", &ExperimentConfig::methods)
        .def_readwrite("delta", &ExperimentConfig::delta)
        .def_readwrite("r_min", &ExperimentConfig::r_min)
        .def_readwrite("output_path", &ExperimentConfig::output_path)
        .def("delta_value", &ExperimentConfig::delta_value)
        .def("validate", &ExperimentConfig::validate);
    m.def("parse_config", [](const std::string &text) { return parse_config(text); });
    m.def("load_config", &load_config);

    py::class_<ResultRow>(m, "ResultRow")
        .def_readonly("seed", &ResultRow::seed)
        .def_readonly("method", &ResultRow::method)
        .def_readonly("set_size", &ResultRow::set_size)
        .def_readonly("tau", &ResultRow::tau)
        .def_readonly("ue", &ResultRow::ue)
        .def_readonly("avg_rate", &ResultRow::avg_rate)
        .def_readonly("sr_static", &ResultRow::sr_static)
        .def_readonly("sr_dynamic", &ResultRow::sr_dynamic)
        .def_readonly("sr_combined", &ResultRow::sr_combined)
        .def_readonly("max_usage", &ResultRow::max_usage)
        .def_readonly("feasible", &ResultRow::feasible);
    py::class_<SeedObjective>(m, "SeedObjective")
        .def_readonly("seed", &SeedObjective::seed)
        .def_readonly("feasible", &SeedObjective::feasible)
        .def_readonly("method", &SeedObjective::method)
        .def_readonly("set_size", &SeedObjective::set_size)
        .def_readonly("tau", &SeedObjective::tau)
        .def_readonly("score", &SeedObjective::score);
    py::class_<SkippedSeed>(m, "SkippedSeed")
        .def_readonly("seed", &SkippedSeed::seed)
        .def_readonly("reason", &SkippedSeed::reason);
    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("rows", &ExperimentResult::rows)
        .def_readonly("objectives", &ExperimentResult::objectives)
        .def_readonly("skipped", &ExperimentResult::skipped)
        .def("any_infeasible", &ExperimentResult::any_infeasible);
    m.def("run_experiment", &run_experiment, py::call_guard<py::gil_scoped_release>());
    m.def("selection_seed", &selection_seed);
    m.attr("csv_header") = std::string(csv_header);
    m.def("format_csv", &format_csv);
    m.def("write_csv", &write_csv);
}

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <string>
#include <vector>

#include "hybridcov/cli.hpp"
#include "hybridcov/config.hpp"
#include "hybridcov/constellation.hpp"
#include "hybridcov/coverage.hpp"
#include "hybridcov/designer.hpp"
#include "hybridcov/errors.hpp"
#include "hybridcov/mcsim.hpp"

namespace py = pybind11;
using namespace hybridcov;

namespace {

py::dict to_dict(const MCEstimate& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["ci_halfwidth"] = e.ci_halfwidth;
    d["trials"] = e.trials;
    d["successes"] = e.successes;
    d["seed"] = e.seed;
    return d;
}

py::array_t<double> to_array(const std::vector<Vec3>& pts) {
    py::array_t<double> out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{3}});
    auto v = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        v(i, 0) = pts[i].x;
        v(i, 1) = pts[i].y;
        v(i, 2) = pts[i].z;
    }
    return out;
}

MCOptions workers(int n) {
    MCOptions o;
    o.workers = n;
    return o;
}

ConstellationKind kind_of(const std::string& name) { return parse_constellation_kind(name); }

}  // namespace

PYBIND11_MODULE(_hybridcov, m) {
    m.doc() = "Uplink coverage of hybrid satellite-terrestrial networks";
    m.attr("__version__") = cli::kToolVersion;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init(&default_scenario))
        .def_static("parse", &config::parse_scenario, py::arg("text"))
        .def_static("load", &config::load_scenario, py::arg("path"))
        .def("save", py::overload_cast<const Scenario&>(&config::save_scenario))
        .def("get", &config::read_setting, py::arg("key"), "Value in the key's default unit")
        .def(
            "set",
            [](Scenario& s, const std::string& key, double value) {
                config::apply_setting(s, key, value);
                s.validate();
            },
            py::arg("key"), py::arg("value"))
        .def_property_readonly("hash", &config::scenario_hash)
        .def("copy", [](const Scenario& s) { return s; })
        .def_static("keys", &config::known_keys)
        .def_static("default_unit", &config::default_unit, py::arg("key"))
        .def("__repr__", [](const Scenario& s) { return "<Scenario " + config::scenario_hash(s) + ">"; });

    py::class_<CoverageModel>(m, "CoverageModel")
        .def(py::init<const Scenario&>(), py::arg("scenario"))
        .def("sat", py::overload_cast<double>(&CoverageModel::sat, py::const_), py::arg("num_satellites"))
        .def("terr", py::overload_cast<double>(&CoverageModel::terr, py::const_), py::arg("bs_density"),
             "bs_density in per m^2")
        .def(
            "hybrid",
            [](const CoverageModel& cm, double n, double lb) {
                const CoverageResult r = cm.hybrid(n, lb);
                return py::make_tuple(r.p_sat, r.p_terr, r.p_hybrid);
            },
            py::arg("num_satellites"), py::arg("bs_density"))
        .def("sat_supremum", &CoverageModel::sat_supremum)
        .def_property_readonly("mean_sat_interference", &CoverageModel::mean_sat_interference);

    m.def("sat_coverage", &sat_coverage, py::arg("scenario"));
    m.def("terr_coverage", &terr_coverage, py::arg("scenario"));
    m.def(
        "hybrid_coverage",
        [](const Scenario& s) {
            const CoverageResult r = CoverageModel(s).hybrid(s.cfg.num_satellites, s.dens.bs_density);
            return py::make_tuple(r.p_sat, r.p_terr, r.p_hybrid);
        },
        py::arg("scenario"), "Returns (p_sat, p_terr, p_hybrid)");

    m.def(
        "simulate_sat_link",
        [](const Scenario& s, const std::string& kind, std::int64_t trials, std::uint64_t seed, int threads) {
            py::gil_scoped_release nogil;
            return mc::simulate_sat_link(s, kind_of(kind), trials, seed, workers(threads));
        },
        py::arg("scenario"), py::arg("kind") = "uniform_random", py::arg("trials") = 10000, py::arg("seed") = 1,
        py::arg("threads") = 0);
    m.def(
        "simulate_terr_link",
        [](const Scenario& s, std::int64_t trials, std::uint64_t seed, int threads) {
            py::gil_scoped_release nogil;
            return mc::simulate_terr_link(s, trials, seed, workers(threads));
        },
        py::arg("scenario"), py::arg("trials") = 10000, py::arg("seed") = 1, py::arg("threads") = 0);
    m.def(
        "simulate_hybrid",
        [](const Scenario& s, const std::string& kind, std::int64_t trials, std::uint64_t seed, int threads) {
            HybridEstimate h;
            {
                py::gil_scoped_release nogil;
                h = mc::simulate_hybrid(s, kind_of(kind), trials, seed, workers(threads));
            }
            py::dict d;
            d["sat"] = to_dict(h.sat);
            d["terr"] = to_dict(h.terr);
            d["hybrid"] = to_dict(h.hybrid);
            return d;
        },
        py::arg("scenario"), py::arg("kind") = "uniform_random", py::arg("trials") = 10000, py::arg("seed") = 1,
        py::arg("threads") = 0);

    py::class_<MCEstimate>(m, "MCEstimate")
        .def_readonly("mean", &MCEstimate::mean)
        .def_readonly("ci_halfwidth", &MCEstimate::ci_halfwidth)
        .def_readonly("trials", &MCEstimate::trials)
        .def_readonly("successes", &MCEstimate::successes)
        .def_readonly("seed", &MCEstimate::seed)
        .def("as_dict", &to_dict);

    m.def(
        "required_satellites",
        [](double target, double bs_density, const Scenario& s) {
            return design::required_satellites(target, bs_density, CoverageModel(s)).n_sats;
        },
        py::arg("target"), py::arg("bs_density"), py::arg("scenario"));
    m.def(
        "required_bs_density",
        [](double target, int n_sats, const Scenario& s) {
            return design::required_bs_density(target, n_sats, CoverageModel(s)).bs_density;
        },
        py::arg("target"), py::arg("n_sats"), py::arg("scenario"), "Returns per m^2");
    m.def(
        "operating_curve",
        [](double target, const std::string& axis, const std::vector<double>& sweep, const Scenario& s) {
            SweepAxis ax;
            if (axis == "bs_density")
                ax = SweepAxis::bs_density;
            else if (axis == "num_satellites")
                ax = SweepAxis::num_satellites;
            else
                throw ConfigError("axis", "axis must be bs_density or num_satellites, got " + axis);
            py::list out;
            for (const OperatingPoint& p : design::operating_curve(target, ax, sweep, CoverageModel(s))) {
                py::dict d;
                d["n_sats"] = p.n_sats;
                d["bs_density"] = p.bs_density;
                d["target"] = p.target_qos;
                d["achieved"] = p.achieved;
                d["feasible"] = p.feasible;
                d["note"] = p.note;
                out.append(d);
            }
            return out;
        },
        py::arg("target"), py::arg("axis"), py::arg("sweep"), py::arg("scenario"),
        "bs_density sweep values in per m^2");

    m.def(
        "walker",
        [](const std::string& kind, int n_sats, double inclination, int planes, int phasing) {
            return to_array(constellation::walker(kind_of(kind), n_sats, inclination, planes, phasing).positions);
        },
        py::arg("kind"), py::arg("n_sats"), py::arg("inclination"), py::arg("planes"), py::arg("phasing") = 0,
        "Unit position vectors, shape (n_sats, 3); inclination in radians");
    m.def("default_planes", &constellation::default_planes, py::arg("n_sats"));
    m.def(
        "sample_uniform_sphere",
        [](std::size_t n, std::uint64_t seed) {
            Rng rng = substream(seed, 0);
            return to_array(constellation::sample_uniform_sphere(n, rng));
        },
        py::arg("n"), py::arg("seed") = 1);

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "hybridcov");
            std::vector<char*> argv;
            for (auto& a : args) argv.push_back(a.data());
            py::gil_scoped_release nogil;
            return cli::main(static_cast<int>(argv.size()), argv.data());
        },
        py::arg("args"), "Runs the command-line tool in-process; returns its exit code");
}

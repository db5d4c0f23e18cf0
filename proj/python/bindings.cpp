#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccgsa/benchmarks.hpp"
#include "ccgsa/cc.hpp"
#include "ccgsa/grouping.hpp"
#include "ccgsa/gsa.hpp"
#include "ccgsa/harness.hpp"

namespace py = pybind11;
using namespace ccgsa;

namespace {

std::vector<std::vector<int>> groups_as_lists(const GroupStructure& gs) { return gs.groups; }

Objective make_custom(int dim, std::vector<double> lower, std::vector<double> upper,
                      py::function fn, std::string name, std::optional<double> f_opt) {
    Objective o;
    o.name = std::move(name);
    o.dim = dim;
    o.lower = std::move(lower);
    o.upper = std::move(upper);
    o.f_opt = f_opt;
    o.eval = [fn](std::span<const double> x) {
        py::gil_scoped_acquire gil;
        return fn(std::vector<double>(x.begin(), x.end())).cast<double>();
    };
    o.validate();
    return o;
}

} // namespace

PYBIND11_MODULE(_ccgsa, m) {
    m.doc() = "Gravitational search and cooperative-coevolution optimizers";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<Objective>(m, "Objective")
        .def_readonly("name", &Objective::name)
        .def_readonly("dim", &Objective::dim)
        .def_readonly("lower", &Objective::lower)
        .def_readonly("upper", &Objective::upper)
        .def_readonly("f_opt", &Objective::f_opt)
        .def_readonly("x_opt", &Objective::x_opt)
        .def("eval",
             [](const Objective& o, const std::vector<double>& x) {
                 if (static_cast<int>(x.size()) != o.dim)
                     throw ConfigError("eval: wrong vector length");
                 return o.eval(x);
             })
        .def("__call__", [](const Objective& o, const std::vector<double>& x) {
            if (static_cast<int>(x.size()) != o.dim) throw ConfigError("eval: wrong vector length");
            return o.eval(x);
        });

    py::class_<StructuredProblem>(m, "StructuredProblem")
        .def_readonly("objective", &StructuredProblem::objective)
        .def_property_readonly("truth",
                               [](const StructuredProblem& sp) { return groups_as_lists(sp.truth); })
        .def_property_readonly("category",
                               [](const StructuredProblem& sp) { return to_string(sp.category); })
        .def_readonly("permutation", &StructuredProblem::permutation)
        .def_readonly("shift", &StructuredProblem::shift);

    py::class_<GsaParams>(m, "GsaParams")
        .def(py::init([](int pop_size, int max_iter, double g0, double alpha, double epsilon,
                         int kbest_final) {
                 GsaParams p;
                 p.pop_size = pop_size;
                 p.max_iter = max_iter;
                 p.g0 = g0;
                 p.alpha = alpha;
                 p.epsilon = epsilon;
                 p.kbest_final = kbest_final;
                 return p;
             }),
             py::arg("pop_size") = 50, py::arg("max_iter") = 500, py::arg("g0") = 100.0,
             py::arg("alpha") = 20.0, py::arg("epsilon") = 1e-10, py::arg("kbest_final") = 1)
        .def_readwrite("pop_size", &GsaParams::pop_size)
        .def_readwrite("max_iter", &GsaParams::max_iter)
        .def_readwrite("g0", &GsaParams::g0)
        .def_readwrite("alpha", &GsaParams::alpha)
        .def_readwrite("epsilon", &GsaParams::epsilon)
        .def_readwrite("kbest_final", &GsaParams::kbest_final);

    py::class_<GroupingReport>(m, "GroupingReport")
        .def_property_readonly("groups",
                               [](const GroupingReport& r) { return groups_as_lists(r.structure); })
        .def_readonly("evaluations_used", &GroupingReport::evaluations_used)
        .def_readonly("pairwise_checks", &GroupingReport::pairwise_checks);

    py::class_<GsaResult>(m, "GsaResult")
        .def_readonly("best_position", &GsaResult::best_position)
        .def_readonly("best_fitness", &GsaResult::best_fitness)
        .def_readonly("evaluations_used", &GsaResult::evaluations_used);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("best_position", &RunResult::best_position)
        .def_readonly("best_fitness", &RunResult::best_fitness)
        .def_readonly("trace", &RunResult::trace)
        .def_property_readonly("groups", [](const RunResult& r) { return groups_as_lists(r.groups); })
        .def_readonly("evaluations_used", &RunResult::evaluations_used)
        .def_readonly("grouping_evaluations", &RunResult::grouping_evaluations)
        .def_readonly("cycles_completed", &RunResult::cycles_completed);

    m.def("make_classical", py::overload_cast<const std::string&, int>(&make_classical),
          py::arg("id"), py::arg("dim"));
    m.def(
        "make_structured",
        [](const std::string& category, int dim, int group_size, const std::string& base,
           std::uint64_t seed) {
            return make_structured(category_from_string(category), dim, group_size,
                                   base_from_string(base), seed);
        },
        py::arg("category"), py::arg("dim"), py::arg("group_size"), py::arg("base"),
        py::arg("seed") = 1);
    m.def("custom_objective", &make_custom, py::arg("dim"), py::arg("lower"), py::arg("upper"),
          py::arg("fn"), py::arg("name") = "custom", py::arg("f_opt") = std::nullopt);

    m.def("compute_masses",
          [](const std::vector<double>& f) { return compute_masses(f); });
    m.def("gravitational_constant", &gravitational_constant, py::arg("t"), py::arg("t_max"),
          py::arg("g0"), py::arg("alpha"));
    m.def("kbest_size", &kbest_size, py::arg("t"), py::arg("t_max"), py::arg("n"),
          py::arg("kbest_final"));

    m.def(
        "detect_interaction",
        [](const Objective& obj, int i, int j, double epsilon_dg) {
            GroupingConfig cfg;
            cfg.epsilon_dg = epsilon_dg;
            EvalCounter counter;
            return detect_interaction(obj, i, j, cfg, counter);
        },
        py::arg("objective"), py::arg("i"), py::arg("j"), py::arg("epsilon_dg") = 1e-3);
    m.def(
        "group",
        [](const Objective& obj, double epsilon_dg) {
            GroupingConfig cfg;
            cfg.epsilon_dg = epsilon_dg;
            return group(obj, cfg);
        },
        py::arg("objective"), py::arg("epsilon_dg") = 1e-3);

    m.def(
        "run_gsa",
        [](const Objective& obj, const GsaParams& params, std::uint64_t budget,
           std::uint64_t seed) {
            Rng rng(seed);
            return run_gsa(obj, params, budget, rng);
        },
        py::arg("objective"), py::arg("params") = GsaParams{}, py::arg("budget") = 25'050,
        py::arg("seed") = 1);

    m.def(
        "run_ccgsa_dg",
        [](const Objective& obj, int cycles, const GsaParams& gsa, std::uint64_t budget,
           double epsilon_dg, std::uint64_t seed) {
            CcConfig cfg;
            cfg.cycles = cycles;
            cfg.gsa = gsa;
            cfg.fe_budget = budget;
            cfg.grouping.epsilon_dg = epsilon_dg;
            cfg.seed = seed;
            Rng rng(seed);
            return run_ccgsa_dg(obj, cfg, rng);
        },
        py::arg("objective"), py::arg("cycles") = 20, py::arg("gsa") = GsaParams{},
        py::arg("budget") = 200'000, py::arg("epsilon_dg") = 1e-3, py::arg("seed") = 1);
}

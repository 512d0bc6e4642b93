#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kappa/fixtures.hpp"
#include "kappa/parser.hpp"
#include "kappa/selftest.hpp"
#include "kappa/serialize.hpp"

namespace py = pybind11;
using namespace kappa;

namespace {

SmashConfig make_config(const std::string& basis, const std::string& order, bool metric_flipped,
                        bool transposed) {
    return SmashConfig{basis_from_string(basis), order_from_string(order),
                       Metric{metric_flipped},
                       transposed ? CoproductVariant::Transposed : CoproductVariant::Direct};
}

const RelationTable& named_table(const std::string& name, const SmashConfig& cfg,
                                 RelationTable& storage) {
    if (name == "x") return position_table(cfg.hopf());
    if (name == "p") return momentum_table();
    if (name == "phase") {
        storage = derive_table(cfg).rules();
        return storage;
    }
    throw Error("unknown table '" + name + "' (use x, p or phase)");
}

ActionMode mode_from(const std::string& s) {
    if (s == "x>p") return ActionMode::LeftXOnP;
    if (s == "p>x") return ActionMode::LeftPOnX;
    if (s == "p<x") return ActionMode::RightPByX;
    if (s == "x<p") return ActionMode::RightXByP;
    throw Error("unknown action mode '" + s + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "kappa-deformed phase-space engine (exact symbolic core + grid representation)";

    py::register_exception<Error>(m, "KappaError");

    py::class_<Element>(m, "Element")
        .def(py::init([](const std::string& text) { return parse(text); }))
        .def("__str__", &Element::to_string)
        .def("__repr__", [](const Element& e) { return "Element(\"" + e.to_string() + "\")"; })
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__add__", [](const Element& a, const Element& b) { return a + b; })
        .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
        .def("__neg__", [](const Element& a) { return -a; })
        .def("is_zero", &Element::is_zero);

    py::class_<DerivedTable>(m, "DerivedTable")
        .def_property_readonly("id", [](const DerivedTable& t) { return t.config.id(); })
        .def("relation",
             [](const DerivedTable& t, const std::string& lhs) {
                 for (int mu = 0; mu < 4; ++mu)
                     for (int nu = 0; nu < 4; ++nu) {
                         if (lhs == commutator_key('x', mu, 'x', nu)) return t.comms.xx[mu][nu];
                         if (lhs == commutator_key('x', mu, 'P', nu)) return t.comms.xp[mu][nu];
                         if (lhs == commutator_key('P', mu, 'P', nu)) return t.comms.pp[mu][nu];
                     }
                 throw Error("unknown relation key '" + lhs + "'");
             })
        .def_property_readonly("annotations",
                               [](const DerivedTable& t) { return t.annotations; })
        .def("to_json", [](const DerivedTable& t) { return table_to_json(t); })
        .def("verify",
             [](const DerivedTable& t) {
                 DiffReport d = verify_against_fixture(t);
                 return py::make_tuple(d.clean, diff_to_json(d));
             })
        .def("classical_limit", [](const DerivedTable& t) {
            return limit_report_to_json(check_classical_limit(t));
        });

    m.def(
        "parse", [](const std::string& s) { return parse(s); }, py::arg("text"),
        "parse the canonical expression syntax into an Element");

    m.def(
        "normalize",
        [](const Element& e, const std::string& table, const std::string& basis,
           const std::string& order, bool metric_flipped, bool transposed) {
            RelationTable storage = RelationTable::momentum();
            const RelationTable& t = named_table(
                table, make_config(basis, order, metric_flipped, transposed), storage);
            return normalize(e, t);
        },
        py::arg("element"), py::arg("table") = "phase", py::arg("basis") = "bicross",
        py::arg("order") = "px", py::arg("metric_flipped") = false, py::arg("transposed") = false);

    m.def(
        "commutator",
        [](const Element& a, const Element& b, const std::string& table, const std::string& basis,
           const std::string& order, bool metric_flipped, bool transposed) {
            RelationTable storage = RelationTable::momentum();
            const RelationTable& t = named_table(
                table, make_config(basis, order, metric_flipped, transposed), storage);
            return commutator(a, b, t);
        },
        py::arg("a"), py::arg("b"), py::arg("table") = "phase", py::arg("basis") = "bicross",
        py::arg("order") = "px", py::arg("metric_flipped") = false, py::arg("transposed") = false);

    m.def(
        "classical_limit", [](const Element& e) { return classical_limit(e); }, py::arg("element"));

    m.def(
        "pair",
        [](const Element& x, const Element& p, const std::string& basis, bool metric_flipped) {
            HopfContext ctx{basis_from_string(basis), Metric{metric_flipped}, {}};
            return pair(x, p, ctx).to_string();
        },
        py::arg("x"), py::arg("p"), py::arg("basis") = "bicross",
        py::arg("metric_flipped") = false);

    m.def(
        "act",
        [](const std::string& mode, const Element& actor, const Element& target,
           const std::string& basis, bool metric_flipped) {
            HopfContext ctx{basis_from_string(basis), Metric{metric_flipped}, {}};
            return act(mode_from(mode), actor, target, ctx);
        },
        py::arg("mode"), py::arg("actor"), py::arg("target"), py::arg("basis") = "bicross",
        py::arg("metric_flipped") = false);

    m.def(
        "coproduct",
        [](const Element& e, const std::string& side, const std::string& basis) {
            HopfContext ctx{basis_from_string(basis), {}, {}};
            TensorElement t = coproduct(e, side == "x" ? Side::X : Side::P, ctx);
            std::vector<py::tuple> out;
            for (const auto& [legs, s] : t.terms())
                out.push_back(py::make_tuple(legs.first.to_string(), legs.second.to_string(),
                                             s.to_string()));
            return out;
        },
        py::arg("element"), py::arg("side") = "p", py::arg("basis") = "bicross");

    m.def(
        "derive_table",
        [](const std::string& basis, const std::string& order, bool metric_flipped,
           bool transposed) {
            return derive_table(make_config(basis, order, metric_flipped, transposed));
        },
        py::arg("basis") = "bicross", py::arg("order") = "px", py::arg("metric_flipped") = false,
        py::arg("transposed") = false);

    m.def("fixture_ids", &fixture_ids);

    m.def(
        "uncertainty_sweep",
        [](const std::string& case_name, double hbar, const std::vector<double>& kappas,
           int states, int grid_n, double extent, std::uint64_t seed, const std::string& format) {
            Grid g{grid_n, extent};
            auto report = uncertainty_sweep(represent_case_from_string(case_name), g, hbar,
                                            kappas, states, seed);
            return format == "csv" ? uncertainty_to_csv(report) : uncertainty_to_json(report);
        },
        py::arg("case_name") = "bicross", py::arg("hbar") = 1.0,
        py::arg("kappas") = std::vector<double>{0.5, 1.0, 10.0}, py::arg("states") = 10,
        py::arg("grid_n") = 64, py::arg("extent") = 8.0, py::arg("seed") = 12345,
        py::arg("format") = "json");

    m.def(
        "commutator_residuals",
        [](const std::string& case_name, double hbar, double kappa, int grid_n, double extent) {
            Grid g{grid_n, extent};
            OperatorSet ops(represent_case_from_string(case_name), g, hbar, kappa);
            GridState state = GridState::gaussian(g, GaussianParams{});
            std::map<std::string, double> out;
            for (const auto& row : commutator_residuals(ops, state))
                out[row.relation] = row.residual;
            return out;
        },
        py::arg("case_name") = "bicross", py::arg("hbar") = 1.0, py::arg("kappa") = 1.0,
        py::arg("grid_n") = 64, py::arg("extent") = 8.0);

    m.def(
        "selftest",
        [](std::uint64_t seed, bool numeric) {
            SelftestOptions opts;
            opts.seed = seed;
            opts.algebra_triples = 120;
            opts.hopf_products = 40;
            opts.roundtrip_samples = 60;
            opts.termination_words = 40;
            opts.run_numeric = numeric;
            opts.residual_grid_n = 64;
            opts.sweep_grid_n = 64;
            opts.uncertainty_states = 5;
            opts.classical_probe_states = 5;
            std::vector<py::tuple> out;
            for (const auto& suite : run_selftest(opts))
                out.push_back(py::make_tuple(suite.name, suite.ok(), suite.checks));
            return out;
        },
        py::arg("seed") = 12345, py::arg("numeric") = false);
}

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lipcex/construction.hpp"
#include "lipcex/interpolation.hpp"
#include "lipcex/operators.hpp"
#include "lipcex/serialize.hpp"
#include "lipcex/verify.hpp"

namespace py = pybind11;
using namespace lipcex;

namespace {

StepFunction step_from_pieces(const std::vector<std::tuple<double, double, double>>& ps) {
    std::vector<Piece> pieces;
    pieces.reserve(ps.size());
    for (const auto& [lo, hi, v] : ps) pieces.push_back(Piece{lo, hi, v});
    return StepFunction(std::move(pieces));
}

CoupleOrder couple_from_string(const std::string& s) {
    if (s == "l1_linf") return CoupleOrder::l1_linf;
    if (s == "linf_l1") return CoupleOrder::linf_l1;
    throw DomainError("couple must be 'l1_linf' or 'linf_l1'");
}

double q_from_object(const py::object& q) {
    if (py::isinstance<py::str>(q)) {
        if (q.cast<std::string>() == "inf") return kInf;
        throw DomainError("q must be a number or 'inf'");
    }
    return q.cast<double>();
}

}  // namespace

PYBIND11_MODULE(_lipcex, m) {
    m.doc() = "step-function algebra, K-functionals and the nonlinear "
              "non-compactness operators on the (Linf, L1) couple";

    py::register_exception<DomainError>(m, "DomainError");

    py::class_<StepFunction>(m, "StepFunction")
        .def(py::init(&step_from_pieces), py::arg("pieces"),
             "pieces: list of (lo, hi, value) on half-open intervals")
        .def_static("indicator", &StepFunction::indicator, py::arg("lo"), py::arg("hi"),
                    py::arg("value") = 1.0)
        .def("__call__", &StepFunction::operator())
        .def("pieces",
             [](const StepFunction& f) {
                 std::vector<std::tuple<double, double, double>> out;
                 for (const Piece& p : f.pieces()) out.emplace_back(p.lo, p.hi, p.value);
                 return out;
             })
        .def("is_zero", &StepFunction::is_zero)
        .def("norm_l1", &StepFunction::norm_l1)
        .def("norm_linf", &StepFunction::norm_linf)
        .def("norm_lp", &StepFunction::norm_lp, py::arg("p"))
        .def("support_measure", &StepFunction::support_measure)
        .def("decreasing_rearrangement", &StepFunction::decreasing_rearrangement)
        .def("abs", &StepFunction::abs)
        .def("scaled", &StepFunction::scaled)
        .def("__add__", &StepFunction::operator+)
        .def("__sub__", &StepFunction::operator-)
        .def("__eq__", [](const StepFunction& a, const StepFunction& b) { return a == b; })
        .def("to_json", [](const StepFunction& f) { return step_to_json(f).dump(); })
        .def("to_csv", &step_to_csv);

    py::class_<PiecewiseLinear>(m, "PiecewiseLinear")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("breaks"),
             py::arg("values"))
        .def("__call__", &PiecewiseLinear::operator())
        .def("breakpoints", &PiecewiseLinear::breakpoints)
        .def("values", &PiecewiseLinear::values)
        .def("integral", &PiecewiseLinear::integral, py::arg("a"), py::arg("b"))
        .def("sup_norm", &PiecewiseLinear::sup_norm)
        .def("lp_norm", &PiecewiseLinear::lp_norm, py::arg("p"))
        .def("lipschitz_constant", &PiecewiseLinear::lipschitz_constant)
        .def("__sub__", &PiecewiseLinear::operator-)
        .def("to_json", [](const PiecewiseLinear& f) { return pl_to_json(f).dump(); })
        .def("to_csv", &pl_to_csv);

    m.def("pl_sup", [](const std::vector<PiecewiseLinear>& fs) {
        return PiecewiseLinear::sup(fs);
    });

    m.def("lambda_v", &lambda_v, py::arg("f"), py::arg("v"));
    m.def("m_tilde_v", &m_tilde_v, py::arg("f"), py::arg("v"));

    m.def(
        "k_functional",
        [](const StepFunction& f, double t, const std::string& couple) {
            return k_functional(f, t, couple_from_string(couple));
        },
        py::arg("f"), py::arg("t"), py::arg("couple") = "l1_linf");
    m.def("lorentz_quasinorm",
          [](const StepFunction& f, double p, const py::object& q) {
              return lorentz_quasinorm(f, p, q_from_object(q));
          },
          py::arg("f"), py::arg("p"), py::arg("q"));
    m.def(
        "interp_norm",
        [](const StepFunction& f, double theta, const py::object& q,
           const std::string& couple) {
            InterpParams params;
            params.theta = theta;
            params.q = q_from_object(q);
            params.couple = couple_from_string(couple);
            return interp_norm(f, params);
        },
        py::arg("f"), py::arg("theta"), py::arg("q"), py::arg("couple") = "linf_l1");

    m.def(
        "apply_operator",
        [](const std::string& name, const StepFunction& f, double p, int n_max,
           int big_n_max) -> py::object {
            VerifyConfig cfg;
            cfg.p = p;
            cfg.n_max = n_max;
            cfg.big_n_max = big_n_max;
            if (name == "t5") return py::cast(make_t5(p, big_n_max, big_n_max)(f));
            if (name == "t6") return py::cast(make_t6(p, big_n_max, big_n_max)(f));
            if (name == "t1") return py::cast(make_t1(n_max)(f));
            if (name == "t2") return py::cast(make_t2(n_max)(f));
            if (name == "t3") return py::cast(make_t3(n_max)(f));
            if (name == "t4") return py::cast(make_t4_embedded()(f));
            if (name == "q") return py::cast(make_q_dyadic(n_max)(f));
            if (name == "v") return py::cast(make_v(p, n_max)(f));
            throw DomainError("unknown operator " + name);
        },
        py::arg("name"), py::arg("f"), py::arg("p") = 2.0, py::arg("n_max") = 64,
        py::arg("N_max") = 40);

    m.def(
        "thresholds",
        [](double p) {
            py::dict d;
            d["sigma_p"] = sigma_threshold(p).threshold;
            d["tau_p"] = tau_threshold(p).threshold;
            d["nu_p_t4"] = nu4_threshold(p).threshold;
            return d;
        },
        py::arg("p") = 2.0);

    m.def(
        "build_tables",
        [](double p, int N, int n_table_max) {
            return tables_to_json(build_tables(p, N, n_table_max)).dump();
        },
        py::arg("p"), py::arg("N"), py::arg("n_table_max") = 40,
        "JSON dump of the per-(p, N) construction tables");

    m.def(
        "s_n_profile",
        [](double p, int N, double c, int n_table_max) {
            return s_n_profile(build_tables(p, N, n_table_max), c);
        },
        py::arg("p"), py::arg("N"), py::arg("c"), py::arg("n_table_max") = 40);

    m.def(
        "g_area",
        [](double p, int N, double t, int n_table_max) {
            return g_area(build_tables(p, N, n_table_max), t);
        },
        py::arg("p"), py::arg("N"), py::arg("t"), py::arg("n_table_max") = 40);
    m.def(
        "gamma",
        [](double p, int N, double s, int n_table_max) {
            return gamma(build_tables(p, N, n_table_max), s);
        },
        py::arg("p"), py::arg("N"), py::arg("s"), py::arg("n_table_max") = 40,
        "inverse of g_area");
    m.def(
        "g_profile",
        [](double p, int N, double t, int n_table_max) {
            return g_profile(build_tables(p, N, n_table_max), t);
        },
        py::arg("p"), py::arg("N"), py::arg("t"), py::arg("n_table_max") = 40);
    m.def(
        "e_polygon",
        [](double p, int N, double t, int n_table_max) {
            std::vector<std::pair<double, double>> out;
            for (const auto& v : e_polygon(build_tables(p, N, n_table_max), t).vertices)
                out.emplace_back(v[0], v[1]);
            return out;
        },
        py::arg("p"), py::arg("N"), py::arg("t"), py::arg("n_table_max") = 40);

    m.def("lip_bound", &lip_bound, py::arg("C"), py::arg("p"));

    m.def(
        "verify_report",
        [](const std::string& op, double p, uint64_t seed, int pair_samples,
           int sample_size) {
            VerifyConfig cfg;
            cfg.p = p;
            cfg.seed = seed;
            cfg.pair_samples = pair_samples;
            cfg.sample_size = sample_size;
            return verify_report(op, cfg).dump(2);
        },
        py::arg("operator_name"), py::arg("p") = 2.0, py::arg("seed") = 42,
        py::arg("pair_samples") = 2000, py::arg("sample_size") = 128,
        "JSON verification report for one operator or 'all'");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dualris/config.hpp"
#include "dualris/errors.hpp"
#include "dualris/integral_oracle.hpp"
#include "dualris/monte_carlo.hpp"
#include "dualris/quadrature.hpp"
#include "dualris/secrecy.hpp"
#include "dualris/special_functions.hpp"
#include "dualris/sweep.hpp"
#include "dualris/validation.hpp"

namespace py = pybind11;
using namespace dualris;

namespace {

template <class T>
std::string repr_of(const char* name, const T& fields) {
    std::ostringstream o;
    o << name << '(';
    bool first = true;
    for (const auto& [k, v] : fields) {
        o << (first ? "" : ", ") << k << '=' << format_double(v);
        first = false;
    }
    o << ')';
    return o.str();
}

}  // namespace

PYBIND11_MODULE(_dualris, m) {
    m.doc() = "Secrecy metrics for a cooperative dual-RIS NOMA wiretap link";

    static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<NumericError> numeric_error(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            py::object exc = py::handle(config_error.ptr())(e.what());
            exc.attr("key") = e.key();
            PyErr_SetObject(config_error.ptr(), exc.ptr());
        } catch (const NumericError& e) {
            py::object exc = py::handle(numeric_error.ptr())(e.what());
            exc.attr("best_estimate") = e.best_estimate();
            exc.attr("error_estimate") = e.error_estimate();
            PyErr_SetObject(numeric_error.ptr(), exc.ptr());
        } catch (const DomainError& e) {
            domain_error(e.what());
        }
    });

    py::enum_<DenominatorConvention>(m, "Convention")
        .value("paper", DenominatorConvention::paper)
        .value("gaussian", DenominatorConvention::gaussian);
    py::enum_<LosComposition>(m, "LosComposition")
        .value("product", LosComposition::product)
        .value("r2_side_only", LosComposition::r2_side_only);
    py::enum_<LinkDistances>(m, "LinkDistances")
        .value("shared", LinkDistances::shared)
        .value("per_receiver", LinkDistances::per_receiver);
    py::enum_<McMode>(m, "McMode")
        .value("clt_faithful", McMode::clt_faithful)
        .value("physical_f_sum", McMode::physical_f_sum)
        .value("paper_eve", McMode::paper_eve);
    py::enum_<Method>(m, "Method")
        .value("closed_form", Method::closed_form)
        .value("asymptotic", Method::asymptotic)
        .value("mc_oracle", Method::mc_oracle)
        .value("integral_oracle", Method::integral_oracle);

    py::class_<NetworkConfig>(m, "NetworkConfig")
        .def(py::init<>())
        .def_readwrite("P_dBm", &NetworkConfig::P_dBm)
        .def_readwrite("M1", &NetworkConfig::M1)
        .def_readwrite("M2", &NetworkConfig::M2)
        .def_property(
            "m1", [](const NetworkConfig& c) { return c.fading.m1; },
            [](NetworkConfig& c, double v) { c.fading.m1 = v; })
        .def_property(
            "m2", [](const NetworkConfig& c) { return c.fading.m2; },
            [](NetworkConfig& c, double v) { c.fading.m2 = v; })
        .def_readwrite("noise_r_dBm", &NetworkConfig::noise_r_dBm)
        .def_readwrite("noise_e_dBm", &NetworkConfig::noise_e_dBm)
        .def_readwrite("p_r1", &NetworkConfig::p_r1)
        .def_readwrite("p_r2", &NetworkConfig::p_r2)
        .def_readwrite("R_s", &NetworkConfig::R_s)
        .def_readwrite("alpha", &NetworkConfig::alpha)
        .def_readwrite("P_R1_dBm", &NetworkConfig::P_R1_dBm)
        .def_readwrite("P_R2_dBm", &NetworkConfig::P_R2_dBm)
        .def_readwrite("P_t1_dBm", &NetworkConfig::P_t1_dBm)
        .def_readwrite("P_t2_dBm", &NetworkConfig::P_t2_dBm)
        .def_readwrite("quadrature_order", &NetworkConfig::quadrature_order)
        .def_readwrite("los_composition", &NetworkConfig::los_composition)
        .def_readwrite("link_distances", &NetworkConfig::link_distances)
        .def_readwrite("convention", &NetworkConfig::convention)
        .def_property(
            "kappa", [](const NetworkConfig& c) { return c.geometry.kappa; },
            [](NetworkConfig& c, double v) { c.geometry.kappa = v; })
        .def("validate", &NetworkConfig::validate)
        .def("__repr__", [](const NetworkConfig& c) { return "NetworkConfig(\n" + format_config(c) + ")"; });

    py::class_<CltMoments>(m, "CltMoments")
        .def_readonly("mu_U", &CltMoments::mu_U)
        .def_readonly("var_U", &CltMoments::var_U)
        .def_readonly("mu_U2", &CltMoments::mu_U2)
        .def_readonly("A1", &CltMoments::A1)
        .def_readonly("A2", &CltMoments::A2)
        .def_readonly("lambda_e", &CltMoments::lambda_e)
        .def_property_readonly("sigma_U", &CltMoments::sigma_U);

    py::class_<SecrecyReport>(m, "SecrecyReport")
        .def_readonly("asc_r1", &SecrecyReport::asc_r1)
        .def_readonly("asc_r2", &SecrecyReport::asc_r2)
        .def_readonly("asc_total", &SecrecyReport::asc_total)
        .def_readonly("sop_r1", &SecrecyReport::sop_r1)
        .def_readonly("sop_r2", &SecrecyReport::sop_r2)
        .def_readonly("see", &SecrecyReport::see)
        .def_readonly("method", &SecrecyReport::method)
        .def_readonly("quadrature_order", &SecrecyReport::quadrature_order)
        .def("__repr__", [](const SecrecyReport& r) {
            return repr_of("SecrecyReport", std::initializer_list<std::pair<const char*, double>>{
                                                {"asc_r1", r.asc_r1},
                                                {"asc_r2", r.asc_r2},
                                                {"asc_total", r.asc_total},
                                                {"sop_r1", r.sop_r1},
                                                {"sop_r2", r.sop_r2},
                                                {"see", r.see}});
        });

    py::class_<McSettings>(m, "McSettings")
        .def(py::init<>())
        .def_readwrite("trials", &McSettings::trials)
        .def_readwrite("seed", &McSettings::seed)
        .def_readwrite("mode", &McSettings::mode)
        .def_readwrite("chunk_size", &McSettings::chunk_size)
        .def_readwrite("workers", &McSettings::workers);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("trials_used", &McEstimate::trials_used);

    py::class_<McResult>(m, "McResult")
        .def_readonly("report", &McResult::report)
        .def_readonly("asc_r1", &McResult::asc_r1)
        .def_readonly("asc_r2", &McResult::asc_r2)
        .def_readonly("asc_total", &McResult::asc_total)
        .def_readonly("sop_r1", &McResult::sop_r1)
        .def_readonly("sop_r2", &McResult::sop_r2);

    py::class_<IntegralOptions>(m, "IntegralOptions")
        .def(py::init<>())
        .def_readwrite("tol", &IntegralOptions::tol)
        .def_readwrite("survival", &IntegralOptions::survival)
        .def_readwrite("truncation_scale", &IntegralOptions::truncation_scale);

    py::class_<Dataset>(m, "Dataset")
        .def_readonly("columns", &Dataset::columns)
        .def_readonly("rows", &Dataset::rows)
        .def_readonly("series", &Dataset::series)
        .def_readonly("notes", &Dataset::notes)
        .def("column", [](const Dataset& d, const std::string& name) {
            const std::size_t c = d.column(name);
            std::vector<double> out;
            for (const auto& r : d.rows) out.push_back(r[c]);
            return out;
        })
        .def("to_csv", [](const Dataset& d) {
            std::ostringstream o;
            write_csv(d, o);
            return o.str();
        });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("id", &CheckResult::id)
        .def_readonly("title", &CheckResult::title)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail);

    m.def("parse_config", [](const std::string& text, bool strict) { return parse_config(text, {strict}); },
          py::arg("text"), py::arg("strict") = true);
    m.def("load_config", [](const std::string& path, bool strict) { return load_config(path, {strict}); },
          py::arg("path"), py::arg("strict") = true);
    m.def("format_config", &format_config);
    m.def("clt_moments", &clt_moments);
    m.def("mean_snr", [](const NetworkConfig& c) {
        const MeanSnr s = mean_snr(c);
        return py::make_tuple(s.gamma_bar, s.gamma_bar_e);
    });

    m.def("evaluate_closed_form", &evaluate_closed_form);
    m.def("evaluate_asymptotic", &evaluate_asymptotic);
    m.def("evaluate_integral_oracle", &evaluate_integral_oracle, py::arg("cfg"),
          py::arg("options") = IntegralOptions{}, py::call_guard<py::gil_scoped_release>());
    m.def("mc_secrecy", &mc_secrecy, py::arg("cfg"), py::arg("settings") = McSettings{},
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "sweep",
        [](const NetworkConfig& cfg, const std::string& variable, std::vector<double> grid,
           const std::vector<std::string>& metrics, const std::vector<std::string>& oracles, const McSettings& mc) {
            SweepSpec s;
            s.variable = parse_sweep_variable(variable);
            s.grid = std::move(grid);
            for (const auto& x : metrics) s.metrics.push_back(parse_metric(x));
            for (const auto& x : oracles) s.oracles.push_back(parse_oracle(x));
            s.mc = mc;
            py::gil_scoped_release release;
            return run_sweep(cfg, s);
        },
        py::arg("cfg"), py::arg("variable"), py::arg("grid"), py::arg("metrics"),
        py::arg("oracles") = std::vector<std::string>{}, py::arg("mc") = McSettings{});
    m.def(
        "preset",
        [](const std::string& name, const NetworkConfig& base) {
            py::gil_scoped_release release;
            return run_preset(name, base);
        },
        py::arg("name"), py::arg("base") = NetworkConfig{});
    m.def("preset_names", &preset_names);

    m.def(
        "validate",
        [](std::uint64_t trials, std::uint64_t seed, int order) {
            ValidationOptions opt;
            opt.trials = trials;
            opt.seed = seed;
            opt.order = order;
            py::gil_scoped_release release;
            const auto results = run_validation(opt);
            return std::make_pair(results, format_report(opt, results));
        },
        py::arg("trials") = 1000000, py::arg("seed") = 42, py::arg("order") = 30);

    m.def("erf", &special::erf);
    m.def("erfc", &special::erfc);
    m.def("expint_e1", &special::expint_e1);
    m.def("gauss_laguerre", [](int n) {
        const QuadratureRule r = gauss_laguerre(n);
        return std::make_pair(r.nodes, r.weights);
    });
    m.def("gauss_legendre", [](int n) {
        const QuadratureRule r = gauss_legendre(n);
        return std::make_pair(r.nodes, r.weights);
    });
}

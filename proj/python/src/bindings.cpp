#include "pmad/bayes.hpp"
#include "pmad/entropy.hpp"
#include "pmad/errors.hpp"
#include "pmad/io.hpp"
#include "pmad/lifetime.hpp"
#include "pmad/mle.hpp"
#include "pmad/model_selection.hpp"
#include "pmad/moments.hpp"
#include "pmad/simulation.hpp"

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pmad;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

DataSet as_dataset(const std::vector<double>& xs) { return DataSet(xs); }

}  // namespace

PYBIND11_MODULE(_pmad, m) {
    m.doc() = "Power Maxwell distribution: density, moments, estimation and model comparison";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
    py::register_exception<BoxEscapeError>(m, "BoxEscapeError", PyExc_RuntimeError);

    py::class_<Params>(m, "Params")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("alpha", &Params::alpha)
        .def_property_readonly("beta", &Params::beta)
        .def("__eq__", [](const Params& a, const Params& b) { return a == b; })
        .def("__repr__", [](const Params& p) {
            return "Params(alpha=" + io::format_number(p.alpha()) + ", beta=" + io::format_number(p.beta()) + ")";
        });

    m.def("pdf", py::vectorize([](Params p, double x) { return pdf(p, x); }), py::arg("params"), py::arg("x"));
    m.def("log_pdf", py::vectorize([](Params p, double x) { return log_pdf(p, x); }), py::arg("params"), py::arg("x"));
    m.def("cdf", py::vectorize([](Params p, double x) { return cdf(p, x); }), py::arg("params"), py::arg("x"));
    m.def("survival", py::vectorize([](Params p, double x) { return survival(p, x); }), py::arg("params"), py::arg("x"));
    m.def("hazard", py::vectorize([](Params p, double x) { return hazard(p, x); }), py::arg("params"), py::arg("x"));
    m.def("reverse_hazard", py::vectorize([](Params p, double x) { return reverse_hazard(p, x); }), py::arg("params"), py::arg("x"));
    m.def("quantile", py::vectorize([](Params p, double x) { return quantile(p, x); }), py::arg("params"), py::arg("prob"));
    m.def("sample", [](const Params& p, std::size_t n, std::uint64_t seed) {
        Sampler s(p, seed);
        return s.sample(n);
    }, py::arg("params"), py::arg("n"), py::arg("seed"));

    py::class_<ShapeSummary>(m, "ShapeSummary")
        .def_readonly("mean", &ShapeSummary::mean)
        .def_readonly("variance", &ShapeSummary::variance)
        .def_readonly("skewness", &ShapeSummary::skewness)
        .def_readonly("kurtosis", &ShapeSummary::kurtosis)
        .def_readonly("mode", &ShapeSummary::mode)
        .def_readonly("cv", &ShapeSummary::cv);
    m.def("raw_moment", &raw_moment, py::arg("params"), py::arg("r"));
    m.def("shape_summary", &shape_summary, py::arg("params"));
    m.def("mean_deviation", [](const Params& p) { return closed_form::mean_deviation(p); }, py::arg("params"));
    m.def("conditional_moment", [](const Params& p, int r, double k) { return closed_form::conditional_moment(p, r, k); },
          py::arg("params"), py::arg("r"), py::arg("k"));
    m.def("lorenz_curve", [](const Params& p, double nu) { return closed_form::lorenz_curve(p, nu); },
          py::arg("params"), py::arg("nu"));
    m.def("renyi_entropy", [](const Params& p, double d) { return closed_form::renyi_entropy(p, d); },
          py::arg("params"), py::arg("delta"));
    m.def("delta_entropy", [](const Params& p, double d) { return closed_form::delta_entropy(p, d); },
          py::arg("params"), py::arg("delta"));
    m.def("generalized_entropy", &generalized_entropy, py::arg("params"), py::arg("lam"));
    m.def("shannon_entropy", &shannon_entropy, py::arg("params"));
    m.def("residual_survival", [](const Params& p, double t, double x) {
        return residual_survival(ResidualSpec(p, t), x);
    }, py::arg("params"), py::arg("t"), py::arg("x"));
    m.def("properties", [](const Params& p) { return json_to_py(io::properties_json(p)); }, py::arg("params"));

    py::class_<Interval>(m, "Interval")
        .def_readonly("lower", &Interval::lower)
        .def_readonly("upper", &Interval::upper)
        .def_property_readonly("length", &Interval::length);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("alpha_hat", &FitResult::alpha_hat)
        .def_readonly("beta_hat", &FitResult::beta_hat)
        .def_readonly("loglik", &FitResult::loglik)
        .def_readonly("n", &FitResult::n)
        .def_readonly("var_alpha", &FitResult::var_alpha)
        .def_readonly("var_beta", &FitResult::var_beta)
        .def_readonly("ci_alpha", &FitResult::ci_alpha)
        .def_readonly("ci_beta", &FitResult::ci_beta)
        .def_readonly("mttf_hat", &FitResult::mttf_hat)
        .def_readonly("r_hat_at_t", &FitResult::r_hat_at_t)
        .def_readonly("h_hat_at_t", &FitResult::h_hat_at_t)
        .def_readonly("converged", &FitResult::converged)
        .def_readonly("iterations", &FitResult::iterations)
        .def("params", &FitResult::params)
        .def("to_dict", [](const FitResult& f) { return json_to_py(io::to_json(f)); });

    m.def("fit_mle", [](const std::vector<double>& xs, double t_eval, double level) {
        return fit_mle(as_dataset(xs), FitOptions{.t_eval = t_eval, .level = level});
    }, py::arg("data"), py::arg("t_eval") = 1.0, py::arg("level") = 0.95);
    m.def("log_likelihood", [](const std::vector<double>& xs, const Params& p) {
        return log_likelihood(as_dataset(xs), p);
    }, py::arg("data"), py::arg("params"));

    py::class_<GammaPrior>(m, "GammaPrior")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readonly("a", &GammaPrior::a)
        .def_readonly("b", &GammaPrior::b)
        .def_readonly("c", &GammaPrior::c)
        .def_readonly("d", &GammaPrior::d);
    m.def("elicit_hyperparams", &elicit_hyperparams, py::arg("mean_alpha"), py::arg("mean_beta"),
          py::arg("variance"));
    m.def("fit_bayes_lindley", [](const std::vector<double>& xs, const GammaPrior& prior) {
        return json_to_py(io::to_json(fit_bayes_lindley(as_dataset(xs), prior)));
    }, py::arg("data"), py::arg("prior"));

    m.def("ks_statistic", [](const std::vector<double>& xs, const Params& p) {
        return ks_statistic(as_dataset(xs), [&](double x) { return cdf(p, x); });
    }, py::arg("data"), py::arg("params"));
    m.def("information_criteria", [](double nll, int k, std::size_t n) {
        const auto ic = information_criteria(nll, k, n);
        return py::dict(py::arg("aic") = ic.aic, py::arg("aicc") = ic.aicc, py::arg("bic") = ic.bic);
    }, py::arg("neg_loglik"), py::arg("k"), py::arg("n"));
    m.def("summarize", [](const std::vector<double>& xs) { return json_to_py(io::to_json(summarize(as_dataset(xs)))); },
          py::arg("data"));
    m.def("gof", [](const std::vector<double>& xs) {
        py::list out;
        for (const auto& r : rank_models(gof_reports(as_dataset(xs), default_models()))) {
            out.append(json_to_py(io::to_json(r)));
        }
        return out;
    }, py::arg("data"));

    m.def("run_study", [](const Params& truth, std::size_t n, std::size_t replications, std::uint64_t seed,
                          bool bayes, double level, double prior_variance, double t_eval, unsigned workers) {
        SimConfig cfg;
        cfg.true_params = truth;
        cfg.n = n;
        cfg.replications = replications;
        cfg.seed = seed;
        cfg.bayes = bayes;
        cfg.level = level;
        cfg.prior_variance = prior_variance;
        cfg.t_eval = t_eval;
        cfg.workers = workers;
        SimReport r;
        {
            py::gil_scoped_release release;
            r = run_study(cfg);
        }
        return json_to_py(io::to_json(r));
    }, py::arg("params"), py::arg("n"), py::arg("replications") = 5000, py::arg("seed") = 20240601,
       py::arg("bayes") = true, py::arg("level") = 0.95, py::arg("prior_variance") = 0.5,
       py::arg("t_eval") = 1.0, py::arg("workers") = 0);

    m.def("ingest", [](const std::string& path) {
        const DataSet d = io::ingest(path);
        return std::vector<double>(d.values().begin(), d.values().end());
    }, py::arg("path"));
}

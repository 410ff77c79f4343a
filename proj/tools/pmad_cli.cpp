// pmad: command-line front end.
//
//   pmad fit --input data.txt [--bayes] [--t-eval T] [--level L] --out DIR
//   pmad gof --input data.txt --out DIR
//   pmad properties --alpha A --beta B [--out DIR]
//   pmad simulate --alpha A --beta B --n 10 --n 50 --reps R --seed S [--bayes] --out DIR
//
// Exit codes: 0 success, 1 computational failure, 2 usage or I/O error.
// Failures print a JSON object {"error": {...}} on stderr.

#include "pmad/bayes.hpp"
#include "pmad/errors.hpp"
#include "pmad/io.hpp"
#include "pmad/mle.hpp"
#include "pmad/model_selection.hpp"
#include "pmad/simulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kComputeFailure = 1;
constexpr int kUsageError = 2;

struct Flags {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::vector<std::size_t> n;
    std::size_t reps = 5000;
    std::uint64_t seed = 20240601;
    double level = 0.95;
    double t_eval = 1.0;
    double prior_variance = 0.5;
    bool bayes = false;
    unsigned workers = 0;
    std::string out = ".";
    std::string input;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json manifest(const std::string& command, const Flags& f) {
    json m{
        {"command", command},
        {"input_path", f.input.empty() ? json(nullptr) : json(f.input)},
        {"params", f.alpha && f.beta ? json{{"alpha", *f.alpha}, {"beta", *f.beta}} : json(nullptr)},
        {"flags",
         {{"n", f.n},
          {"reps", f.reps},
          {"seed", f.seed},
          {"level", f.level},
          {"t_eval", f.t_eval},
          {"prior_variance", f.prior_variance},
          {"bayes", f.bayes},
          {"workers", f.workers}}},
        {"output_dir", f.out},
    };
    return m;
}

void write_json(const fs::path& path, const json& j) { pmad::io::write_file(path, j.dump(2) + "\n"); }

pmad::Params require_params(const Flags& f) {
    if (!f.alpha || !f.beta) throw UsageError("--alpha and --beta are required");
    return pmad::Params(*f.alpha, *f.beta);
}

int cmd_fit(const Flags& f) {
    const pmad::DataSet d = pmad::io::ingest(f.input);
    const pmad::FitResult fit = pmad::fit_mle(d, pmad::FitOptions{.t_eval = f.t_eval, .level = f.level});
    if (!fit.converged) throw pmad::ConvergenceError("maximum likelihood fit did not converge");

    json bayes = nullptr;
    if (f.bayes) {
        // Prior centred at --alpha/--beta when given, otherwise at the MLE.
        const double ma = f.alpha.value_or(fit.alpha_hat);
        const double mb = f.beta.value_or(fit.beta_hat);
        const auto prior = pmad::elicit_hyperparams(ma, mb, f.prior_variance);
        bayes = pmad::io::to_json(pmad::fit_bayes_lindley(d, prior));
        bayes["prior"] = {{"a", prior.a}, {"b", prior.b}, {"c", prior.c}, {"d", prior.d}};
    }

    json models = json::array();
    for (const auto& r : pmad::rank_models(pmad::gof_reports(d, pmad::default_models()))) {
        models.push_back(pmad::io::to_json(r));
    }
    const fs::path out(f.out);
    const json report{
        {"schema_version", 1},
        {"manifest", manifest("fit", f)},
        {"data", {{"label", d.label()}, {"n", d.size()}, {"summary", pmad::io::to_json(pmad::summarize(d))}}},
        {"pmad", pmad::io::to_json(fit)},
        {"bayes", bayes},
        {"models", models},
        {"files", {"ecdf.csv", "qq.csv"}},
    };
    write_json(out / "report.json", report);
    pmad::io::write_file(out / "ecdf.csv", pmad::io::ecdf_csv(d, fit.params()));
    pmad::io::write_file(out / "qq.csv", pmad::io::qq_csv(d, fit.params()));
    std::cout << report.dump(2) << "\n";
    return kOk;
}

int cmd_gof(const Flags& f) {
    const pmad::DataSet d = pmad::io::ingest(f.input);
    const auto ranked = pmad::rank_models(pmad::gof_reports(d, pmad::default_models()));
    json models = json::array();
    for (const auto& r : ranked) models.push_back(pmad::io::to_json(r));
    const fs::path out(f.out);
    const json report{
        {"schema_version", 1},
        {"manifest", manifest("gof", f)},
        {"data", {{"label", d.label()}, {"n", d.size()}}},
        {"models", models},
        {"files", {"gof.csv"}},
    };
    write_json(out / "report.json", report);
    pmad::io::write_file(out / "gof.csv", pmad::io::gof_csv(ranked));
    std::cout << pmad::io::gof_csv(ranked);
    return kOk;
}

int cmd_properties(const Flags& f) {
    const json props = pmad::io::properties_json(require_params(f));
    const json report{
        {"schema_version", 1},
        {"manifest", manifest("properties", f)},
        {"properties", props},
    };
    write_json(fs::path(f.out) / "report.json", report);
    std::cout << props.dump(2) << "\n";
    return kOk;
}

int cmd_simulate(const Flags& f) {
    const pmad::Params truth = require_params(f);
    const std::vector<std::size_t> sizes = f.n.empty() ? std::vector<std::size_t>{10, 20, 30, 50} : f.n;
    std::vector<pmad::SimReport> reports;
    json studies = json::array();
    for (std::size_t n : sizes) {
        pmad::SimConfig cfg;
        cfg.true_params = truth;
        cfg.n = n;
        cfg.replications = f.reps;
        cfg.seed = f.seed;
        cfg.level = f.level;
        cfg.prior_variance = f.prior_variance;
        cfg.t_eval = f.t_eval;
        cfg.workers = f.workers;
        cfg.bayes = f.bayes;
        cfg.validate();
        reports.push_back(pmad::run_study(cfg));
        studies.push_back(pmad::io::to_json(reports.back()));
    }
    const fs::path out(f.out);
    const json report{
        {"schema_version", 1},
        {"manifest", manifest("simulate", f)},
        {"studies", studies},
        {"files", {"table2.csv", "table3.csv"}},
    };
    write_json(out / "report.json", report);
    pmad::io::write_file(out / "table2.csv", pmad::io::table2_csv(reports));
    pmad::io::write_file(out / "table3.csv", pmad::io::table3_csv(reports));
    std::cout << pmad::io::table2_csv(reports) << "\n" << pmad::io::table3_csv(reports);
    return kOk;
}

int fail(int code, const std::string& kind, const std::string& message, std::optional<std::size_t> line = {}) {
    json err{{"kind", kind}, {"message", message}, {"exit_code", code}};
    if (line) err["line"] = *line;
    std::cerr << json{{"error", err}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power Maxwell distribution: fitting, properties, goodness of fit and simulation"};
    app.require_subcommand(1);
    Flags f;

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--alpha", f.alpha, "Scale parameter alpha")->check(CLI::PositiveNumber);
        sub->add_option("--beta", f.beta, "Shape parameter beta")->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", f.out, "Output directory"); };
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("--level", f.level, "Confidence level")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--t-eval", f.t_eval, "Time at which R(t) and h(t) are reported")
            ->check(CLI::PositiveNumber);
    };
    auto add_bayes = [&](CLI::App* sub) {
        sub->add_flag("--bayes", f.bayes, "Also compute Lindley estimates");
        sub->add_option("--prior-variance", f.prior_variance, "Variance of the gamma priors")
            ->check(CLI::PositiveNumber);
    };

    auto* fit = app.add_subcommand("fit", "Fit a data file and write report.json, ecdf.csv, qq.csv");
    fit->add_option("--input", f.input, "Data file")->required();
    add_params(fit);
    add_level(fit);
    add_bayes(fit);
    add_out(fit);

    auto* gof = app.add_subcommand("gof", "Rank the built-in models on a data file and write gof.csv");
    gof->add_option("--input", f.input, "Data file")->required();
    add_out(gof);

    auto* props = app.add_subcommand("properties", "Distributional properties for one parameter pair");
    add_params(props);
    add_out(props);

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo estimator study; writes table2.csv, table3.csv");
    add_params(sim);
    sim->add_option("--n", f.n, "Sample size (repeatable)")->check(CLI::Range(std::size_t{3}, std::size_t{1} << 30));
    sim->add_option("--reps", f.reps, "Replications per sample size")->check(CLI::Range(std::size_t{100}, std::size_t{1} << 30));
    sim->add_option("--seed", f.seed, "Master seed");
    sim->add_option("--workers", f.workers, "Worker threads (0 = all cores)");
    add_level(sim);
    add_bayes(sim);
    add_out(sim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        return fail(kUsageError, "usage", e.what());
    }

    try {
        if (*fit) return cmd_fit(f);
        if (*gof) return cmd_gof(f);
        if (*props) return cmd_properties(f);
        return cmd_simulate(f);
    } catch (const UsageError& e) {
        std::cerr << app.help();
        return fail(kUsageError, "usage", e.what());
    } catch (const pmad::IoError& e) {
        return fail(kUsageError, "io", e.what());
    } catch (const pmad::ParseError& e) {
        return fail(kUsageError, "parse", e.what(), e.line());
    } catch (const pmad::DomainError& e) {
        return fail(kComputeFailure, "domain", e.what());
    } catch (const pmad::ConvergenceError& e) {
        return fail(kComputeFailure, "convergence", e.what());
    } catch (const pmad::DivergenceError& e) {
        return fail(kComputeFailure, "divergence", e.what());
    } catch (const pmad::BoxEscapeError& e) {
        return fail(kComputeFailure, "box_escape", e.what());
    } catch (const std::exception& e) {
        return fail(kComputeFailure, "internal", e.what());
    }
}

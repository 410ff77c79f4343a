#include "pmad/io.hpp"

#include "pmad/entropy.hpp"
#include "pmad/errors.hpp"
#include "pmad/moments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

namespace pmad::io {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json interval_json(const std::optional<Interval>& ci) {
    if (!ci) return nullptr;
    return {{"lower", ci->lower}, {"upper", ci->upper}, {"length", ci->length()}};
}

std::vector<double> sorted_values(const DataSet& d) {
    std::vector<double> xs(d.values().begin(), d.values().end());
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace

DataSet parse_dataset(std::istream& in, std::string label) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            double v = 0.0;
            const char* end = tok.data() + tok.size();
            const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
            if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
                throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + tok + "'",
                                 line_no);
            }
            if (!(v > 0.0)) {
                throw ParseError("line " + std::to_string(line_no) + ": nonpositive value " + tok,
                                 line_no);
            }
            values.push_back(v);
        }
    }
    return DataSet(std::move(values), std::move(label));
}

DataSet ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_dataset(in, path.filename().string());
}

std::string format_number(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

json to_json(const Params& p) { return {{"alpha", p.alpha()}, {"beta", p.beta()}}; }

json to_json(const FitResult& f) {
    return {
        {"alpha_hat", f.alpha_hat},
        {"beta_hat", f.beta_hat},
        {"loglik", f.loglik},
        {"neg_loglik", -f.loglik},
        {"n", f.n},
        {"converged", f.converged},
        {"iterations", f.iterations},
        {"info_singular", f.info_singular},
        {"observed_information",
         {{"aa", f.info_matrix.aa}, {"ab", f.info_matrix.ab}, {"bb", f.info_matrix.bb}}},
        {"var_alpha", optional_json(f.var_alpha)},
        {"var_beta", optional_json(f.var_beta)},
        {"cov_alpha_beta", optional_json(f.cov_alpha_beta)},
        {"level", f.level},
        {"ci_alpha", interval_json(f.ci_alpha)},
        {"ci_beta", interval_json(f.ci_beta)},
        {"t_eval", f.t_eval},
        {"mttf", f.mttf_hat},
        {"reliability_at_t", f.r_hat_at_t},
        {"hazard_at_t", f.h_hat_at_t},
    };
}

json to_json(const GofReport& r) {
    return {
        {"model", r.model_name}, {"params", r.params}, {"k", r.k},
        {"n", r.n},              {"neg_loglik", r.neg_loglik}, {"aic", r.aic},
        {"aicc", optional_json(r.aicc)}, {"bic", r.bic}, {"ks", r.ks},
    };
}

json to_json(const SampleSummary& s) {
    return {
        {"min", s.min},
        {"q1", s.q1},
        {"median", s.median},
        {"mean", s.mean},
        {"q3", s.q3},
        {"max", s.max},
        {"kurtosis", optional_json(s.kurtosis)},
        {"excess_kurtosis", optional_json(s.excess_kurtosis)},
        {"skewness", optional_json(s.skewness)},
    };
}

json to_json(const BayesResult& b) {
    return {
        {"alpha_lindley", b.alpha_lindley},
        {"beta_lindley", b.beta_lindley},
        {"alpha_posterior_mean", b.alpha_oracle},
        {"beta_posterior_mean", b.beta_oracle},
        {"abs_gap", {b.oracle_abs_gap.first, b.oracle_abs_gap.second}},
    };
}

json to_json(const SimConfig& c) {
    return {
        {"true_params", to_json(c.true_params)},
        {"n", c.n},
        {"replications", c.replications},
        {"seed", c.seed},
        {"level", c.level},
        {"prior_variance", c.prior_variance},
        {"t_eval", c.t_eval},
        {"bayes", c.bayes},
    };
}

namespace {

json stats_json(const EstimatorStats& s) {
    return {{"truth", s.truth}, {"avg", s.avg}, {"mse", s.mse}, {"se", s.se}, {"count", s.count}};
}

json interval_stats_json(const IntervalStats& s) {
    return {{"avg_lower", s.avg_lower}, {"avg_upper", s.avg_upper}, {"acl", s.acl},
            {"coverage", s.coverage},   {"count", s.count}};
}

}  // namespace

json to_json(const SimReport& r) {
    json out{
        {"config", to_json(r.config)},
        {"alpha_ml", stats_json(r.alpha_ml)},
        {"beta_ml", stats_json(r.beta_ml)},
        {"mttf_ml", stats_json(r.mttf_ml)},
        {"reliability_ml", stats_json(r.r_ml)},
        {"hazard_ml", stats_json(r.h_ml)},
        {"ci_alpha", interval_stats_json(r.ci_alpha)},
        {"ci_beta", interval_stats_json(r.ci_beta)},
        {"convergence_failures", r.convergence_failures},
        {"bayes_failures", r.bayes_failures},
    };
    if (r.config.bayes) {
        out["alpha_bl"] = stats_json(r.alpha_bl);
        out["beta_bl"] = stats_json(r.beta_bl);
    }
    return out;
}

json properties_json(const Params& p) {
    const ShapeSummary s = shape_summary(p);
    const Mode m = mode(p);
    json out{
        {"params", to_json(p)},
        {"mean", s.mean},
        {"variance", s.variance},
        {"skewness_beta1", s.skewness},
        {"kurtosis_beta2", s.kurtosis},
        {"mode", s.mode},
        {"mode_interior", m.interior},
        {"cv", s.cv},
        {"median", quantile(p, 0.5)},
        {"median_empirical", median_empirical(p)},
        {"mtsf", mtsf(p)},
        {"mean_deviation", closed_form::mean_deviation(p)},
    };
    try {
        out["shannon_entropy"] = shannon_entropy(p);
    } catch (const std::exception&) {
        out["shannon_entropy"] = nullptr;
    }
    json grid = json::array();
    auto entry = [&](const char* kind, double order, auto fn) {
        json e{{"kind", kind}, {"order", order}};
        try {
            e["value"] = fn();
        } catch (const std::exception&) {
            e["value"] = nullptr;
        }
        grid.push_back(std::move(e));
    };
    for (double delta : {0.5, 2.0, 3.0}) {
        entry("renyi", delta, [&] { return closed_form::renyi_entropy(p, delta); });
        entry("delta", delta, [&] { return closed_form::delta_entropy(p, delta); });
    }
    for (double lambda : {0.5, 2.0, 3.0}) {
        entry("generalized", lambda, [&] { return generalized_entropy(p, lambda); });
    }
    out["entropies"] = std::move(grid);
    return out;
}

bool information_criteria_consistent(const json& report) {
    if (!report.contains("models")) return false;
    for (const auto& m : report.at("models")) {
        const auto ic = information_criteria(m.at("neg_loglik").get<double>(), m.at("k").get<int>(),
                                             m.at("n").get<std::size_t>());
        if (ic.aic != m.at("aic").get<double>() || ic.bic != m.at("bic").get<double>()) return false;
        if (ic.aicc.has_value() != !m.at("aicc").is_null()) return false;
        if (ic.aicc && *ic.aicc != m.at("aicc").get<double>()) return false;
    }
    return true;
}

std::string ecdf_csv(const DataSet& d, const Params& fitted) {
    const auto xs = sorted_values(d);
    const double n = static_cast<double>(xs.size());
    std::string out = "x,empirical_F,fitted_F\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_number(xs[i]) + ',' + format_number((i + 1) / n) + ',' +
               format_number(cdf(fitted, xs[i])) + '\n';
    }
    return out;
}

std::string qq_csv(const DataSet& d, const Params& fitted) {
    const auto xs = sorted_values(d);
    const double n = static_cast<double>(xs.size());
    std::string out = "p,theoretical,empirical\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double prob = (i + 0.5) / n;
        out += format_number(prob) + ',' + format_number(quantile(fitted, prob)) + ',' +
               format_number(xs[i]) + '\n';
    }
    return out;
}

std::string gof_csv(const std::vector<GofReport>& reports) {
    std::string out = "Model,alpha_hat,beta_hat,-logL,AIC,AICC,BIC,K-S\n";
    for (const auto& r : reports) {
        out += r.model_name + ',';
        out += (r.params.size() > 0 ? format_number(r.params[0]) : std::string{}) + ',';
        out += (r.params.size() > 1 ? format_number(r.params[1]) : std::string{}) + ',';
        out += format_number(r.neg_loglik) + ',' + format_number(r.aic) + ',' +
               (r.aicc ? format_number(*r.aicc) : std::string{}) + ',' + format_number(r.bic) +
               ',' + format_number(r.ks) + '\n';
    }
    return out;
}

std::string table2_csv(const std::vector<SimReport>& reports) {
    std::string out =
        "n,alpha,beta,t,row,alpha_ml,beta_ml,MTTF_ml,R(t)_ml,H(t)_ml,alpha_bl,beta_bl,failures\n";
    for (const auto& r : reports) {
        const auto& c = r.config;
        const std::string lead = std::to_string(c.n) + ',' + format_number(c.true_params.alpha()) +
                                 ',' + format_number(c.true_params.beta()) + ',' +
                                 format_number(c.t_eval) + ',';
        auto row = [&](const char* tag, auto pick) {
            out += lead + tag;
            for (const EstimatorStats* s :
                 {&r.alpha_ml, &r.beta_ml, &r.mttf_ml, &r.r_ml, &r.h_ml}) {
                out += ',' + format_number(pick(*s));
            }
            for (const EstimatorStats* s : {&r.alpha_bl, &r.beta_bl}) {
                out += ',' + (c.bayes ? format_number(pick(*s)) : std::string{});
            }
            out += ',' + std::to_string(r.convergence_failures) + '\n';
        };
        row("avg", [](const EstimatorStats& s) { return s.avg; });
        row("mse", [](const EstimatorStats& s) { return s.mse; });
    }
    return out;
}

std::string table3_csv(const std::vector<SimReport>& reports) {
    std::string out = "n,alpha,beta,alpha_L,alpha_U,ACL_alpha,beta_L,beta_U,ACL_beta\n";
    for (const auto& r : reports) {
        const auto& c = r.config;
        out += std::to_string(c.n) + ',' + format_number(c.true_params.alpha()) + ',' +
               format_number(c.true_params.beta()) + ',' + format_number(r.ci_alpha.avg_lower) +
               ',' + format_number(r.ci_alpha.avg_upper) + ',' + format_number(r.ci_alpha.acl) +
               ',' + format_number(r.ci_beta.avg_lower) + ',' + format_number(r.ci_beta.avg_upper) +
               ',' + format_number(r.ci_beta.acl) + '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace pmad::io

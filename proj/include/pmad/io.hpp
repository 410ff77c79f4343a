#pragma once

#include "pmad/bayes.hpp"
#include "pmad/mle.hpp"
#include "pmad/model_selection.hpp"
#include "pmad/simulation.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pmad::io {

/// Whitespace- or comma-separated positive reals, any number per line.
/// Blank lines and lines whose first non-blank character is '#' are skipped.
/// Throws ParseError carrying the 1-based line number.
DataSet parse_dataset(std::istream& in, std::string label = {});

/// parse_dataset on a file; IoError if it cannot be opened. The label is
/// the file name.
DataSet ingest(const std::filesystem::path& path);

/// Ten significant digits, the format used in every CSV table.
std::string format_number(double v);

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const GofReport& r);
nlohmann::json to_json(const SampleSummary& s);
nlohmann::json to_json(const BayesResult& b);
nlohmann::json to_json(const SimConfig& c);
nlohmann::json to_json(const SimReport& r);

/// Shape summary, mode, median, MTSF, mean deviation, Shannon entropy and
/// a grid of Renyi, delta and generalized entropies for one parameter pair.
nlohmann::json properties_json(const Params& p);

/// Recomputes AIC, AICC and BIC of every entry of report["models"] from
/// neg_loglik, k and n and reports whether they reproduce the stored values
/// exactly.
bool information_criteria_consistent(const nlohmann::json& report);

/// x, empirical F (i/n) and fitted F at each sorted observation.
std::string ecdf_csv(const DataSet& d, const Params& fitted);
/// Plotting positions (i - 0.5)/n with fitted and empirical quantiles.
std::string qq_csv(const DataSet& d, const Params& fitted);
/// One row per model in the given order.
std::string gof_csv(const std::vector<GofReport>& reports);
/// Average estimates with their MSE row beneath, one block per study.
std::string table2_csv(const std::vector<SimReport>& reports);
/// Average interval bounds and ACLs, one row per study.
std::string table3_csv(const std::vector<SimReport>& reports);

/// Writes `content` to `path`, creating parent directories. IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pmad::io

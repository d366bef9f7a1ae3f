/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Command-line front end. Wires CSV ingestion into scoring, consensus
 * building, and the batch report; every output is a pure function of the
 * input files and flags.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "draftrank/aggregate.hpp"
#include "draftrank/core.hpp"
#include "draftrank/errors.hpp"
#include "draftrank/evaluate.hpp"
#include "draftrank/io.hpp"
#include "draftrank/metrics.hpp"

namespace {

namespace fs = std::filesystem;
using namespace draftrank;

struct RunConfig {
  std::string data_path;
  std::string actuals_path;
  std::string alias_path;
  double q = 0.98;
  int window_days = 10;
  int horizon_days = 30;
  int min_seasons = 3;
  std::string method = "both";  // consensus series filter for reports
  std::string out_dir = ".";
};

void add_common_flags(CLI::App* cmd, RunConfig* config) {
  cmd->add_option("--data", config->data_path, "Mock draft CSV")->required();
  cmd->add_option("--actuals", config->actuals_path, "Actual draft CSV")
      ->required();
  cmd->add_option("--alias", config->alias_path,
                  "Alias CSV (variant,canonical)");
  cmd->add_option("--q", config->q, "Persistence parameter in (0,1)")
      ->capture_default_str();
}

DraftDataset load(const RunConfig& config) {
  LoadOptions options;
  options.alias_path = config.alias_path;
  return load_dataset(config.data_path, config.actuals_path, options);
}

std::string format_value(const char* name, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s %.6f", name, v);
  return buf;
}

/// File-name fragment for an author track label.
std::string slugify(const std::string& label) {
  std::string slug;
  for (const char c : normalize_key(label)) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      slug += c;
    } else if (!slug.empty() && slug.back() != '_') {
      slug += '_';
    }
  }
  while (!slug.empty() && slug.back() == '_') slug.pop_back();
  return slug.empty() ? "unnamed" : slug;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

int cmd_score(const RunConfig& config, int season, const std::string& author,
              const std::string& type, bool baselines) {
  const DraftDataset dataset = load(config);
  const AuthorKey wanted{author, forecast_type_from_string(type)};

  const auto finals =
      select_final_mocks(dataset, season, config.horizon_days);
  const FinalMockSelection* match = nullptr;
  for (const auto& sel : finals) {
    if (sel.author_key == wanted) {
      match = &sel;
      break;
    }
  }
  if (match == nullptr) {
    throw UnknownAuthorError("author '" + wanted.display() +
                             "' has no final mock for season " +
                             std::to_string(season) + " within " +
                             std::to_string(config.horizon_days) + " days");
  }

  MetricParams params;
  params.q = config.q;
  const RankedList& actual = dataset.actual(season).list;
  std::cout << format_value("rbd", rbd(match->record.list, actual, params))
            << "\n";
  if (baselines) {
    std::cout << format_value("mae",
                              mae(match->record.list, actual, params, false))
              << "\n"
              << format_value("log_mae",
                              mae(match->record.list, actual, params, true))
              << "\n";
  }
  return 0;
}

int cmd_consensus(const RunConfig& config, int season,
                  const std::string& as_of, const std::string& method) {
  const DraftDataset dataset = load(config);
  const ConsensusResult result = rolling_consensus_detail(
      dataset, season, parse_date(as_of), config.window_days,
      consensus_method_from_string(method));

  fs::create_directories(config.out_dir);
  const fs::path csv_path =
      fs::path(config.out_dir) / ("consensus_" + std::to_string(season) + "_" +
                                  to_string(result.method) + ".csv");
  auto csv = open_output(csv_path);
  write_consensus_csv(csv, result);
  std::cout << "wrote " << csv_path.string() << "\n";

  if (result.rca.has_value()) {
    const fs::path trace_path =
        fs::path(config.out_dir) /
        ("rca_trace_" + std::to_string(season) + ".log");
    auto trace = open_output(trace_path);
    write_rca_trace(trace, *result.rca);
    std::cout << "wrote " << trace_path.string() << "\n";
  }
  return 0;
}

int cmd_report(const RunConfig& config) {
  const DraftDataset dataset = load(config);
  MetricParams params;
  params.q = config.q;

  fs::create_directories(config.out_dir);

  const PercentileTable table = percentile_table(
      dataset, params, config.horizon_days, config.min_seasons);
  const fs::path pct_path = fs::path(config.out_dir) / "percentiles.csv";
  auto pct = open_output(pct_path);
  write_percentile_csv(pct, table);
  std::cout << "wrote " << pct_path.string() << "\n";

  const bool keep_borda = config.method == "both" || config.method == "borda";
  const bool keep_rca = config.method == "both" || config.method == "rca";
  for (const int season : table.seasons) {
    std::vector<TimeseriesCell> cells =
        error_timeseries(dataset, season, params, config.window_days);
    if (!keep_borda || !keep_rca) {
      std::erase_if(cells, [&](const TimeseriesCell& c) {
        return (c.series_key == "BORDA" && !keep_borda) ||
               (c.series_key == "RCA" && !keep_rca);
      });
    }
    const fs::path ts_path = fs::path(config.out_dir) /
                             ("timeseries_" + std::to_string(season) + ".csv");
    auto ts = open_output(ts_path);
    write_timeseries_csv(ts, cells);
    std::cout << "wrote " << ts_path.string() << "\n";

    const RankedList& actual = dataset.actual(season).list;
    for (const auto& sel :
         select_final_mocks(dataset, season, config.horizon_days)) {
      const fs::path slope_path =
          fs::path(config.out_dir) /
          ("slopegraph_" + std::to_string(season) + "_" +
           slugify(sel.author_key.display()) + ".txt");
      auto slope = open_output(slope_path);
      write_slopegraph(slope, slopegraph(sel.record.list, actual));
      std::cout << "wrote " << slope_path.string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mock draft accuracy metrics and consensus aggregation"};
  app.require_subcommand(1);

  RunConfig config;

  int season = 0;
  std::string author;
  std::string type = "mock";
  bool baselines = false;
  CLI::App* score =
      app.add_subcommand("score", "Error of one author's final mock");
  add_common_flags(score, &config);
  score->add_option("--horizon-days", config.horizon_days,
                    "Final-mock horizon before draft day")
      ->capture_default_str();
  score->add_option("--season", season, "Draft season")->required();
  score->add_option("--author", author, "Author name")->required();
  score->add_option("--type", type, "Forecast type: mock or ranking")
      ->capture_default_str();
  score->add_flag("--baselines", baselines,
                  "Also print mae and log_mae baselines");

  std::string as_of;
  std::string method = "borda";
  CLI::App* consensus =
      app.add_subcommand("consensus", "Rolling consensus ranking");
  add_common_flags(consensus, &config);
  consensus->add_option("--window-days", config.window_days,
                        "Lookback window for mock selection")
      ->capture_default_str();
  consensus->add_option("--season", season, "Draft season")->required();
  consensus->add_option("--as-of", as_of, "Consensus date (YYYY-MM-DD)")
      ->required();
  consensus->add_option("--method", method, "borda or rca")->required();
  consensus->add_option("--out", config.out_dir, "Output directory")
      ->capture_default_str();

  CLI::App* report = app.add_subcommand(
      "report", "Percentile table, time series, and slope graphs");
  add_common_flags(report, &config);
  report->add_option("--window-days", config.window_days,
                     "Lookback window for the time series")
      ->capture_default_str();
  report->add_option("--horizon-days", config.horizon_days,
                     "Final-mock horizon before draft day")
      ->capture_default_str();
  report->add_option("--min-seasons", config.min_seasons,
                     "Minimum scored seasons for an author row")
      ->capture_default_str();
  report->add_option("--method", config.method,
                     "Consensus overlays in time series: borda, rca, or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"borda", "rca", "both"}));
  report->add_option("--out", config.out_dir, "Output directory")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      return cmd_score(config, season, author, type, baselines);
    }
    if (consensus->parsed()) {
      return cmd_consensus(config, season, as_of, method);
    }
    return cmd_report(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

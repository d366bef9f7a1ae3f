/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Python bindings for the main operations. Dates cross the boundary as
 * ISO-8601 strings; rank lists convert implicitly from sequences of
 * strings; enums travel as their lowercase labels.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "draftrank/aggregate.hpp"
#include "draftrank/core.hpp"
#include "draftrank/errors.hpp"
#include "draftrank/evaluate.hpp"
#include "draftrank/io.hpp"
#include "draftrank/metrics.hpp"

namespace py = pybind11;
using namespace draftrank;

namespace {

MetricParams params_of(double q, int impute_rank,
                       const std::string& universe) {
  MetricParams params;
  params.q = q;
  params.impute_rank = impute_rank;
  params.eval_universe = eval_universe_from_string(universe);
  return params;
}

std::vector<int> tiers_of(const RankedList& list) {
  std::vector<int> tiers;
  tiers.reserve(list.size());
  for (int rank = 1; rank <= static_cast<int>(list.size()); ++rank) {
    tiers.push_back(list.tier_of(rank));
  }
  return tiers;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mock draft accuracy metrics and consensus aggregation";
  m.attr("__version__") = "1.0.0";

  py::register_exception<Error>(m, "Error");

  py::class_<RankedList>(m, "RankedList")
      .def(py::init([](std::vector<std::string> entries) {
             return RankedList::from_entries(std::move(entries));
           }),
           py::arg("entries"))
      .def(py::init([](std::vector<std::string> entries,
                       std::vector<int> tiers) {
             return RankedList::from_entries(std::move(entries),
                                             std::move(tiers));
           }),
           py::arg("entries"), py::arg("tiers"))
      .def_property_readonly("entries",
                             [](const RankedList& l) { return l.entries(); })
      .def_property_readonly("tiers", &tiers_of)
      .def("__len__", &RankedList::size)
      .def("position_of",
           [](const RankedList& l, const std::string& item) {
             return l.position_of(item);
           },
           py::arg("item"))
      .def("contains",
           [](const RankedList& l, const std::string& item) {
             return l.contains(item);
           },
           py::arg("item"))
      .def("has_tied_entries", &RankedList::has_tied_entries)
      .def("__eq__",
           [](const RankedList& a, const RankedList& b) { return a == b; })
      .def("__repr__", [](const RankedList& l) {
        std::string out = "RankedList([";
        for (std::size_t i = 0; i < l.size(); ++i) {
          if (i > 0) out += ", ";
          out += "'" + l.entries()[i] + "'";
        }
        return out + "])";
      });
  py::implicitly_convertible<py::list, RankedList>();

  m.def(
      "rbd",
      [](const RankedList& a, const RankedList& b, double q) {
        MetricParams params;
        params.q = q;
        return rbd(a, b, params);
      },
      py::arg("a"), py::arg("b"), py::arg("q") = 0.98,
      "Rank-biased distance between two lists, 0 (same) to 1 (disjoint).");

  m.def("prefix_weight", &prefix_weight, py::arg("q"), py::arg("depth"),
        "Share of total metric weight carried by ranks 1..depth.");

  m.def(
      "overlap_at_depth",
      [](const RankedList& a, const RankedList& b, int depth) {
        return overlap_at_depth(a, b, depth);
      },
      py::arg("a"), py::arg("b"), py::arg("depth"));

  m.def(
      "mae",
      [](const RankedList& mock, const RankedList& actual, double q,
         int impute_rank, const std::string& universe, bool log_scale) {
        return mae(mock, actual, params_of(q, impute_rank, universe),
                   log_scale);
      },
      py::arg("mock"), py::arg("actual"), py::arg("q") = 0.98,
      py::arg("impute_rank") = 61, py::arg("universe") = "union",
      py::arg("log_scale") = false,
      "Mean absolute rank error with imputed positions.");

  py::class_<TieGroup>(m, "TieGroup")
      .def_readonly("rank", &TieGroup::rank)
      .def_readonly("items", &TieGroup::items);

  py::class_<BordaResult>(m, "BordaResult")
      .def_readonly("ordering", &BordaResult::ordering)
      .def_readonly("ordering_scores", &BordaResult::ordering_scores)
      .def_readonly("scores", &BordaResult::scores)
      .def_readonly("tie_groups", &BordaResult::tie_groups)
      .def("score_of",
           [](const BordaResult& r, const std::string& item) {
             return r.score_of(item);
           },
           py::arg("item"));

  m.def(
      "borda",
      [](const std::vector<RankedList>& mocks, int draft_length) {
        return borda(mocks, draft_length);
      },
      py::arg("mocks"), py::arg("draft_length"),
      "Point-sum consensus of the given rank lists.");

  py::class_<RcaRound>(m, "RcaRound")
      .def_readonly("pick", &RcaRound::pick)
      .def_readonly("ballots_cast", &RcaRound::ballots_cast)
      .def_readonly("votes", &RcaRound::votes)
      .def_property_readonly("action",
                             [](const RcaRound& r) {
                               return r.action == RcaRound::Action::Win
                                          ? "win"
                                          : "eliminate";
                             })
      .def_readonly("subject", &RcaRound::subject);

  py::class_<RcaTrace>(m, "RcaTrace")
      .def_readonly("ordering", &RcaTrace::ordering)
      .def_readonly("rounds", &RcaTrace::rounds)
      .def("rounds_for_pick", &RcaTrace::rounds_for_pick, py::arg("pick"));

  m.def(
      "rca",
      [](const std::vector<RankedList>& mocks, int num_picks) {
        return rca(mocks, num_picks);
      },
      py::arg("mocks"), py::arg("num_picks"),
      "Per-pick instant-runoff consensus of the given rank lists.");

  py::class_<DraftDataset>(m, "DraftDataset")
      .def_property_readonly("seasons",
                             [](const DraftDataset& ds) {
                               std::vector<int> seasons;
                               for (const auto& [season, actual] :
                                    ds.actuals()) {
                                 seasons.push_back(season);
                               }
                               return seasons;
                             })
      .def("has_actual", &DraftDataset::has_actual, py::arg("season"))
      .def("actual",
           [](const DraftDataset& ds, int season) {
             return ds.actual(season).list;
           },
           py::arg("season"))
      .def("draft_date",
           [](const DraftDataset& ds, int season) {
             return format_date(ds.actual(season).draft_date);
           },
           py::arg("season"))
      .def("mock_count",
           [](const DraftDataset& ds, int season) {
             return ds.mocks_for_season(season).size();
           },
           py::arg("season"));

  m.def(
      "load_dataset",
      [](const std::string& mocks_path, const std::string& actuals_path,
         const std::string& alias_path, int max_actual_length) {
        LoadOptions options;
        options.alias_path = alias_path;
        options.max_actual_length = max_actual_length;
        return load_dataset(mocks_path, actuals_path, options);
      },
      py::arg("mocks_path"), py::arg("actuals_path"),
      py::arg("alias_path") = "", py::arg("max_actual_length") = 60,
      "Load and validate the mock and actual draft CSV files.");

  m.def(
      "rolling_consensus",
      [](const DraftDataset& dataset, int season, const std::string& as_of,
         int window_days, const std::string& method) {
        return rolling_consensus(dataset, season, parse_date(as_of),
                                 window_days,
                                 consensus_method_from_string(method));
      },
      py::arg("dataset"), py::arg("season"), py::arg("as_of"),
      py::arg("window_days") = 10, py::arg("method") = "borda",
      "Consensus of each author's freshest record in the lookback window.");

  py::class_<FinalMockSelection>(m, "FinalMockSelection")
      .def_readonly("season", &FinalMockSelection::season)
      .def_property_readonly("label",
                             [](const FinalMockSelection& s) {
                               return s.author_key.display();
                             })
      .def_property_readonly("author",
                             [](const FinalMockSelection& s) {
                               return s.record.author;
                             })
      .def_property_readonly("forecast_type",
                             [](const FinalMockSelection& s) {
                               return to_string(s.record.forecast_type);
                             })
      .def_property_readonly("publish_date",
                             [](const FinalMockSelection& s) {
                               return format_date(s.record.publish_date);
                             })
      .def_property_readonly(
          "list", [](const FinalMockSelection& s) { return s.record.list; })
      .def_readonly("days_before_draft",
                    &FinalMockSelection::days_before_draft);

  m.def("select_final_mocks", &select_final_mocks, py::arg("dataset"),
        py::arg("season"), py::arg("horizon_days") = 30,
        "Each author track's last record within the pre-draft horizon.");

  py::class_<PercentileRow>(m, "PercentileRow")
      .def_readonly("label", &PercentileRow::label)
      .def_readonly("is_consensus", &PercentileRow::is_consensus)
      .def_readonly("per_season", &PercentileRow::per_season)
      .def_readonly("avg", &PercentileRow::avg);

  py::class_<PercentileTable>(m, "PercentileTable")
      .def_readonly("seasons", &PercentileTable::seasons)
      .def_readonly("rows", &PercentileTable::rows);

  m.def(
      "percentile_table",
      [](const DraftDataset& dataset, double q, int horizon_days,
         int min_seasons) {
        MetricParams params;
        params.q = q;
        return percentile_table(dataset, params, horizon_days, min_seasons);
      },
      py::arg("dataset"), py::arg("q") = 0.98, py::arg("horizon_days") = 30,
      py::arg("min_seasons") = 3,
      "Season-by-season accuracy percentiles with consensus rows.");

  py::class_<TimeseriesCell>(m, "TimeseriesCell")
      .def_property_readonly(
          "date", [](const TimeseriesCell& c) { return format_date(c.date); })
      .def_readonly("series_key", &TimeseriesCell::series_key)
      .def_readonly("rbd", &TimeseriesCell::rbd);

  m.def(
      "error_timeseries",
      [](const DraftDataset& dataset, int season, double q, int window_days) {
        MetricParams params;
        params.q = q;
        return error_timeseries(dataset, season, params, window_days);
      },
      py::arg("dataset"), py::arg("season"), py::arg("q") = 0.98,
      py::arg("window_days") = 10,
      "Daily error of every author and both consensus series.");

  py::class_<SlopeSegment>(m, "SlopeSegment")
      .def_readonly("item", &SlopeSegment::item)
      .def_readonly("mock_rank", &SlopeSegment::mock_rank)
      .def_readonly("actual_rank", &SlopeSegment::actual_rank);

  py::class_<SlopeGraph>(m, "SlopeGraph")
      .def_readonly("segments", &SlopeGraph::segments)
      .def_readonly("mock_terminal", &SlopeGraph::mock_terminal)
      .def_readonly("actual_terminal", &SlopeGraph::actual_terminal);

  m.def("slopegraph", &slopegraph, py::arg("mock"), py::arg("actual"),
        "Plot-ready mock-vs-actual rank movement geometry.");
}

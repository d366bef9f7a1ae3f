/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Season-level harness: final-mock selection, percentile tables, error
 * time series with consensus overlays, and slope-graph geometry.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "draftrank/aggregate.hpp"
#include "draftrank/core.hpp"
#include "draftrank/errors.hpp"
#include "draftrank/metrics.hpp"

namespace draftrank {

/// An author publishes mocks and rankings as separate tracks; each track
/// is evaluated on its own. Identity compares the normalized author name
/// plus the forecast type.
struct AuthorKey {
  std::string author;
  ForecastType forecast_type = ForecastType::Mock;

  /// Table label: the author name, with " (R)" appended for rankings.
  std::string display() const;

  friend bool operator==(const AuthorKey& a, const AuthorKey& b);
  friend bool operator<(const AuthorKey& a, const AuthorKey& b);
};

/// The record an author track is judged on for a season: the latest one
/// published within the horizon ending on draft day.
struct FinalMockSelection {
  int season = 0;
  AuthorKey author_key;
  MockDraftRecord record;
  int days_before_draft = 0;  // 0 = published on draft day
};

/**
 * One selection per author track with a record dated inside
 * [draft_date - horizon_days, draft_date]. Same-day duplicates resolve to
 * the longer list, then the lexicographically smaller entry sequence.
 * Sorted by author track. Throws UnknownSeasonError.
 */
std::vector<FinalMockSelection> select_final_mocks(const DraftDataset& dataset,
                                                   int season,
                                                   int horizon_days);

/// One table row: an author track or a consensus method, its per-season
/// percentiles, and their mean.
struct PercentileRow {
  std::string label;
  bool is_consensus = false;
  std::map<int, double> per_season;  // season -> percentile in [0,1]
  double avg = 0.0;
};

struct PercentileTable {
  std::vector<int> seasons;        // scored seasons, ascending
  std::vector<PercentileRow> rows;  // avg descending, then label
};

/**
 * Percentile of each entry by ascending error: rank 1 (lowest error) maps
 * to 1, the highest to 0, via (n - rank)/(n - 1). Equal errors share the
 * mean of their rank positions. Throws DegenerateSeasonError when fewer
 * than two entries are given.
 */
std::vector<double> percentiles_from_errors(const std::vector<double>& errors);

/**
 * Season-by-season accuracy standings. Every final mock plus the two
 * consensus orderings built from that same pool are scored against the
 * actual draft and converted to percentiles. Author rows with fewer than
 * min_seasons scored seasons are dropped; consensus rows always stay.
 *
 * Seasons lacking an actual draft or any mocks are skipped; a season with
 * mocks but fewer than two final selections throws DegenerateSeasonError.
 */
PercentileTable percentile_table(const DraftDataset& dataset,
                                 const MetricParams& params,
                                 int horizon_days = 30, int min_seasons = 3);

/// One point of an error time series.
struct TimeseriesCell {
  Date date{};
  std::string series_key;  // author name, or "BORDA" / "RCA"
  double rbd = 0.0;
};

/**
 * For every calendar day from the season's first mock to draft day: the
 * error of each author's freshest in-window record (window_days, author
 * tracks merged by recency as in select_window_mocks) and of both rolling
 * consensus orderings. Days with an empty window emit nothing. Rows are
 * sorted by date, then series key. Throws UnknownSeasonError.
 */
std::vector<TimeseriesCell> error_timeseries(const DraftDataset& dataset,
                                             int season,
                                             const MetricParams& params,
                                             int window_days = 10);

/// One line of a mock-vs-actual slope graph.
struct SlopeSegment {
  std::string item;
  int mock_rank = 0;
  int actual_rank = 0;

  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Plot-ready geometry: a segment per item on both lists, terminal nodes
/// for items on exactly one. |segments| + |mock_terminal| = |mock| and
/// |segments| + |actual_terminal| = |actual|.
struct SlopeGraph {
  std::vector<SlopeSegment> segments;        // mock rank ascending
  std::vector<std::string> mock_terminal;    // mocked, undrafted; mock order
  std::vector<std::string> actual_terminal;  // drafted, unmocked; draft order
};

SlopeGraph slopegraph(const RankedList& mock, const RankedList& actual);

/// Label column, one column per scored season, trailing mean column.
/// Absent cells are left empty.
void write_percentile_csv(std::ostream& out, const PercentileTable& table);

/// Long format: date,series_key,rbd.
void write_timeseries_csv(std::ostream& out,
                          const std::vector<TimeseriesCell>& cells);

/// One record per line: type,player,mock_rank,actual_rank.
void write_slopegraph(std::ostream& out, const SlopeGraph& graph);

}  // namespace draftrank

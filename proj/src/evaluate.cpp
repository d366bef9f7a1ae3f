/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "draftrank/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

#include "draftrank/io.hpp"

namespace draftrank {

namespace {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

/// Sortable identity of an author track: normalized name, mocks before
/// rankings.
std::pair<std::string, int> track_id(const AuthorKey& k) {
  return {normalize_key(k.author),
          k.forecast_type == ForecastType::Mock ? 0 : 1};
}

/// Both consensus orderings of one pool of records, against a known
/// target length. Ranked-choice picks are capped by the union of items.
std::pair<RankedList, RankedList> consensus_pair(
    const std::vector<MockDraftRecord>& records, int target_length) {
  std::set<std::string> item_union;
  for (const auto& r : records) {
    item_union.insert(r.list.keys().begin(), r.list.keys().end());
  }
  const int picks =
      std::min(target_length, static_cast<int>(item_union.size()));
  return {borda(records, target_length).ordering,
          rca(records, picks).ordering};
}

}  // namespace

std::string AuthorKey::display() const {
  return forecast_type == ForecastType::Ranking ? author + " (R)" : author;
}

bool operator==(const AuthorKey& a, const AuthorKey& b) {
  return track_id(a) == track_id(b);
}

bool operator<(const AuthorKey& a, const AuthorKey& b) {
  return track_id(a) < track_id(b);
}

std::vector<FinalMockSelection> select_final_mocks(const DraftDataset& dataset,
                                                   int season,
                                                   int horizon_days) {
  if (horizon_days < 1) {
    throw DomainError("horizon_days must be >= 1, got " +
                      std::to_string(horizon_days));
  }
  const Date draft_date = dataset.actual(season).draft_date;

  std::map<std::pair<std::string, int>, FinalMockSelection> best;
  for (const auto* mock : dataset.mocks_for_season(season)) {
    const int age = days_between(mock->publish_date, draft_date);
    if (age < 0 || age > horizon_days) continue;
    FinalMockSelection candidate{season,
                                 {mock->author, mock->forecast_type},
                                 *mock,
                                 age};
    auto [it, inserted] =
        best.emplace(track_id(candidate.author_key), std::move(candidate));
    if (inserted) continue;
    FinalMockSelection& held = it->second;
    bool replace = false;
    if (age != held.days_before_draft) {
      replace = age < held.days_before_draft;
    } else if (mock->list.size() != held.record.list.size()) {
      replace = mock->list.size() > held.record.list.size();
    } else if (mock->list.entries() != held.record.list.entries()) {
      replace = mock->list.entries() < held.record.list.entries();
    }
    if (replace) {
      it->second = FinalMockSelection{
          season, {mock->author, mock->forecast_type}, *mock, age};
    }
  }

  std::vector<FinalMockSelection> selected;
  selected.reserve(best.size());
  for (auto& [id, sel] : best) selected.push_back(std::move(sel));
  return selected;
}

std::vector<double> percentiles_from_errors(
    const std::vector<double>& errors) {
  const std::size_t n = errors.size();
  if (n < 2) {
    throw DegenerateSeasonError(
        "percentiles need at least two scored entries, got " +
        std::to_string(n));
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&errors](std::size_t a,
                                                     std::size_t b) {
    return errors[a] < errors[b];
  });

  // Runs of equal error share the mean of their 1-based rank positions.
  std::vector<double> out(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && errors[idx[j]] == errors[idx[i]]) ++j;
    const double mean_rank = static_cast<double>(i + 1 + j) / 2.0;
    const double pct =
        (static_cast<double>(n) - mean_rank) / static_cast<double>(n - 1);
    for (std::size_t k = i; k < j; ++k) out[idx[k]] = pct;
    i = j;
  }
  return out;
}

PercentileTable percentile_table(const DraftDataset& dataset,
                                 const MetricParams& params, int horizon_days,
                                 int min_seasons) {
  if (min_seasons < 1) {
    throw DomainError("min_seasons must be >= 1, got " +
                      std::to_string(min_seasons));
  }

  struct RowAcc {
    std::string label;
    bool is_consensus = false;
    std::map<int, double> per_season;
  };
  // Author tracks sort before the consensus pseudo-rows; final order is
  // rebuilt below, this map only needs determinism.
  std::map<std::pair<std::string, int>, RowAcc> acc;

  PercentileTable table;
  for (const auto& [season, actual] : dataset.actuals()) {
    if (dataset.mocks_for_season(season).empty()) continue;

    const auto finals = select_final_mocks(dataset, season, horizon_days);
    if (finals.size() < 2) {
      throw DegenerateSeasonError(
          "season " + std::to_string(season) + " has " +
          std::to_string(finals.size()) +
          " final mocks; percentiles need at least 2");
    }
    table.seasons.push_back(season);

    std::vector<MockDraftRecord> pool_records;
    pool_records.reserve(finals.size());
    for (const auto& sel : finals) pool_records.push_back(sel.record);
    const auto [borda_ordering, rca_ordering] = consensus_pair(
        pool_records, static_cast<int>(actual.list.size()));

    std::vector<std::pair<std::string, int>> ids;
    std::vector<double> errors;
    for (const auto& sel : finals) {
      auto& row = acc[track_id(sel.author_key)];
      if (row.label.empty()) row.label = sel.author_key.display();
      ids.push_back(track_id(sel.author_key));
      errors.push_back(rbd(sel.record.list, actual.list, params));
    }
    for (const auto& [label, ordering] :
         {std::pair<std::string, const RankedList&>{"BORDA", borda_ordering},
          std::pair<std::string, const RankedList&>{"RCA", rca_ordering}}) {
      auto& row = acc[{"\x7f" + label, 2}];
      row.label = label;
      row.is_consensus = true;
      ids.push_back({"\x7f" + label, 2});
      errors.push_back(rbd(ordering, actual.list, params));
    }

    const std::vector<double> pcts = percentiles_from_errors(errors);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      acc[ids[i]].per_season[season] = pcts[i];
    }
  }

  for (const auto& [id, row] : acc) {
    if (!row.is_consensus &&
        static_cast<int>(row.per_season.size()) < min_seasons) {
      continue;
    }
    double sum = 0.0;
    for (const auto& [season, pct] : row.per_season) sum += pct;
    table.rows.push_back(PercentileRow{
        row.label, row.is_consensus, row.per_season,
        sum / static_cast<double>(row.per_season.size())});
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const PercentileRow& a, const PercentileRow& b) {
                     if (a.avg != b.avg) return a.avg > b.avg;
                     return a.label < b.label;
                   });
  return table;
}

std::vector<TimeseriesCell> error_timeseries(const DraftDataset& dataset,
                                             int season,
                                             const MetricParams& params,
                                             int window_days) {
  const ActualDraft& actual = dataset.actual(season);
  const auto mocks = dataset.mocks_for_season(season);

  std::vector<TimeseriesCell> cells;
  if (mocks.empty()) return cells;

  Date first = mocks.front()->publish_date;
  for (const auto* mock : mocks) {
    if (days_between(mock->publish_date, first) > 0) {
      first = mock->publish_date;
    }
  }
  const int span = days_between(first, actual.draft_date);

  for (int offset = 0; offset <= span; ++offset) {
    const Date day = add_days(first, offset);
    std::vector<MockDraftRecord> selected;
    try {
      selected = select_window_mocks(dataset, season, day, window_days);
    } catch (const NoMocksInWindowError&) {
      continue;
    }
    for (const auto& record : selected) {
      cells.push_back(TimeseriesCell{
          day, record.author, rbd(record.list, actual.list, params)});
    }
    const auto [borda_ordering, rca_ordering] =
        consensus_pair(selected, static_cast<int>(actual.list.size()));
    cells.push_back(
        TimeseriesCell{day, "BORDA", rbd(borda_ordering, actual.list, params)});
    cells.push_back(
        TimeseriesCell{day, "RCA", rbd(rca_ordering, actual.list, params)});
  }

  std::stable_sort(cells.begin(), cells.end(),
                   [](const TimeseriesCell& a, const TimeseriesCell& b) {
                     const int d = days_between(b.date, a.date);
                     if (d != 0) return d < 0;
                     return a.series_key < b.series_key;
                   });
  return cells;
}

SlopeGraph slopegraph(const RankedList& mock, const RankedList& actual) {
  SlopeGraph graph;
  for (std::size_t i = 0; i < mock.size(); ++i) {
    const auto actual_rank = actual.position_of(mock.keys()[i]);
    if (actual_rank.has_value()) {
      // The realized spelling names the segment.
      graph.segments.push_back(SlopeSegment{actual.entry(*actual_rank),
                                            static_cast<int>(i) + 1,
                                            *actual_rank});
    } else {
      graph.mock_terminal.push_back(mock.entries()[i]);
    }
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!mock.contains(actual.keys()[i])) {
      graph.actual_terminal.push_back(actual.entries()[i]);
    }
  }
  return graph;
}

void write_percentile_csv(std::ostream& out, const PercentileTable& table) {
  out << "author";
  for (const int season : table.seasons) out << ',' << season;
  out << ",avg\n";
  for (const PercentileRow& row : table.rows) {
    out << csv_escape(row.label);
    for (const int season : table.seasons) {
      out << ',';
      const auto it = row.per_season.find(season);
      if (it != row.per_season.end()) out << format_real(it->second);
    }
    out << ',' << format_real(row.avg) << "\n";
  }
}

void write_timeseries_csv(std::ostream& out,
                          const std::vector<TimeseriesCell>& cells) {
  out << "date,series_key,rbd\n";
  for (const TimeseriesCell& cell : cells) {
    out << format_date(cell.date) << ',' << csv_escape(cell.series_key) << ','
        << format_real(cell.rbd) << "\n";
  }
}

void write_slopegraph(std::ostream& out, const SlopeGraph& graph) {
  out << "type,player,mock_rank,actual_rank\n";
  for (const SlopeSegment& seg : graph.segments) {
    out << "segment," << csv_escape(seg.item) << ',' << seg.mock_rank << ','
        << seg.actual_rank << "\n";
  }
  for (const std::string& item : graph.mock_terminal) {
    out << "mock_only," << csv_escape(item) << ",,\n";
  }
  for (const std::string& item : graph.actual_terminal) {
    out << "actual_only," << csv_escape(item) << ",,\n";
  }
}

}  // namespace draftrank

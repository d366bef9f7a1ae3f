/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Shared test fixtures: the five GOAT rankings, synthetic multi-season
 * datasets, and scratch-directory helpers.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "draftrank/core.hpp"
#include "draftrank/io.hpp"

namespace fixtures {

// --- GOAT rankings ------------------------------------------------------
// Five top-5 "greatest of all time" lists. A through D echo mainstream
// orderings; E ranks by championships won and lands an outlier pick first.

inline draftrank::RankedList goat_mock_a() {
  return draftrank::RankedList::from_entries(
      {"M. Jordan", "L. James", "K. Abdul-Jabbar", "B. Russell", "K. Bryant"});
}

inline draftrank::RankedList goat_mock_b() {
  return draftrank::RankedList::from_entries(
      {"M. Jordan", "L. James", "K. Abdul-Jabbar", "B. Russell", "E. Johnson"});
}

inline draftrank::RankedList goat_mock_c() {
  return draftrank::RankedList::from_entries(
      {"M. Jordan", "L. James", "B. Russell", "K. Abdul-Jabbar", "E. Johnson"});
}

inline draftrank::RankedList goat_mock_d() {
  return draftrank::RankedList::from_entries(
      {"M. Jordan", "L. James", "B. Russell", "K. Bryant", "K. Abdul-Jabbar"});
}

inline draftrank::RankedList goat_mock_e() {
  return draftrank::RankedList::from_entries(
      {"R. Horry", "K. Abdul-Jabbar", "M. Jordan", "S. Pippen", "K. Bryant"});
}

inline std::vector<draftrank::RankedList> goat_mocks() {
  return {goat_mock_a(), goat_mock_b(), goat_mock_c(), goat_mock_d(),
          goat_mock_e()};
}

/// The GOAT lists as one dated season: five authors, one mock each, all
/// published the same day, with `actual` as the realized draft.
inline draftrank::DraftDataset goat_dataset(
    const draftrank::RankedList& actual, int season = 1996,
    const std::string& publish_date = "1996-06-20",
    const std::string& draft_date = "1996-06-26") {
  const auto date = draftrank::parse_date(publish_date);
  std::vector<draftrank::MockDraftRecord> mocks;
  const char* names[] = {"Mock A", "Mock B", "Mock C", "Mock D", "Mock E"};
  const auto lists = goat_mocks();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    mocks.push_back(draftrank::MockDraftRecord{
        lists[i], names[i], draftrank::ForecastType::Mock, date, season});
  }
  std::map<int, draftrank::ActualDraft> actuals;
  actuals[season] =
      draftrank::ActualDraft{actual, draftrank::parse_date(draft_date)};
  return draftrank::DraftDataset::assemble(std::move(mocks),
                                           std::move(actuals));
}

// --- Synthetic percentile seasons ---------------------------------------
// Universe p01..p10, actual = identity order. One flawless author
// ("Oracle") spans all seasons; the rest lead with p02 so neither
// consensus can reproduce the actual. Tail scrambles keep every error in
// a season's pool distinct.

inline std::vector<std::string> identity_items(int n) {
  std::vector<std::string> items;
  for (int i = 1; i <= n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "p%02d", i);
    items.emplace_back(buf);
  }
  return items;
}

inline draftrank::RankedList identity_list(int n) {
  return draftrank::RankedList::from_entries(identity_items(n));
}

/// Identity over n items with the entries at `ranks` (1-based, each rank r
/// swapped with r+1) transposed.
inline draftrank::RankedList transposed_list(int n,
                                             const std::vector<int>& ranks) {
  auto items = identity_items(n);
  for (const int r : ranks) {
    std::swap(items[static_cast<std::size_t>(r - 1)],
              items[static_cast<std::size_t>(r)]);
  }
  return draftrank::RankedList::from_entries(std::move(items));
}

/// p02 first, then the identity tail with the given transpositions applied
/// among tail positions (2..n).
inline draftrank::RankedList wrong_list(int n, const std::vector<int>& ranks) {
  auto items = identity_items(n);
  std::swap(items[0], items[1]);  // p02 leads, p01 second
  for (const int r : ranks) {
    std::swap(items[static_cast<std::size_t>(r - 1)],
              items[static_cast<std::size_t>(r)]);
  }
  return draftrank::RankedList::from_entries(std::move(items));
}

/// Three seasons holding 2, 5, and 26 final mocks. Oracle's list equals
/// the actual draft in every season, so it is the unique error minimum.
inline draftrank::DraftDataset percentile_dataset() {
  using draftrank::ActualDraft;
  using draftrank::ForecastType;
  using draftrank::MockDraftRecord;
  using draftrank::RankedList;

  std::vector<MockDraftRecord> mocks;
  std::map<int, ActualDraft> actuals;

  const auto add = [&mocks](int season, const std::string& author,
                            const RankedList& list, const std::string& date) {
    mocks.push_back(MockDraftRecord{list, author, ForecastType::Mock,
                                    draftrank::parse_date(date), season});
  };

  // Season 2002: two finals. The rival's short list makes the two
  // consensus orderings diverge (ranked choice exhausts it, point
  // counting never sees its tail).
  actuals[2002] = ActualDraft{identity_list(5),
                              draftrank::parse_date("2002-06-26")};
  add(2002, "Oracle", identity_list(5), "2002-06-20");
  add(2002, "Rival",
      RankedList::from_entries({"p02", "p03", "p01", "p06", "p07", "p08",
                                "p09", "p10", "p04", "p05"}),
      "2002-06-20");

  // Season 2005: five finals over ten items. The p09-first outlier drags
  // p09 up the point count but never wins a round, so the two consensus
  // orderings (and their errors) split.
  actuals[2005] = ActualDraft{identity_list(10),
                              draftrank::parse_date("2005-06-28")};
  add(2005, "Oracle", identity_list(10), "2005-06-22");
  add(2005, "W1", wrong_list(10, {3}), "2005-06-22");
  add(2005, "W2", wrong_list(10, {4, 6}), "2005-06-22");
  add(2005, "W3", wrong_list(10, {5, 8}), "2005-06-22");
  add(2005, "X1",
      RankedList::from_entries({"p09", "p02", "p01", "p03", "p04"}),
      "2005-06-22");

  // Season 2026: twenty-six finals. Twenty scrambles with distinct
  // transposition depth sets, plus five p09-first outliers whose trailing
  // items enter the actual order at distinct depths; every pool error is
  // distinct.
  actuals[2026] = ActualDraft{identity_list(10),
                              draftrank::parse_date("2026-06-25")};
  add(2026, "Oracle", identity_list(10), "2026-06-19");
  const std::vector<std::vector<int>> patterns = {
      {3},    {4},    {5},    {6},    {7},    {8},    {9},
      {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 6}, {4, 7},
      {4, 8}, {4, 9}, {5, 7}, {5, 8}, {5, 9}, {6, 8}};
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    char name[24];
    std::snprintf(name, sizeof(name), "S%02d", static_cast<int>(i) + 1);
    add(2026, name, wrong_list(10, patterns[i]), "2026-06-19");
  }
  const std::vector<std::vector<std::string>> outliers = {
      {"p09", "p02", "p01", "p03", "p04"},
      {"p09", "p02", "p01", "p06", "p04"},
      {"p09", "p02", "p01", "p07", "p04"},
      {"p09", "p02", "p01", "p03", "p08"},
      {"p09", "p02", "p01", "p06", "p08"}};
  for (std::size_t i = 0; i < outliers.size(); ++i) {
    char name[24];
    std::snprintf(name, sizeof(name), "X%02d", static_cast<int>(i) + 1);
    add(2026, name, RankedList::from_entries(outliers[i]), "2026-06-19");
  }

  return draftrank::DraftDataset::assemble(std::move(mocks),
                                           std::move(actuals));
}

// --- Scratch directories -------------------------------------------------

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<int> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    for (;;) {
      auto candidate =
          base / ("draftrank_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter.fetch_add(1)));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path = std::move(candidate);
        return;
      }
    }
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Serialize a dataset into mock/actual CSV files inside `dir`; returns
/// {mocks_path, actuals_path}.
inline std::pair<std::string, std::string> dataset_to_csv(
    const draftrank::DraftDataset& dataset, const TempDir& dir) {
  const std::string mocks_path = dir.file("mocks.csv");
  const std::string actuals_path = dir.file("actuals.csv");
  draftrank::write_dataset(dataset, mocks_path, actuals_path);
  return {mocks_path, actuals_path};
}

}  // namespace fixtures

/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Core model: ranked lists, mock draft records, and the season dataset
 * every other module consumes.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "draftrank/errors.hpp"

namespace draftrank {

/// Opaque item identifier (player name or stable key). Identity is the
/// normalized form; the original spelling is kept for display.
using ItemId = std::string;

/// Normalized identity key: trimmed and ASCII case-folded.
std::string normalize_key(std::string_view id);

/// Trim ASCII whitespace from both ends.
std::string trim(std::string_view s);

using Date = std::chrono::year_month_day;

/// Parse an ISO-8601 calendar date (YYYY-MM-DD). Throws DomainError.
Date parse_date(std::string_view iso);

/// Format as ISO-8601 (YYYY-MM-DD).
std::string format_date(const Date& d);

/// Calendar days from `from` to `to` (positive when `to` is later).
int days_between(const Date& from, const Date& to);

Date add_days(const Date& d, int days);

/**
 * An injective assignment of items to dense ranks 1..n. Items not listed
 * are unranked; position lookups for them return std::nullopt.
 *
 * Entries may carry tier tags (positive integers). Two entries sharing a
 * tag are tied: their rank values are distinct but carry no order
 * information between them. Metric code rejects lists with tied entries;
 * ranked-choice aggregation consumes them.
 */
class RankedList {
 public:
  RankedList() = default;

  /// Build from rank-ordered entries; rank of entries[k] is k+1.
  /// Throws EmptyIdError or DuplicateItemError.
  static RankedList from_entries(std::vector<std::string> entries);

  /// As above with per-entry tier tags (0 = untied). `tiers` must match
  /// `entries` in length.
  static RankedList from_entries(std::vector<std::string> entries,
                                 std::vector<int> tiers);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entries in rank order, original spelling.
  const std::vector<std::string>& entries() const noexcept { return entries_; }

  /// Normalized identity keys in rank order.
  const std::vector<std::string>& keys() const noexcept { return keys_; }

  /// 1-based access. Throws std::out_of_range.
  const std::string& entry(int rank) const;

  /// Rank of `item` (normalized match), or std::nullopt when unranked.
  std::optional<int> position_of(std::string_view item) const;

  bool contains(std::string_view item) const;

  /// Tier tag of the entry at `rank` (1-based); 0 = untied.
  int tier_of(int rank) const;

  /// True when any tier tag is shared by two or more entries.
  bool has_tied_entries() const noexcept { return has_ties_; }

  friend bool operator==(const RankedList& a, const RankedList& b) {
    return a.entries_ == b.entries_ && a.tiers_ == b.tiers_;
  }

 private:
  std::vector<std::string> entries_;
  std::vector<std::string> keys_;
  std::vector<int> tiers_;  // empty when no entry is tagged
  std::unordered_map<std::string, int> rank_by_key_;
  bool has_ties_ = false;
};

/// Size of the intersection of the two depth-d prefixes. A list shorter
/// than d contributes its full entry set (its prefix saturates).
int overlap_at_depth(const RankedList& a, const RankedList& b, int depth);

enum class ForecastType { Mock, Ranking };

std::string to_string(ForecastType t);
ForecastType forecast_type_from_string(std::string_view s);  // throws DomainError

/// One forecast: a ranked list plus provenance.
struct MockDraftRecord {
  RankedList list;
  std::string author;
  ForecastType forecast_type = ForecastType::Mock;
  Date publish_date{};
  int season = 0;

  friend bool operator==(const MockDraftRecord&, const MockDraftRecord&) = default;
};

/// The realized draft for one season.
struct ActualDraft {
  RankedList list;
  Date draft_date{};

  friend bool operator==(const ActualDraft&, const ActualDraft&) = default;
};

/**
 * All mock draft records plus one actual draft per season. Immutable after
 * assembly; reads are safe from any number of concurrent workers.
 */
class DraftDataset {
 public:
  DraftDataset() = default;

  /// Sorts mocks by (season, author, type, publish date) and flags records
  /// outside the season's collection window (the `collection_window_days`
  /// days ending on the actual draft date). Flagged records are kept.
  static DraftDataset assemble(std::vector<MockDraftRecord> mocks,
                               std::map<int, ActualDraft> actuals,
                               int collection_window_days = 365);

  const std::vector<MockDraftRecord>& mocks() const noexcept { return mocks_; }
  const std::map<int, ActualDraft>& actuals() const noexcept { return actuals_; }

  bool has_actual(int season) const { return actuals_.count(season) > 0; }

  /// Throws UnknownSeasonError.
  const ActualDraft& actual(int season) const;

  std::vector<const MockDraftRecord*> mocks_for_season(int season) const;

  /// Collection-window flags gathered at assembly.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Throws MissingActualError if any mock's season lacks an actual draft.
  void require_actuals_for_all_mocks() const;

  friend bool operator==(const DraftDataset& a, const DraftDataset& b) {
    return a.mocks_ == b.mocks_ && a.actuals_ == b.actuals_;
  }

 private:
  std::vector<MockDraftRecord> mocks_;
  std::map<int, ActualDraft> actuals_;
  std::vector<std::string> warnings_;
};

}  // namespace draftrank

/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "draftrank/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <unordered_set>

namespace draftrank {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string normalize_key(std::string_view id) {
  std::string key = trim(id);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return key;
}

Date parse_date(std::string_view iso) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  const std::string s = trim(iso);
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      std::sscanf(s.c_str(), "%4d-%2u-%2u", &y, &m, &d) != 3) {
    throw DomainError("not an ISO-8601 date (YYYY-MM-DD): '" + s + "'");
  }
  const Date ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) {
    throw DomainError("invalid calendar date: '" + s + "'");
  }
  return ymd;
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

int days_between(const Date& from, const Date& to) {
  const auto a = std::chrono::sys_days(from);
  const auto b = std::chrono::sys_days(to);
  return static_cast<int>((b - a).count());
}

Date add_days(const Date& d, int days) {
  return Date{std::chrono::sys_days(d) + std::chrono::days(days)};
}

RankedList RankedList::from_entries(std::vector<std::string> entries) {
  return from_entries(std::move(entries), {});
}

RankedList RankedList::from_entries(std::vector<std::string> entries,
                                    std::vector<int> tiers) {
  if (!tiers.empty() && tiers.size() != entries.size()) {
    throw DomainError("tier tags must match entries in length");
  }
  RankedList list;
  list.entries_.reserve(entries.size());
  list.keys_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string display = trim(entries[i]);
    if (display.empty()) {
      throw EmptyIdError("empty item id at rank " + std::to_string(i + 1));
    }
    std::string key = normalize_key(display);
    auto [it, inserted] =
        list.rank_by_key_.emplace(key, static_cast<int>(i + 1));
    if (!inserted) {
      throw DuplicateItemError("item '" + display + "' appears twice (ranks " +
                               std::to_string(it->second) + " and " +
                               std::to_string(i + 1) + ")");
    }
    list.entries_.push_back(std::move(display));
    list.keys_.push_back(std::move(key));
  }
  if (!tiers.empty()) {
    bool any_tag = false;
    std::unordered_map<int, int> tag_count;
    for (int t : tiers) {
      if (t < 0) throw DomainError("tier tags must be non-negative");
      if (t > 0) {
        any_tag = true;
        if (++tag_count[t] > 1) list.has_ties_ = true;
      }
    }
    if (any_tag) list.tiers_ = std::move(tiers);
  }
  return list;
}

const std::string& RankedList::entry(int rank) const {
  if (rank < 1 || static_cast<std::size_t>(rank) > entries_.size()) {
    throw std::out_of_range("rank " + std::to_string(rank) + " out of range");
  }
  return entries_[static_cast<std::size_t>(rank - 1)];
}

std::optional<int> RankedList::position_of(std::string_view item) const {
  const auto it = rank_by_key_.find(normalize_key(item));
  if (it == rank_by_key_.end()) return std::nullopt;
  return it->second;
}

bool RankedList::contains(std::string_view item) const {
  return rank_by_key_.count(normalize_key(item)) > 0;
}

int RankedList::tier_of(int rank) const {
  if (rank < 1 || static_cast<std::size_t>(rank) > entries_.size()) {
    throw std::out_of_range("rank " + std::to_string(rank) + " out of range");
  }
  if (tiers_.empty()) return 0;
  return tiers_[static_cast<std::size_t>(rank - 1)];
}

int overlap_at_depth(const RankedList& a, const RankedList& b, int depth) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  const auto da = std::min<std::size_t>(depth, a.size());
  const auto db = std::min<std::size_t>(depth, b.size());
  // Scan the smaller prefix and probe the other side's rank map.
  const RankedList& probe = (da <= db) ? a : b;
  const RankedList& other = (da <= db) ? b : a;
  const auto np = std::min(da, db);
  const auto no = std::max(da, db);
  int count = 0;
  for (std::size_t i = 0; i < np; ++i) {
    const auto pos = other.position_of(probe.keys()[i]);
    if (pos && static_cast<std::size_t>(*pos) <= no) ++count;
  }
  return count;
}

std::string to_string(ForecastType t) {
  return t == ForecastType::Mock ? "mock" : "ranking";
}

ForecastType forecast_type_from_string(std::string_view s) {
  const std::string v = normalize_key(s);
  if (v == "mock") return ForecastType::Mock;
  if (v == "ranking") return ForecastType::Ranking;
  throw DomainError("forecast_type must be 'mock' or 'ranking', got '" +
                    std::string(s) + "'");
}

DraftDataset DraftDataset::assemble(std::vector<MockDraftRecord> mocks,
                                    std::map<int, ActualDraft> actuals,
                                    int collection_window_days) {
  if (collection_window_days < 1) {
    throw DomainError("collection window must be >= 1 day");
  }
  DraftDataset ds;
  ds.actuals_ = std::move(actuals);
  std::stable_sort(mocks.begin(), mocks.end(),
                   [](const MockDraftRecord& x, const MockDraftRecord& y) {
                     if (x.season != y.season) return x.season < y.season;
                     if (x.author != y.author) return x.author < y.author;
                     if (x.forecast_type != y.forecast_type) {
                       return x.forecast_type < y.forecast_type;
                     }
                     return std::chrono::sys_days(x.publish_date) <
                            std::chrono::sys_days(y.publish_date);
                   });
  ds.mocks_ = std::move(mocks);
  for (const auto& rec : ds.mocks_) {
    const auto it = ds.actuals_.find(rec.season);
    if (it == ds.actuals_.end()) continue;
    const int days_before = days_between(rec.publish_date, it->second.draft_date);
    if (days_before < 0 || days_before >= collection_window_days) {
      ds.warnings_.push_back(
          "mock by '" + rec.author + "' (" + to_string(rec.forecast_type) +
          ") dated " + format_date(rec.publish_date) +
          " is outside the season " + std::to_string(rec.season) +
          " collection window ending " + format_date(it->second.draft_date));
    }
  }
  return ds;
}

const ActualDraft& DraftDataset::actual(int season) const {
  const auto it = actuals_.find(season);
  if (it == actuals_.end()) {
    throw UnknownSeasonError("no actual draft for season " +
                             std::to_string(season));
  }
  return it->second;
}

std::vector<const MockDraftRecord*> DraftDataset::mocks_for_season(
    int season) const {
  std::vector<const MockDraftRecord*> out;
  for (const auto& rec : mocks_) {
    if (rec.season == season) out.push_back(&rec);
  }
  return out;
}

void DraftDataset::require_actuals_for_all_mocks() const {
  for (const auto& rec : mocks_) {
    if (!actuals_.count(rec.season)) {
      throw MissingActualError("mock by '" + rec.author + "' dated " +
                               format_date(rec.publish_date) +
                               " has no actual draft for season " +
                               std::to_string(rec.season));
    }
  }
}

}  // namespace draftrank

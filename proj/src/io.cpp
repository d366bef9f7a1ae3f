/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "draftrank/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

namespace draftrank {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Minimal RFC-4180 field splitter: supports quoted fields with "" escapes.
std::vector<std::string> split_csv(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError(lineno, "unterminated quoted field");
  fields.push_back(cur);
  return fields;
}

// Header lookup enforcing the exact expected column set.
std::unordered_map<std::string, std::size_t> parse_header(
    const std::string& line, const std::vector<std::string>& expected,
    const std::string& path) {
  const auto cells = split_csv(line, 1);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string name = normalize_key(cells[i]);
    if (!index.emplace(name, i).second) {
      throw ParseError(1, "duplicate column '" + name + "' in " + path);
    }
  }
  for (const auto& name : expected) {
    if (!index.count(name)) {
      throw ParseError(1, "missing column '" + name + "' in " + path);
    }
  }
  if (index.size() != expected.size()) {
    throw ParseError(1, "unexpected extra column in " + path);
  }
  return index;
}

int parse_int(const std::string& s, std::size_t lineno, const char* what) {
  const std::string v = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ParseError(lineno, std::string("unparseable ") + what + ": '" + s + "'");
  }
  return value;
}

int parse_rank(const std::string& s, std::size_t lineno) {
  const int rank = parse_int(s, lineno, "rank");
  if (rank < 1) {
    throw ParseError(lineno, "rank must be a positive integer, got " +
                                 std::to_string(rank));
  }
  return rank;
}

Date parse_date_field(const std::string& s, std::size_t lineno) {
  try {
    return parse_date(s);
  } catch (const DomainError& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string apply_alias(const AliasMap& aliases, const std::string& name) {
  const auto it = aliases.find(normalize_key(name));
  return it == aliases.end() ? trim(name) : it->second;
}

struct MockRow {
  std::size_t lineno;
  int rank;
  std::string player;
  int tier;
};

}  // namespace

AliasMap load_aliases(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw ParseError("alias file is empty: " + path);
  const auto index = parse_header(lines[0], {"variant", "canonical"}, path);
  AliasMap aliases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto cells = split_csv(lines[i], i + 1);
    if (cells.size() != 2) {
      throw ParseError(i + 1, "expected 2 fields, got " +
                                  std::to_string(cells.size()));
    }
    const std::string variant = normalize_key(cells[index.at("variant")]);
    const std::string canonical = trim(cells[index.at("canonical")]);
    if (variant.empty() || canonical.empty()) {
      throw ParseError(i + 1, "alias fields must be non-empty");
    }
    aliases[variant] = canonical;
  }
  return aliases;
}

DraftDataset load_dataset(const std::string& mocks_path,
                          const std::string& actuals_path,
                          const LoadOptions& options) {
  AliasMap aliases;
  if (!options.alias_path.empty()) aliases = load_aliases(options.alias_path);

  // Mock rows, grouped by (season, author, type, date).
  using GroupKey = std::tuple<int, std::string, int, std::string>;
  std::map<GroupKey, std::vector<MockRow>> groups;
  {
    const auto lines = read_lines(mocks_path);
    if (lines.empty()) throw ParseError("mock file is empty: " + mocks_path);
    const auto index = parse_header(
        lines[0],
        {"season", "author", "forecast_type", "publish_date", "rank", "player",
         "tier"},
        mocks_path);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (trim(lines[i]).empty()) continue;
      const std::size_t lineno = i + 1;
      const auto cells = split_csv(lines[i], lineno);
      if (cells.size() != 7) {
        throw ParseError(lineno, "expected 7 fields, got " +
                                     std::to_string(cells.size()));
      }
      const int season = parse_int(cells[index.at("season")], lineno, "season");
      const std::string author = trim(cells[index.at("author")]);
      if (author.empty()) throw ParseError(lineno, "author must be non-empty");
      ForecastType type{};
      try {
        type = forecast_type_from_string(cells[index.at("forecast_type")]);
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
      const Date date = parse_date_field(cells[index.at("publish_date")], lineno);
      const int rank = parse_rank(cells[index.at("rank")], lineno);
      const std::string player =
          apply_alias(aliases, cells[index.at("player")]);
      if (player.empty()) throw ParseError(lineno, "player must be non-empty");
      const std::string tier_raw = trim(cells[index.at("tier")]);
      int tier = 0;
      if (!tier_raw.empty()) {
        tier = parse_int(tier_raw, lineno, "tier");
        if (tier < 1) {
          throw ParseError(lineno, "tier must be a positive integer or empty");
        }
      }
      groups[{season, author, static_cast<int>(type), format_date(date)}]
          .push_back(MockRow{lineno, rank, player, tier});
    }
  }

  std::vector<MockDraftRecord> mocks;
  mocks.reserve(groups.size());
  for (auto& [key, rows] : groups) {
    const auto& [season, author, type_int, date_str] = key;
    std::map<int, const MockRow*> by_rank;
    for (const auto& row : rows) {
      const auto [it, inserted] = by_rank.emplace(row.rank, &row);
      if (!inserted) {
        throw DuplicateRankError(
            row.lineno, "duplicate rank " + std::to_string(row.rank) +
                            " for author '" + author + "' (" +
                            to_string(static_cast<ForecastType>(type_int)) +
                            ", " + date_str + ", season " +
                            std::to_string(season) + "), first seen on line " +
                            std::to_string(it->second->lineno));
      }
    }
    std::vector<std::string> entries;
    std::vector<int> tiers;
    int expected = 1;
    for (const auto& [rank, row] : by_rank) {
      if (rank != expected) {
        throw ParseError(row->lineno,
                         "ranks for author '" + author + "' (" + date_str +
                             ", season " + std::to_string(season) +
                             ") are not dense: expected rank " +
                             std::to_string(expected) + ", found " +
                             std::to_string(rank));
      }
      entries.push_back(row->player);
      tiers.push_back(row->tier);
      ++expected;
    }
    MockDraftRecord rec;
    try {
      rec.list = RankedList::from_entries(std::move(entries), std::move(tiers));
    } catch (const Error& e) {
      throw ParseError(rows.front().lineno,
                       "invalid mock for author '" + author + "' (" + date_str +
                           ", season " + std::to_string(season) +
                           "): " + e.what());
    }
    rec.author = author;
    rec.forecast_type = static_cast<ForecastType>(type_int);
    rec.publish_date = parse_date(date_str);
    rec.season = season;
    mocks.push_back(std::move(rec));
  }

  // Actual drafts, one per season.
  std::map<int, ActualDraft> actuals;
  {
    const auto lines = read_lines(actuals_path);
    if (lines.empty()) throw ParseError("actuals file is empty: " + actuals_path);
    const auto index = parse_header(
        lines[0], {"season", "draft_date", "rank", "player"}, actuals_path);
    struct ActualRow {
      std::size_t lineno;
      Date date;
      int rank;
      std::string player;
    };
    std::map<int, std::vector<ActualRow>> by_season;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (trim(lines[i]).empty()) continue;
      const std::size_t lineno = i + 1;
      const auto cells = split_csv(lines[i], lineno);
      if (cells.size() != 4) {
        throw ParseError(lineno, "expected 4 fields, got " +
                                     std::to_string(cells.size()));
      }
      const int season = parse_int(cells[index.at("season")], lineno, "season");
      const Date date = parse_date_field(cells[index.at("draft_date")], lineno);
      const int rank = parse_rank(cells[index.at("rank")], lineno);
      const std::string player = apply_alias(aliases, cells[index.at("player")]);
      if (player.empty()) throw ParseError(lineno, "player must be non-empty");
      by_season[season].push_back(ActualRow{lineno, date, rank, player});
    }
    for (auto& [season, rows] : by_season) {
      std::map<int, const ActualRow*> by_rank;
      for (const auto& row : rows) {
        if (days_between(row.date, rows.front().date) != 0) {
          throw ParseError(row.lineno,
                           "conflicting draft_date for season " +
                               std::to_string(season));
        }
        const auto [it, inserted] = by_rank.emplace(row.rank, &row);
        if (!inserted) {
          throw DuplicateRankError(
              row.lineno, "duplicate rank " + std::to_string(row.rank) +
                              " in actual draft for season " +
                              std::to_string(season) + ", first seen on line " +
                              std::to_string(it->second->lineno));
        }
      }
      std::vector<std::string> entries;
      int expected = 1;
      for (const auto& [rank, row] : by_rank) {
        if (rank != expected) {
          throw ParseError(row->lineno, "actual draft ranks for season " +
                                            std::to_string(season) +
                                            " are not dense: expected rank " +
                                            std::to_string(expected) +
                                            ", found " + std::to_string(rank));
        }
        entries.push_back(row->player);
        ++expected;
      }
      if (static_cast<int>(entries.size()) > options.max_actual_length) {
        throw ParseError(rows.front().lineno,
                         "actual draft for season " + std::to_string(season) +
                             " has " + std::to_string(entries.size()) +
                             " picks, above the limit of " +
                             std::to_string(options.max_actual_length) +
                             " (raise max_actual_length to override)");
      }
      ActualDraft actual;
      try {
        actual.list = RankedList::from_entries(std::move(entries));
      } catch (const Error& e) {
        throw ParseError(rows.front().lineno,
                         "invalid actual draft for season " +
                             std::to_string(season) + ": " + e.what());
      }
      actual.draft_date = rows.front().date;
      actuals.emplace(season, std::move(actual));
    }
  }

  return DraftDataset::assemble(std::move(mocks), std::move(actuals),
                                options.collection_window_days);
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_mocks_csv(std::ostream& out, const DraftDataset& dataset) {
  out << "season,author,forecast_type,publish_date,rank,player,tier\n";
  for (const auto& rec : dataset.mocks()) {
    for (std::size_t i = 0; i < rec.list.size(); ++i) {
      const int rank = static_cast<int>(i + 1);
      const int tier = rec.list.tier_of(rank);
      out << rec.season << ',' << csv_escape(rec.author) << ','
          << to_string(rec.forecast_type) << ',' << format_date(rec.publish_date)
          << ',' << rank << ',' << csv_escape(rec.list.entries()[i]) << ',';
      if (tier > 0) out << tier;
      out << '\n';
    }
  }
}

void write_actuals_csv(std::ostream& out, const DraftDataset& dataset) {
  out << "season,draft_date,rank,player\n";
  for (const auto& [season, actual] : dataset.actuals()) {
    for (std::size_t i = 0; i < actual.list.size(); ++i) {
      out << season << ',' << format_date(actual.draft_date) << ',' << (i + 1)
          << ',' << csv_escape(actual.list.entries()[i]) << '\n';
    }
  }
}

void write_dataset(const DraftDataset& dataset, const std::string& mocks_path,
                   const std::string& actuals_path) {
  std::ofstream mocks_out(mocks_path, std::ios::binary);
  if (!mocks_out) throw Error("cannot write file: " + mocks_path);
  write_mocks_csv(mocks_out, dataset);
  std::ofstream actuals_out(actuals_path, std::ios::binary);
  if (!actuals_out) throw Error("cannot write file: " + actuals_path);
  write_actuals_csv(actuals_out, dataset);
}

}  // namespace draftrank

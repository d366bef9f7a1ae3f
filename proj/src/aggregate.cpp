/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "draftrank/aggregate.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "draftrank/io.hpp"

namespace draftrank {

namespace {

/// Per-item tallies over the input lists, for points and for the
/// average-position tie-breaks. Averages are compared by cross
/// multiplication so equal averages stay exactly equal.
struct ItemTally {
  std::string display;  // spelling from the first list that carries the item
  long long points = 0;
  long long pos_sum = 0;
  int pos_cnt = 0;
};

using TallyMap = std::map<std::string, ItemTally>;

/// True when a's average listed position is strictly lower (better) than
/// b's.
bool lower_avg_position(const ItemTally& a, const ItemTally& b) {
  return a.pos_sum * b.pos_cnt < b.pos_sum * a.pos_cnt;
}

void check_mocks(const std::vector<RankedList>& mocks) {
  if (mocks.empty()) {
    throw NoMocksError("no mock drafts to aggregate");
  }
  for (const auto& m : mocks) {
    if (m.empty()) {
      throw EmptyListError("cannot aggregate an empty mock draft");
    }
  }
}

TallyMap tally_items(const std::vector<RankedList>& mocks, int draft_length) {
  TallyMap tally;
  for (const auto& mock : mocks) {
    for (std::size_t i = 0; i < mock.size(); ++i) {
      const int pos = static_cast<int>(i) + 1;
      auto& item = tally[mock.keys()[i]];
      if (item.pos_cnt == 0) item.display = mock.entries()[i];
      item.points += std::max(draft_length - pos + 1, 0);
      item.pos_sum += pos;
      item.pos_cnt += 1;
    }
  }
  return tally;
}

std::vector<RankedList> lists_of(const std::vector<MockDraftRecord>& mocks) {
  std::vector<RankedList> lists;
  lists.reserve(mocks.size());
  for (const auto& m : mocks) lists.push_back(m.list);
  return lists;
}

}  // namespace

std::string to_string(ConsensusMethod m) {
  return m == ConsensusMethod::Borda ? "borda" : "rca";
}

ConsensusMethod consensus_method_from_string(std::string_view s) {
  const std::string v = normalize_key(s);
  if (v == "borda") return ConsensusMethod::Borda;
  if (v == "rca") return ConsensusMethod::Rca;
  throw DomainError("consensus method must be borda or rca");
}

long long BordaResult::score_of(std::string_view item) const {
  const auto it = scores.find(normalize_key(item));
  if (it == scores.end()) {
    throw DomainError("item '" + std::string(item) + "' was on no input list");
  }
  return it->second;
}

BordaResult borda(const std::vector<RankedList>& mocks, int draft_length) {
  check_mocks(mocks);
  if (draft_length < 1) {
    throw DomainError("draft_length must be >= 1, got " +
                      std::to_string(draft_length));
  }

  const TallyMap tally = tally_items(mocks, draft_length);

  std::vector<TallyMap::const_iterator> order;
  for (auto it = tally.begin(); it != tally.end(); ++it) {
    if (it->second.points > 0) order.push_back(it);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a->second.points != b->second.points) {
      return a->second.points > b->second.points;
    }
    if (lower_avg_position(a->second, b->second)) return true;
    if (lower_avg_position(b->second, a->second)) return false;
    return a->first < b->first;
  });

  BordaResult result;
  std::vector<std::string> entries;
  entries.reserve(order.size());
  for (const auto& it : order) {
    entries.push_back(it->second.display);
    result.ordering_scores.push_back(it->second.points);
  }
  result.ordering = RankedList::from_entries(std::move(entries));
  for (const auto& [key, item] : tally) result.scores[key] = item.points;

  // Runs of equal totals share a competition rank and surface as a group.
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           order[j]->second.points == order[i]->second.points) {
      ++j;
    }
    if (j - i >= 2) {
      TieGroup group;
      group.rank = static_cast<int>(i) + 1;
      for (std::size_t k = i; k < j; ++k) {
        group.items.push_back(order[k]->second.display);
      }
      result.tie_groups.push_back(std::move(group));
    }
    i = j;
  }
  return result;
}

BordaResult borda(const std::vector<MockDraftRecord>& mocks,
                  int draft_length) {
  return borda(lists_of(mocks), draft_length);
}

int RcaTrace::rounds_for_pick(int pick) const {
  int n = 0;
  for (const auto& r : rounds) {
    if (r.pick == pick) ++n;
  }
  return n;
}

RcaTrace rca(const std::vector<RankedList>& mocks, int num_picks) {
  check_mocks(mocks);

  // Positions and display spellings; draft_length 0 keeps points unused.
  const TallyMap tally = tally_items(mocks, 0);
  if (num_picks < 1 ||
      num_picks > static_cast<int>(tally.size())) {
    throw DomainError("num_picks must lie in [1, " +
                      std::to_string(tally.size()) +
                      "], the union of listed items; got " +
                      std::to_string(num_picks));
  }

  std::set<std::string> available;
  for (const auto& [key, item] : tally) available.insert(key);

  RcaTrace trace;
  std::vector<std::string> picked;

  for (int pick = 1; pick <= num_picks; ++pick) {
    std::set<std::string> eligible = available;

    while (true) {
      // One ballot per author: their highest-ranked eligible entry. A tier
      // tag on that entry spreads the vote to every eligible entry sharing
      // the tag; the ballot still counts once.
      int ballots_cast = 0;
      std::map<std::string, int> votes;
      for (const auto& mock : mocks) {
        int top = 0;
        for (std::size_t i = 0; i < mock.size(); ++i) {
          if (eligible.count(mock.keys()[i]) > 0) {
            top = static_cast<int>(i) + 1;
            break;
          }
        }
        if (top == 0) continue;  // list exhausted, author abstains
        ++ballots_cast;
        const int tag = mock.tier_of(top);
        if (tag == 0) {
          votes[mock.keys()[static_cast<std::size_t>(top - 1)]] += 1;
        } else {
          for (std::size_t i = 0; i < mock.size(); ++i) {
            if (mock.tier_of(static_cast<int>(i) + 1) == tag &&
                eligible.count(mock.keys()[i]) > 0) {
              votes[mock.keys()[i]] += 1;
            }
          }
        }
      }

      if (ballots_cast == 0) {
        // Every list is exhausted: unlisted items carry no information, so
        // the ordering ends here rather than inventing ranks.
        trace.ordering = RankedList::from_entries(std::move(picked));
        return trace;
      }

      RcaRound round;
      round.pick = pick;
      round.ballots_cast = ballots_cast;
      for (const auto& [key, count] : votes) {
        round.votes.emplace_back(tally.at(key).display, count);
      }
      std::stable_sort(round.votes.begin(), round.votes.end(),
                       [](const auto& a, const auto& b) {
                         return a.second > b.second;
                       });

      // Front-runner: most votes, then lower average listed position, then
      // lexicographically smaller key. Ties are reachable only when tier
      // tags let vote totals exceed the ballot count.
      const std::string* leader = nullptr;
      for (const auto& [key, count] : votes) {
        if (leader == nullptr) {
          leader = &key;
          continue;
        }
        const int lead = votes.at(*leader);
        if (count > lead) {
          leader = &key;
        } else if (count == lead &&
                   lower_avg_position(tally.at(key), tally.at(*leader))) {
          leader = &key;
        }
      }

      if (votes.at(*leader) * 2 > ballots_cast) {
        round.action = RcaRound::Action::Win;
        round.subject = tally.at(*leader).display;
        trace.rounds.push_back(std::move(round));
        picked.push_back(tally.at(*leader).display);
        available.erase(*leader);
        break;
      }

      // No majority: the fewest positive votes leaves this pick's pool.
      // Ties drop the worst (highest) average listed position, then the
      // lexicographically greatest key.
      const std::string* loser = nullptr;
      for (const auto& [key, count] : votes) {
        if (loser == nullptr) {
          loser = &key;
          continue;
        }
        const int low = votes.at(*loser);
        if (count < low) {
          loser = &key;
        } else if (count == low) {
          if (lower_avg_position(tally.at(*loser), tally.at(key)) ||
              (!lower_avg_position(tally.at(key), tally.at(*loser)) &&
               key > *loser)) {
            loser = &key;
          }
        }
      }
      round.action = RcaRound::Action::Eliminate;
      round.subject = tally.at(*loser).display;
      trace.rounds.push_back(std::move(round));
      eligible.erase(*loser);
    }
  }

  trace.ordering = RankedList::from_entries(std::move(picked));
  return trace;
}

RcaTrace rca(const std::vector<MockDraftRecord>& mocks, int num_picks) {
  return rca(lists_of(mocks), num_picks);
}

std::vector<MockDraftRecord> select_window_mocks(const DraftDataset& dataset,
                                                 int season, const Date& as_of,
                                                 int window_days) {
  if (window_days < 1) {
    throw DomainError("window_days must be >= 1, got " +
                      std::to_string(window_days));
  }

  // Freshest record per author; forecast type is not part of the key.
  std::map<std::string, const MockDraftRecord*> best;
  for (const auto* mock : dataset.mocks_for_season(season)) {
    const int age = days_between(mock->publish_date, as_of);
    if (age < 0 || age >= window_days) continue;
    auto [it, inserted] = best.emplace(normalize_key(mock->author), mock);
    if (inserted) continue;
    const MockDraftRecord* held = it->second;
    const int held_age = days_between(held->publish_date, as_of);
    bool replace = false;
    if (age != held_age) {
      replace = age < held_age;
    } else if (mock->forecast_type != held->forecast_type) {
      replace = mock->forecast_type == ForecastType::Mock;
    } else if (mock->list.size() != held->list.size()) {
      replace = mock->list.size() > held->list.size();
    } else {
      replace = mock->list.entries() < held->list.entries();
    }
    if (replace) it->second = mock;
  }

  if (best.empty()) {
    throw NoMocksInWindowError(
        "no mocks for season " + std::to_string(season) + " published in (" +
        format_date(add_days(as_of, -window_days)) + ", " +
        format_date(as_of) + "]");
  }

  std::vector<MockDraftRecord> selected;
  selected.reserve(best.size());
  for (const auto& [author, mock] : best) selected.push_back(*mock);
  return selected;
}

ConsensusResult rolling_consensus_detail(const DraftDataset& dataset,
                                         int season, const Date& as_of,
                                         int window_days,
                                         ConsensusMethod method) {
  const std::vector<MockDraftRecord> selected =
      select_window_mocks(dataset, season, as_of, window_days);

  const int target_length =
      dataset.has_actual(season)
          ? static_cast<int>(dataset.actual(season).list.size())
          : 60;

  ConsensusResult result;
  result.method = method;
  result.season = season;
  result.as_of = as_of;
  result.source_count = static_cast<int>(selected.size());

  if (method == ConsensusMethod::Borda) {
    result.borda = borda(selected, target_length);
    result.ordering = result.borda->ordering;
  } else {
    std::set<std::string> item_union;
    for (const auto& mock : selected) {
      item_union.insert(mock.list.keys().begin(), mock.list.keys().end());
    }
    const int picks =
        std::min(target_length, static_cast<int>(item_union.size()));
    result.rca = rca(selected, picks);
    result.ordering = result.rca->ordering;
  }
  return result;
}

RankedList rolling_consensus(const DraftDataset& dataset, int season,
                             const Date& as_of, int window_days,
                             ConsensusMethod method) {
  return rolling_consensus_detail(dataset, season, as_of, window_days, method)
      .ordering;
}

void write_consensus_csv(std::ostream& out, const ConsensusResult& result) {
  out << "rank,player,method,season,as_of_date,score,round_count\n";
  const std::string method = to_string(result.method);
  const std::string date = format_date(result.as_of);

  if (result.method == ConsensusMethod::Borda) {
    const BordaResult& b = *result.borda;
    int rank = 0;
    for (std::size_t i = 0; i < b.ordering.size(); ++i) {
      if (i == 0 || b.ordering_scores[i] != b.ordering_scores[i - 1]) {
        rank = static_cast<int>(i) + 1;
      }
      out << rank << ',' << csv_escape(b.ordering.entries()[i]) << ','
          << method << ',' << result.season << ',' << date << ','
          << b.ordering_scores[i] << ",\n";
    }
  } else {
    const RcaTrace& t = *result.rca;
    for (std::size_t i = 0; i < t.ordering.size(); ++i) {
      const int pick = static_cast<int>(i) + 1;
      out << pick << ',' << csv_escape(t.ordering.entries()[i]) << ','
          << method << ',' << result.season << ',' << date << ",,"
          << t.rounds_for_pick(pick) << "\n";
    }
  }
}

void write_rca_trace(std::ostream& out, const RcaTrace& trace) {
  for (const auto& round : trace.rounds) {
    out << "pick " << round.pick << " | ballots " << round.ballots_cast
        << " | ";
    for (std::size_t i = 0; i < round.votes.size(); ++i) {
      if (i > 0) out << ", ";
      out << round.votes[i].first << "=" << round.votes[i].second;
    }
    out << " | "
        << (round.action == RcaRound::Action::Win ? "win " : "eliminate ")
        << round.subject << "\n";
  }
}

}  // namespace draftrank

/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Consensus builders: Borda count and per-pick ranked-choice aggregation,
 * plus the rolling-window wrapper that feeds them from a dataset.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "draftrank/core.hpp"
#include "draftrank/errors.hpp"

namespace draftrank {

enum class ConsensusMethod { Borda, Rca };

std::string to_string(ConsensusMethod m);
ConsensusMethod consensus_method_from_string(std::string_view s);

/// Items whose point totals coincide, reported separately because the
/// ordering itself must be total. `rank` is the shared competition rank.
struct TieGroup {
  int rank = 0;
  std::vector<std::string> items;  // display spelling, ordering order

  friend bool operator==(const TieGroup&, const TieGroup&) = default;
};

struct BordaResult {
  /// Items that earned at least one point, best first. Equal totals are
  /// ordered by lower average listed position, then lexicographic key.
  RankedList ordering;

  /// Point total per item of `ordering`, aligned index for index.
  std::vector<long long> ordering_scores;

  /// Point total for every item in the union of the input lists,
  /// zero-scored items included. Keyed by normalized id.
  std::map<ItemId, long long> scores;

  std::vector<TieGroup> tie_groups;

  /// Total for `item` (normalized match). Throws DomainError when the item
  /// was on no input list.
  long long score_of(std::string_view item) const;
};

/**
 * Point-sum aggregation. The item at position k of a list earns
 * max(draft_length - k + 1, 0) points; being unlisted or listed beyond
 * draft_length earns zero. Tier tags carry no weight here: each entry
 * scores its own slot.
 */
BordaResult borda(const std::vector<RankedList>& mocks, int draft_length);
BordaResult borda(const std::vector<MockDraftRecord>& mocks,
                  int draft_length = 60);

/// One voting round within a pick: the ballots cast, the per-item votes,
/// and what the round did (declared a winner or dropped a contender).
struct RcaRound {
  enum class Action { Win, Eliminate };

  int pick = 0;          // 1-based pick the round belongs to
  int ballots_cast = 0;  // authors that still had an eligible item
  /// Positive vote counts, display spelling; most votes first, key order
  /// within equal counts.
  std::vector<std::pair<std::string, int>> votes;
  Action action = Action::Win;
  std::string subject;  // winner or eliminated item

  friend bool operator==(const RcaRound&, const RcaRound&) = default;
};

struct RcaTrace {
  RankedList ordering;
  std::vector<RcaRound> rounds;

  /// Voting rounds spent on pick d (eliminations plus the winning round).
  int rounds_for_pick(int pick) const;
};

/**
 * Per-pick instant-runoff aggregation. For each pick, every author whose
 * list still holds an eligible item votes for their highest-ranked one
 * (tied entries each receive the vote, the author's ballot still counts
 * once). An item with a strict majority of cast ballots takes the pick;
 * otherwise the item with the fewest positive votes becomes ineligible for
 * this pick only (ties drop the worst average listed position, then the
 * lexicographically greater key) and voting repeats.
 *
 * num_picks must not exceed the union of listed items: unlisted items
 * carry no information and are never invented.
 */
RcaTrace rca(const std::vector<RankedList>& mocks, int num_picks);
RcaTrace rca(const std::vector<MockDraftRecord>& mocks, int num_picks);

/**
 * The consensus inputs at `as_of`: each author's most recent record of
 * `season` published inside (as_of - window_days, as_of]. Authors are keyed
 * by name alone; a same-day pair of records prefers the mock over the
 * ranking, then the longer list. Throws NoMocksInWindowError.
 */
std::vector<MockDraftRecord> select_window_mocks(const DraftDataset& dataset,
                                                 int season, const Date& as_of,
                                                 int window_days);

/// A consensus ordering plus the method evidence behind it.
struct ConsensusResult {
  ConsensusMethod method = ConsensusMethod::Borda;
  int season = 0;
  Date as_of{};
  int source_count = 0;  // records aggregated
  RankedList ordering;
  std::optional<BordaResult> borda;  // engaged when method == Borda
  std::optional<RcaTrace> rca;       // engaged when method == Rca
};

/**
 * Consensus of the window's freshest mock per author. The target length is
 * the season's actual draft length when known, 60 otherwise; ranked-choice
 * picks are additionally capped by the size of the union of listed items.
 */
ConsensusResult rolling_consensus_detail(const DraftDataset& dataset,
                                         int season, const Date& as_of,
                                         int window_days,
                                         ConsensusMethod method);

RankedList rolling_consensus(const DraftDataset& dataset, int season,
                             const Date& as_of, int window_days,
                             ConsensusMethod method);

/// Columns: rank,player,method,season,as_of_date,score,round_count.
/// Borda rows share competition ranks across tied totals and leave
/// round_count empty; ranked-choice rows leave score empty.
void write_consensus_csv(std::ostream& out, const ConsensusResult& result);

/// One round per line: pick, ballots, vote counts, action.
void write_rca_trace(std::ostream& out, const RcaTrace& trace);

}  // namespace draftrank

/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Pure numeric kernels for ranked-list similarity and error: rank-biased
 * overlap extrapolated to finite lists of unequal length, the rank-biased
 * distance derived from it, the weight mass carried by a prefix of ranks,
 * and mean-absolute-error baselines with imputation for unranked items.
 *
 * All functions are pure; callers may evaluate any number concurrently.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include "draftrank/core.hpp"

namespace draftrank {

/// Item universe over which baseline errors are averaged.
enum class EvalUniverse { DraftedOnly, MockedOnly, Union };

std::string to_string(EvalUniverse u);
EvalUniverse eval_universe_from_string(std::string_view s);  // throws DomainError

struct MetricParams {
  /// Persistence / front-weighting parameter, in (0,1). Smaller values
  /// concentrate more weight on the top of the list.
  double q = 0.98;
  /// Rank substituted for unranked items in the baseline metrics. Must
  /// exceed the length of the actual draft.
  int impute_rank = 61;
  /// Universe for the baseline metrics.
  EvalUniverse eval_universe = EvalUniverse::Union;
};

/**
 * The three summands of extrapolated rank-biased overlap, kept separate.
 *
 * observed_term       weighted agreement over depths 1..s (s = shorter
 *                     list's length)
 * extrapolated_       weighted agreement over depths s+1..l, the shorter
 * overlap_term        list saturated, plus the (X_s/s)(1 - s/d) projection
 *                     of its observed agreement onto the unobserved part
 * residual_term       q^l (X_l/l + (X_s/s)(1 - s/l)), the mass beyond both
 *                     lists
 *
 * total = observed_term + extrapolated_overlap_term + residual_term,
 * and lies in [0,1].
 */
struct RboBreakdown {
  double observed_term = 0.0;
  double extrapolated_overlap_term = 0.0;
  double residual_term = 0.0;
  double total = 0.0;
};

/// Extrapolated rank-biased overlap between two ranked lists. Symmetric in
/// (a, b). Throws EmptyListError, TiedInputError, DomainError.
RboBreakdown rbo_ext(const RankedList& a, const RankedList& b,
                     const MetricParams& params = {});

/// Rank-biased distance: 1 - rbo_ext(a, b).total.
double rbd(const RankedList& a, const RankedList& b,
           const MetricParams& params = {});

/// Fraction of total metric weight carried by ranks 1..depth under the
/// q-geometric weighting. Strictly increasing in depth; tends to 1.
double prefix_weight(double q, int depth);

/// Mean absolute error of positions over the configured universe, with
/// unranked positions imputed. With log_scale, errors are differences of
/// natural logs of positions (a 1 vs 3 error weighs the same as 10 vs 30).
double mae(const RankedList& mock, const RankedList& actual,
           const MetricParams& params = {}, bool log_scale = false);

}  // namespace draftrank

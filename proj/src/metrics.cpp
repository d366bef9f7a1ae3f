/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "draftrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace draftrank {

namespace {

void check_q(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw DomainError("q must lie strictly inside (0,1), got " +
                      std::to_string(q));
  }
}

void check_metric_input(const RankedList& list, const char* side) {
  if (list.empty()) {
    throw EmptyListError(std::string(side) + " list is empty");
  }
  if (list.has_tied_entries()) {
    throw TiedInputError(std::string(side) +
                         " list has tied entries; metrics require a strict "
                         "ordering");
  }
}

}  // namespace

std::string to_string(EvalUniverse u) {
  switch (u) {
    case EvalUniverse::DraftedOnly:
      return "drafted_only";
    case EvalUniverse::MockedOnly:
      return "mocked_only";
    default:
      return "union";
  }
}

EvalUniverse eval_universe_from_string(std::string_view s) {
  const std::string v = normalize_key(s);
  if (v == "drafted_only") return EvalUniverse::DraftedOnly;
  if (v == "mocked_only") return EvalUniverse::MockedOnly;
  if (v == "union") return EvalUniverse::Union;
  throw DomainError("eval_universe must be drafted_only, mocked_only or union");
}

/*
 * The agreement X_d (the size of the intersection of the two depth-d
 * prefixes) is accumulated incrementally. For depths up to the shorter
 * length s, each step appends one element from each list; an element
 * already seen from the other side closes a match. The single shared
 * `seen` set suffices because an element occurs at most once per list, so
 * a hit always pairs elements from opposite lists. Beyond s the shorter
 * list is saturated: X_d grows only when the longer list's next element
 * lies anywhere in the shorter list.
 */
RboBreakdown rbo_ext(const RankedList& a, const RankedList& b,
                     const MetricParams& params) {
  check_q(params.q);
  check_metric_input(a, "first");
  check_metric_input(b, "second");

  const RankedList& shorter = a.size() <= b.size() ? a : b;
  const RankedList& longer = a.size() <= b.size() ? b : a;
  const std::size_t s = shorter.size();
  const std::size_t l = longer.size();
  const double q = params.q;

  RboBreakdown out;
  std::unordered_set<std::string_view> seen;
  seen.reserve(2 * s);
  int overlap = 0;
  bool prefixes_identical = true;
  double q_pow = 1.0;  // q^d, maintained as a running product

  for (std::size_t d = 1; d <= s; ++d) {
    const std::string_view es = shorter.keys()[d - 1];
    const std::string_view el = longer.keys()[d - 1];
    if (es == el) {
      ++overlap;
    } else {
      prefixes_identical = false;
      if (seen.erase(es) == 1) {
        ++overlap;
      } else {
        seen.insert(es);
      }
      if (seen.erase(el) == 1) {
        ++overlap;
      } else {
        seen.insert(el);
      }
    }
    q_pow *= q;
    out.observed_term +=
        (1.0 - q) / q * q_pow * (static_cast<double>(overlap) / d);
  }

  const double agreement_at_s = static_cast<double>(overlap) / s;
  for (std::size_t d = s + 1; d <= l; ++d) {
    if (shorter.contains(longer.keys()[d - 1])) ++overlap;
    q_pow *= q;
    out.extrapolated_overlap_term +=
        (1.0 - q) / q * q_pow *
        (static_cast<double>(overlap) / d +
         agreement_at_s * (1.0 - static_cast<double>(s) / d));
  }

  out.residual_term =
      q_pow * (static_cast<double>(overlap) / l +
               agreement_at_s * (1.0 - static_cast<double>(s) / l));

  // Identical lists collapse algebraically to (1 - q^n) + q^n.
  if (s == l && prefixes_identical) {
    out.total = 1.0;
  } else {
    out.total = std::clamp(
        out.observed_term + out.extrapolated_overlap_term + out.residual_term,
        0.0, 1.0);
  }
  return out;
}

double rbd(const RankedList& a, const RankedList& b,
           const MetricParams& params) {
  return 1.0 - rbo_ext(a, b, params).total;
}

/*
 * Closed form for the mass of ranks 1..d. Rank r carries weight
 * (1-q)/q * sum_{k>=r} q^k/k; summing over r = 1..d and swapping the order
 * of summation gives
 *
 *   W(d) = 1 - q^d + d (1-q)/q (ln 1/(1-q) - sum_{k=1..d} q^k/k)
 *
 * using sum_{k>=1} q^k/k = -ln(1-q).
 */
double prefix_weight(double q, int depth) {
  check_q(q);
  if (depth < 1) {
    throw DomainError("depth must be >= 1, got " + std::to_string(depth));
  }
  double q_pow = 1.0;
  double harmonic_sum = 0.0;
  for (int k = 1; k <= depth; ++k) {
    q_pow *= q;
    harmonic_sum += q_pow / k;
  }
  const double w = 1.0 - q_pow +
                   depth * (1.0 - q) / q * (-std::log1p(-q) - harmonic_sum);
  return std::clamp(w, 0.0, 1.0);
}

double mae(const RankedList& mock, const RankedList& actual,
           const MetricParams& params, bool log_scale) {
  check_q(params.q);
  if (mock.has_tied_entries() || actual.has_tied_entries()) {
    throw TiedInputError("baseline metrics require strict orderings");
  }
  if (params.impute_rank <= static_cast<int>(actual.size())) {
    throw DomainError("impute_rank (" + std::to_string(params.impute_rank) +
                      ") must exceed the actual draft length (" +
                      std::to_string(actual.size()) + ")");
  }

  std::vector<std::string_view> universe;
  const auto add_keys = [&universe](const RankedList& list) {
    universe.insert(universe.end(), list.keys().begin(), list.keys().end());
  };
  switch (params.eval_universe) {
    case EvalUniverse::DraftedOnly:
      add_keys(actual);
      break;
    case EvalUniverse::MockedOnly:
      add_keys(mock);
      break;
    case EvalUniverse::Union:
      add_keys(actual);
      for (const auto& key : mock.keys()) {
        if (!actual.contains(key)) universe.push_back(key);
      }
      break;
  }
  if (universe.empty()) {
    throw EmptyUniverseError("baseline universe resolved to the empty set");
  }

  double sum = 0.0;
  for (const auto& key : universe) {
    const double pm = mock.position_of(key).value_or(params.impute_rank);
    const double pa = actual.position_of(key).value_or(params.impute_rank);
    sum += log_scale ? std::fabs(std::log(pm) - std::log(pa))
                     : std::fabs(pm - pa);
  }
  return sum / static_cast<double>(universe.size());
}

}  // namespace draftrank

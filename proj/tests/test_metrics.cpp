/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "draftrank/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace draftrank;

namespace {

MetricParams with_q(double q) {
  MetricParams p;
  p.q = q;
  return p;
}

/// Cost of swapping the adjacent ranks r and r+1 in an identity list:
/// one item missing from the depth-r prefix set.
double adjacent_swap_cost(double q, int r) {
  return (1.0 - q) / q * std::pow(q, r) / r;
}

}  // namespace

TEST_CASE("rbo_ext matches the brute-force evaluation term by term") {
  std::mt19937 rng(20260822);
  const auto universe = fixtures::identity_items(15);
  std::uniform_int_distribution<int> len(1, 10);

  for (const double q : {0.5, 0.9, 0.98}) {
    const auto params = with_q(q);
    for (int trial = 0; trial < 200; ++trial) {
      auto pool_a = universe;
      auto pool_b = universe;
      std::shuffle(pool_a.begin(), pool_a.end(), rng);
      std::shuffle(pool_b.begin(), pool_b.end(), rng);
      pool_a.resize(len(rng));
      pool_b.resize(len(rng));

      const auto a = RankedList::from_entries(pool_a);
      const auto b = RankedList::from_entries(pool_b);
      const auto got = rbo_ext(a, b, params);
      const auto want = oracles::brute_rbo_ext(pool_a, pool_b, q);

      CHECK(got.observed_term == doctest::Approx(want.observed).epsilon(1e-12));
      CHECK(got.extrapolated_overlap_term ==
            doctest::Approx(want.extrapolated).epsilon(1e-12));
      CHECK(got.residual_term == doctest::Approx(want.residual).epsilon(1e-12));
      CHECK(std::abs(got.total - want.total) < 1e-12);
      CHECK(std::abs(rbd(a, b, params) - (1.0 - want.total)) < 1e-12);
    }
  }
}

TEST_CASE("rbo_ext is symmetric and internally consistent") {
  const auto a = RankedList::from_entries({"1", "2", "3", "4", "5", "6"});
  const auto b = RankedList::from_entries({"2", "1", "7", "3"});
  const auto ab = rbo_ext(a, b);
  const auto ba = rbo_ext(b, a);
  CHECK(ab.observed_term == ba.observed_term);
  CHECK(ab.extrapolated_overlap_term == ba.extrapolated_overlap_term);
  CHECK(ab.residual_term == ba.residual_term);
  CHECK(ab.total == ba.total);
  CHECK(ab.total == doctest::Approx(ab.observed_term +
                                    ab.extrapolated_overlap_term +
                                    ab.residual_term)
                        .epsilon(1e-12));
  CHECK(ab.total >= 0.0);
  CHECK(ab.total <= 1.0);
}

TEST_CASE("identical lists collapse to zero distance exactly") {
  const auto a = fixtures::identity_list(10);
  CHECK(rbo_ext(a, a).total == 1.0);
  CHECK(rbd(a, a) == 0.0);

  // Identity is the normalized key, not the spelling.
  const auto b = RankedList::from_entries({"P01", "  p02", "P03"});
  const auto c = RankedList::from_entries({"p01", "p02", "p03"});
  CHECK(rbd(b, c) == 0.0);

  for (const double q : {0.5, 0.9, 0.98, 0.999}) {
    CHECK(rbd(a, a, with_q(q)) == 0.0);
  }
}

TEST_CASE("a strict prefix extrapolates to full agreement") {
  const auto longer = fixtures::identity_list(10);
  const auto prefix = fixtures::identity_list(4);
  CHECK(rbd(prefix, longer) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rbd(longer, prefix) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("disjoint lists are at maximal distance") {
  const auto a = RankedList::from_entries({"a", "b", "c"});
  const auto b = RankedList::from_entries({"x", "y", "z"});
  CHECK(rbd(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  const auto c = RankedList::from_entries({"x", "y"});
  CHECK(rbd(a, c) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("an adjacent transposition costs its closed form") {
  for (const double q : {0.5, 0.9, 0.98}) {
    const auto params = with_q(q);
    for (const int r : {1, 3, 5, 9}) {
      const auto mock = fixtures::transposed_list(10, {r});
      const auto actual = fixtures::identity_list(10);
      CHECK(rbd(mock, actual, params) ==
            doctest::Approx(adjacent_swap_cost(q, r)).epsilon(1e-12));
    }
  }
  // The q = 0.98 rank-1 value, pinned.
  CHECK(rbd(fixtures::transposed_list(10, {1}), fixtures::identity_list(10)) ==
        doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("distance is front-weighted") {
  const auto actual = fixtures::identity_list(12);
  double prev = 1.0;
  for (const int r : {1, 4, 8, 11}) {
    const double err = rbd(fixtures::transposed_list(12, {r}), actual);
    CHECK(err < prev);
    CHECK(err > 0.0);
    prev = err;
  }

  // Two swaps cost more than either alone.
  const double one = rbd(fixtures::transposed_list(12, {4}), actual);
  const double two = rbd(fixtures::transposed_list(12, {4, 8}), actual);
  CHECK(two > one);
}

TEST_CASE("metric input validation") {
  const auto a = fixtures::identity_list(3);
  const auto empty = RankedList{};
  const auto tied = RankedList::from_entries({"a", "b"}, {1, 1});

  CHECK_THROWS_AS(rbo_ext(a, empty), EmptyListError);
  CHECK_THROWS_AS(rbo_ext(empty, a), EmptyListError);
  CHECK_THROWS_AS(rbd(a, tied), TiedInputError);
  CHECK_THROWS_AS(rbd(tied, a), TiedInputError);
  CHECK_THROWS_AS(mae(tied, a), TiedInputError);
  CHECK_THROWS_AS(mae(a, empty), EmptyListError);

  CHECK_THROWS_AS(rbd(a, a, with_q(0.0)), DomainError);
  CHECK_THROWS_AS(rbd(a, a, with_q(1.0)), DomainError);
  CHECK_THROWS_AS(rbd(a, a, with_q(-0.5)), DomainError);
  CHECK_THROWS_AS(prefix_weight(0.98, 0), DomainError);
  CHECK_THROWS_AS(prefix_weight(1.2, 5), DomainError);
}

TEST_CASE("prefix_weight matches direct accumulation") {
  for (const auto& [q, depth] : std::vector<std::pair<double, int>>{
           {0.5, 1}, {0.5, 3}, {0.9, 5}, {0.98, 14}, {0.98, 60}, {0.99, 10}}) {
    CHECK(prefix_weight(q, depth) ==
          doctest::Approx(oracles::brute_prefix_weight(q, depth))
              .epsilon(1e-9));
  }
}

TEST_CASE("prefix_weight pins and limits") {
  // Roughly half the weight sits on the first 14 ranks at q = 0.98.
  const double w14 = prefix_weight(0.98, 14);
  CHECK(w14 > 0.505);
  CHECK(w14 < 0.515);
  const double w60 = prefix_weight(0.98, 60);
  CHECK(w60 > 0.885);
  CHECK(w60 < 0.895);

  double prev = 0.0;
  for (int d = 1; d <= 80; ++d) {
    const double w = prefix_weight(0.98, d);
    CHECK(w > prev);
    CHECK(w <= 1.0);
    prev = w;
  }
  CHECK(prefix_weight(0.98, 2000) > 0.9999);
  CHECK(prefix_weight(0.5, 40) > 0.999999);
}

TEST_CASE("mae averages positional error over the universe") {
  const auto actual = RankedList::from_entries({"a", "b", "c"});
  const auto swapped = RankedList::from_entries({"b", "a", "c"});
  CHECK(mae(swapped, actual) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(mae(actual, actual) == 0.0);

  MetricParams params;
  params.impute_rank = 61;

  const auto mock = RankedList::from_entries({"a", "b"});
  const auto drafted = RankedList::from_entries({"a", "c"});
  params.eval_universe = EvalUniverse::Union;  // {a, b, c}
  CHECK(mae(mock, drafted, params) ==
        doctest::Approx((0.0 + 59.0 + 59.0) / 3.0).epsilon(1e-12));
  params.eval_universe = EvalUniverse::DraftedOnly;  // {a, c}
  CHECK(mae(mock, drafted, params) == doctest::Approx(29.5).epsilon(1e-12));
  params.eval_universe = EvalUniverse::MockedOnly;  // {a, b}
  CHECK(mae(mock, drafted, params) == doctest::Approx(29.5).epsilon(1e-12));
}

TEST_CASE("log-scale mae weighs relative displacement") {
  const auto actual30 = fixtures::identity_list(30);

  // 1<->3 and 10<->30 are the same factor-of-three miss.
  auto items_a = fixtures::identity_items(30);
  std::swap(items_a[0], items_a[2]);
  auto items_b = fixtures::identity_items(30);
  std::swap(items_b[9], items_b[29]);
  const auto swap_1_3 = RankedList::from_entries(items_a);
  const auto swap_10_30 = RankedList::from_entries(items_b);

  MetricParams params;
  params.impute_rank = 31;
  const double la = mae(swap_1_3, actual30, params, true);
  const double lb = mae(swap_10_30, actual30, params, true);
  CHECK(std::abs(la - lb) < 1e-12);
  CHECK(la == doctest::Approx(2.0 * std::log(3.0) / 30.0).epsilon(1e-12));

  // On the plain scale the far swap costs ten times more.
  CHECK(mae(swap_10_30, actual30, params) ==
        doctest::Approx(10.0 * mae(swap_1_3, actual30, params))
            .epsilon(1e-12));
}

TEST_CASE("imputation rank must clear the actual draft") {
  const auto actual = fixtures::identity_list(5);
  const auto mock = fixtures::identity_list(5);
  MetricParams params;
  params.impute_rank = 5;
  CHECK_THROWS_AS(mae(mock, actual, params), DomainError);
  params.impute_rank = 6;
  CHECK_NOTHROW(mae(mock, actual, params));
}

TEST_CASE("universe labels round-trip") {
  CHECK(to_string(EvalUniverse::DraftedOnly) == "drafted_only");
  CHECK(to_string(EvalUniverse::MockedOnly) == "mocked_only");
  CHECK(to_string(EvalUniverse::Union) == "union");
  CHECK(eval_universe_from_string("drafted_only") == EvalUniverse::DraftedOnly);
  CHECK(eval_universe_from_string(" UNION ") == EvalUniverse::Union);
  CHECK_THROWS_AS(eval_universe_from_string("everything"), DomainError);
}

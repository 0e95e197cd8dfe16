// Copyright 2026 The lrss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <array>
#include <map>

#include "lrss/error.hpp"
#include "lrss/repair_group.hpp"
#include "test_support.hpp"

namespace lrss::repair {
namespace {

using algebra::kMersenne31;
using algebra::Polynomial;

std::vector<Share> shares(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> xy) {
  std::vector<Share> out;
  for (auto [x, y] : xy) out.push_back({Element{x}, Element{y}});
  return out;
}

Polynomial cubic_1234() {
  return Polynomial(std::vector<Element>{Element{1}, Element{2}, Element{3}, Element{4}});
}

TEST(Partition, TwelveIntoThree) {
  const auto groups = partition(12, 3);
  ASSERT_EQ(groups.size(), 3U);
  EXPECT_EQ(groups[0].members, (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(groups[1].members, (std::vector<std::size_t>{5, 6, 7, 8}));
  EXPECT_EQ(groups[2].members, (std::vector<std::size_t>{9, 10, 11, 12}));
  EXPECT_EQ(groups[2].id, 3U);
}

TEST(Partition, SingleGroupAndErrors) {
  EXPECT_EQ(partition(4, 1).size(), 1U);
  EXPECT_THROW((void)partition(10, 3), ConfigurationError);
  EXPECT_THROW((void)partition(3, 3), ConfigurationError);
  EXPECT_THROW((void)partition(12, 0), ConfigurationError);
}

TEST(BuildRepairFunction, RecoversKnownCubic) {
  const PrimeField f(13);
  EXPECT_EQ(build_repair_function(f, shares({{1, 10}, {2, 10}, {3, 12}, {4, 1}})).function, cubic_1234());
}

TEST(BuildRepairFunction, TwoMemberGroup) {
  const PrimeField f(13);
  const auto fn = build_repair_function(f, shares({{1, 6}, {2, 6}})).function;
  EXPECT_EQ(algebra::poly_eval(f, fn, Element{1}), Element{6});
  EXPECT_EQ(algebra::poly_eval(f, fn, Element{2}), Element{6});
  EXPECT_LE(fn.degree(), 1U);
}

TEST(BuildRepairFunction, RandomRoundTrip) {
  const PrimeField f(kMersenne31);
  RandomStream rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t gamma = 2 + rng.uniform_below(6);
    std::vector<Element> c(gamma);
    for (auto& e : c) e = algebra::random_element(f, rng);
    const Polynomial truth(c);
    std::vector<Share> pts;
    for (std::uint64_t x = 1; x <= gamma; ++x) pts.push_back({Element{x}, algebra::poly_eval(f, truth, Element{x})});
    ASSERT_EQ(build_repair_function(f, pts).function, truth);
  }
}

TEST(WeakRedundancy, ForcedAbscissa) {
  const PrimeField f(13);
  const std::array<Element, 4> members{Element{1}, Element{2}, Element{3}, Element{4}};
  const WeakRedundancy w = weak_redundancy_at(f, {cubic_1234()}, Element{5}, members);
  EXPECT_EQ(w.y_lambda, Element{1});
  EXPECT_THROW((void)weak_redundancy_at(f, {cubic_1234()}, Element{3}, members), DomainError);
  EXPECT_THROW((void)weak_redundancy_at(f, {cubic_1234()}, Element{0}, members), DomainError);
}

TEST(WeakRedundancy, NeverCollidesAndLiesOnTheCurve) {
  const PrimeField f(13);
  const std::array<Element, 4> members{Element{1}, Element{2}, Element{3}, Element{4}};
  std::map<std::uint64_t, int> seen;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    RandomStream rng(seed);
    const WeakRedundancy w = make_weak_redundancy(f, {cubic_1234()}, members, rng);
    ASSERT_GE(w.x_lambda.value, 5U);
    ASSERT_LT(w.x_lambda.value, 13U);
    ASSERT_EQ(algebra::poly_eval(f, cubic_1234(), w.x_lambda), w.y_lambda);
    seen[w.x_lambda.value]++;
  }
  // All 8 admissible abscissae get drawn.
  EXPECT_EQ(seen.size(), 8U);
}

TEST(WeakRedundancy, NoAdmissibleAbscissa) {
  const PrimeField f(3);
  const std::array<Element, 2> excluded{Element{1}, Element{2}};
  RandomStream rng(1);
  EXPECT_THROW((void)make_weak_redundancy(f, {Polynomial()}, excluded, rng), DomainError);
}

TEST(SetupSss, AnyGammaSubsharesRecover) {
  const PrimeField f(kMersenne31);
  RandomStream rng(2);
  for (std::size_t gamma : {2U, 4U, 6U}) {
    const Element y = algebra::random_element(f, rng);
    const auto subs = setup_sss(f, y, gamma, rng);
    ASSERT_EQ(subs.size(), gamma + 1);
    for (std::size_t skip = 0; skip <= gamma; ++skip) {
      std::vector<Share> subset;
      for (std::size_t i = 0; i <= gamma; ++i) {
        if (i != skip) subset.push_back(subs[i]);
      }
      EXPECT_EQ(shamir::recover(f, subset, gamma), y);
    }
  }
  EXPECT_THROW((void)setup_sss(f, Element{1}, 1, rng), DomainError);
}

// Exhaustive over GF(13): for a (gamma, gamma+1) sharing, every set of
// gamma-1 sub-share positions shows every value tuple exactly 13 times per
// sub-secret, i.e. it reveals nothing.
void expect_below_threshold_reveals_nothing(std::size_t gamma) {
  const PrimeField f(13);
  const auto params = sss_params(gamma);
  const std::size_t observed = gamma - 1;
  std::vector<bool> pick(gamma + 1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(observed), true);
  do {
    for (std::uint64_t s = 0; s < 13; ++s) {
      std::map<std::vector<std::uint64_t>, int> counts;
      testing::for_each_coefficients(13, gamma - 1, [&](const std::vector<Element>& tail) {
        std::vector<Element> c{Element{s}};
        c.insert(c.end(), tail.begin(), tail.end());
        const auto dealt = shamir::deal(f, Polynomial(c), params);
        std::vector<std::uint64_t> view;
        for (std::size_t i = 0; i <= gamma; ++i) {
          if (pick[i]) view.push_back(dealt[i].y.value);
        }
        counts[view]++;
      });
      std::size_t expected_tuples = 1;
      for (std::size_t i = 0; i < observed; ++i) expected_tuples *= 13;
      ASSERT_EQ(counts.size(), expected_tuples);
      for (const auto& [view, count] : counts) ASSERT_EQ(count, 1);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

TEST(SetupSss, FourOfFiveBelowThresholdRevealsNothing) { expect_below_threshold_reveals_nothing(4); }
TEST(SetupSss, TwoOfThreeSingleSubshareRevealsNothing) { expect_below_threshold_reveals_nothing(2); }

TEST(RepairShare, KnownGroup) {
  const PrimeField f(13);
  const auto surviving = shares({{1, 10}, {2, 10}, {3, 12}});
  EXPECT_EQ(repair_share(f, 4, surviving, {Element{5}, Element{1}}, Element{4}), Element{1});
}

TEST(RepairShare, TooFewPoints) {
  const PrimeField f(13);
  const auto surviving = shares({{1, 10}, {2, 10}});
  EXPECT_THROW((void)repair_share(f, 4, surviving, {Element{5}, Element{1}}, Element{4}), InsufficientPointsError);
}

TEST(RepairShare, IdempotentOnHealthyMember) {
  const PrimeField f(13);
  const auto surviving = shares({{1, 10}, {2, 10}, {3, 12}});
  EXPECT_EQ(repair_share(f, 4, surviving, {Element{5}, Element{1}}, Element{2}), Element{10});
}

TEST(RepairShare, ExactForEveryMemberOfRandomGroups) {
  const PrimeField f(kMersenne31);
  RandomStream rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t gamma = 2 + rng.uniform_below(5);
    std::vector<Share> group;
    for (std::uint64_t x = 1; x <= gamma; ++x) group.push_back({Element{x * 7}, algebra::random_element(f, rng)});
    const StrongRedundancy fn = build_repair_function(f, group);
    std::vector<Element> xs;
    for (const auto& s : group) xs.push_back(s.x);
    const WeakRedundancy weak = make_weak_redundancy(f, fn, xs, rng);
    for (std::size_t lost = 0; lost < gamma; ++lost) {
      std::vector<Share> surviving;
      for (std::size_t j = 0; j < gamma; ++j) {
        if (j != lost) surviving.push_back(group[j]);
      }
      ASSERT_EQ(repair_share(f, gamma, surviving, weak, group[lost].x), group[lost].y);
    }
  }
}

TEST(RestoreSubshare, HoldoutMatches) {
  const PrimeField f(kMersenne31);
  RandomStream rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto subs = setup_sss(f, algebra::random_element(f, rng), 4, rng);
    const std::size_t held_out = rng.uniform_below(5);
    std::vector<Share> available;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i != held_out) available.push_back(subs[i]);
    }
    ASSERT_EQ(restore_subshare(f, 4, available, subs[held_out].x), subs[held_out]);
  }
}

TEST(RestoreSubshare, TwoMemberLineAndPresentX) {
  const PrimeField f(13);
  // Line through (1,4) and (3,10) is 1 + 3x; at 2 it is 7.
  const auto avail = shares({{1, 4}, {3, 10}});
  EXPECT_EQ(restore_subshare(f, 2, avail, Element{2}).y, Element{7});
  EXPECT_EQ(restore_subshare(f, 2, avail, Element{3}).y, Element{10});
  EXPECT_THROW((void)restore_subshare(f, 2, shares({{1, 4}}), Element{2}), InsufficientPointsError);
}

// gamma = 4 over GF(13), members at x = 1..4 and lambda at x_lambda. For
// every observed set of at most 3 points (member shares and/or the lambda
// point) and every unobserved member, enumerate all member-share tuples
// (equivalently all cubic repairing functions) and check the missing share
// is uniform given the observation.
void expect_weak_redundancy_secrecy(std::uint64_t x_lambda) {
  const PrimeField f(13);
  const std::array<Element, 4> member_x{Element{1}, Element{2}, Element{3}, Element{4}};

  // values[t][j]: j < 4 is member j's share, j == 4 the lambda point.
  std::vector<std::array<std::uint64_t, 5>> values;
  testing::for_each_coefficients(13, 4, [&](const std::vector<Element>& ys) {
    std::vector<Share> group;
    for (std::size_t j = 0; j < 4; ++j) group.push_back({member_x[j], ys[j]});
    const StrongRedundancy fn = build_repair_function(f, group);
    const WeakRedundancy weak = weak_redundancy_at(f, fn, Element{x_lambda}, member_x);
    values.push_back({ys[0].value, ys[1].value, ys[2].value, ys[3].value, weak.y_lambda.value});
  });
  ASSERT_EQ(values.size(), 28561U);

  for (unsigned mask = 0; mask < 32; ++mask) {
    const int observed = __builtin_popcount(mask);
    if (observed > 3) continue;
    for (std::size_t missing = 0; missing < 4; ++missing) {
      if (mask & (1U << missing)) continue;
      std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, int> counts;
      for (const auto& row : values) {
        std::vector<std::uint64_t> view;
        for (std::size_t j = 0; j < 5; ++j) {
          if (mask & (1U << j)) view.push_back(row[j]);
        }
        counts[{view, row[missing]}]++;
      }
      int expected = 1;
      for (int i = 0; i < 4 - observed - 1; ++i) expected *= 13;
      std::size_t cells = 1;
      for (int i = 0; i <= observed; ++i) cells *= 13;
      ASSERT_EQ(counts.size(), cells) << "mask " << mask << " missing " << missing;
      for (const auto& [key, count] : counts) ASSERT_EQ(count, expected);
    }
  }
}

TEST(WeakRedundancySecrecy, ExhaustiveGf13LambdaAtFive) { expect_weak_redundancy_secrecy(5); }
TEST(WeakRedundancySecrecy, ExhaustiveGf13LambdaAtTwelve) { expect_weak_redundancy_secrecy(12); }

TEST(RedundancySignificance, StrongDeterminesEveryShareWeakAloneNone) {
  const PrimeField f(13);
  const auto group = shares({{1, 10}, {2, 10}, {3, 12}, {4, 1}});
  const StrongRedundancy strong = build_repair_function(f, group);
  for (const auto& s : group) EXPECT_EQ(algebra::poly_eval(f, strong.function, s.x), s.y);

  // Given only (x_lambda, y_lambda) = (5, 1), each member share takes every
  // value equally often across the consistent repairing functions.
  const std::array<Element, 4> member_x{Element{1}, Element{2}, Element{3}, Element{4}};
  std::array<std::array<int, 13>, 4> hist{};
  testing::for_each_coefficients(13, 4, [&](const std::vector<Element>& ys) {
    std::vector<Share> g;
    for (std::size_t j = 0; j < 4; ++j) g.push_back({member_x[j], ys[j]});
    if (weak_redundancy_at(f, build_repair_function(f, g), Element{5}, member_x).y_lambda != Element{1}) return;
    for (std::size_t j = 0; j < 4; ++j) hist[j][ys[j].value]++;
  });
  for (const auto& h : hist) {
    for (int c : h) EXPECT_EQ(c, 169);
  }
}

TEST(BuildGroup, ProducesConsistentState) {
  const PrimeField f(kMersenne31);
  RandomStream share_rng(5), lambda_rng(6), sss_rng(7);
  const auto specs = partition(12, 3);
  const auto global = shamir::split(f, Element{42}, shamir::SharingParams::sequential(8, 12), share_rng);
  const std::vector<Share> members(global.begin() + 4, global.begin() + 8);
  const GroupState g = build_group(f, specs[1], members, lambda_rng, sss_rng);
  EXPECT_EQ(g.sss_threshold, 4U);
  ASSERT_EQ(g.sss_shares.size(), 5U);
  EXPECT_EQ(g.external_subshare().x, Element{5});
  const Element y_lambda = shamir::recover(f, g.sss_shares, 4);
  const std::vector<Share> three(members.begin(), members.begin() + 3);
  EXPECT_EQ(repair_share(f, 4, three, {g.x_lambda, y_lambda}, members[3].x), members[3].y);
}

}  // namespace
}  // namespace lrss::repair

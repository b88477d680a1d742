#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "crg/common.hpp"
#include "crg/partitions.hpp"
#include "doctest.h"
#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace crg;
using testutil::Rng;

TEST_CASE("partition counts match the classical sequence") {
  const std::vector<int> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    auto parts = partitions_of(n);
    CHECK(static_cast<int>(parts.size()) == p[n]);
    std::set<Partition> seen;
    for (const auto& la : parts) {
      CHECK(size_of(la) == n);
      CHECK(std::is_sorted(la.begin(), la.end(), std::greater<int>()));
      for (int x : la) CHECK(x > 0);
      seen.insert(la);
    }
    CHECK(seen.size() == parts.size());
  }
}

TEST_CASE("bounded partitions respect the part cap") {
  for (int n = 0; n <= 8; ++n) {
    for (int cap = 1; cap <= n + 1; ++cap) {
      auto bounded = partitions_of(n, cap);
      int expected = 0;
      for (const auto& la : partitions_of(n)) {
        if (la.empty() || la.front() <= cap) ++expected;
      }
      CHECK(static_cast<int>(bounded.size()) == expected);
      for (const auto& la : bounded) {
        if (!la.empty()) CHECK(la.front() <= cap);
      }
    }
  }
}

TEST_CASE("multipartition enumeration is complete and duplicate-free") {
  const std::vector<std::tuple<int, int, int>> counts = {
      {2, 2, 5}, {3, 2, 10}, {2, 4, 14}, {3, 3, 22}, {4, 2, 20}};
  for (const auto& [r, k, want] : counts) {
    auto mps = multipartitions(r, k);
    CHECK(static_cast<int>(mps.size()) == want);
    std::set<MultiPartition> seen;
    for (const auto& mp : mps) {
      CHECK(static_cast<int>(mp.size()) == k);
      CHECK(size_of(mp) == r);
      seen.insert(mp);
    }
    CHECK(seen.size() == mps.size());
  }
}

TEST_CASE("shift round-trips and stacking inverts unstacking") {
  Rng rng(testutil::test_seed());
  for (int iter = 0; iter < 200; ++iter) {
    int k = rng.uniform(1, 6);
    int r = rng.uniform(0, 6);
    MultiPartition mp = testutil::random_label(rng, r, k);
    for (int d = 0; d <= k; ++d) {
      CHECK(shift_label(shift_label(mp, d), k - d) == mp);
    }
    int q = rng.uniform(1, 3);
    MultiPartition stacked = stack_label(mp, q);
    CHECK(static_cast<int>(stacked.size()) == k * q);
    CHECK(unstack_label(stacked, q) == mp);
    CHECK(shift_label(stacked, k) == stacked);
  }
  CHECK_THROWS_AS(unstack_label({{{2}}, {{1}}}, 2), not_divisible_error);
}

TEST_CASE("part scaling and its inverse") {
  Rng rng(testutil::test_seed() + 1);
  for (int iter = 0; iter < 100; ++iter) {
    Partition la = testutil::random_partition(rng, 10);
    int q = rng.uniform(1, 4);
    CHECK(q_unstar(q, q_star(q, la)) == la);
  }
  CHECK_THROWS_AS(q_unstar(2, {3, 2}), not_divisible_error);
}

TEST_CASE("beta sets reconstruct their partitions") {
  Rng rng(testutil::test_seed() + 2);
  for (int iter = 0; iter < 200; ++iter) {
    Partition la = testutil::random_partition(rng, 12);
    int p = std::vector<int>{2, 3, 5, 7}[rng.uniform(0, 3)];
    auto [beta, k] = beta_set(la, p);
    CHECK(static_cast<int>(beta.size()) == k);
    CHECK(k % p == 0);
    CHECK(k >= static_cast<int>(la.size()));
    Partition rebuilt;
    for (int i = 0; i < k; ++i) {
      int part = beta[i] - (k - 1 - i);
      CHECK(part >= 0);
      if (part > 0) rebuilt.push_back(part);
    }
    CHECK(rebuilt == la);
  }
}

TEST_CASE("frozen core, quotient, weight and sign samples") {
  for (const auto& s : oracle::core_quotient_samples()) {
    Partition la = testutil::partition_from_json(s.la);
    CoreQuotientData cq = core_quotient(la, s.p);
    CHECK(testutil::partition_json(cq.core) == s.core);
    CHECK(testutil::label_json(cq.quotient) == s.quotient);
    CHECK(cq.weight == s.weight);
    CHECK(cq.sign == s.sign);
  }
}

TEST_CASE("core and quotient round-trip on random partitions") {
  Rng rng(testutil::test_seed() + 3);
  for (int iter = 0; iter < 300; ++iter) {
    Partition la = testutil::random_partition(rng, 14);
    int p = std::vector<int>{2, 3, 5, 7}[rng.uniform(0, 3)];
    CoreQuotientData cq = core_quotient(la, p);
    CHECK(size_of(la) == size_of(cq.core) + p * cq.weight);
    CHECK(static_cast<int>(cq.quotient.size()) == p);
    CHECK(is_p_core(cq.core, p));
    CHECK(from_core_quotient(cq.core, cq.quotient, p) == la);
    CHECK((cq.sign == 1 || cq.sign == -1));
    // The core of a core is itself, with trivial quotient and sign.
    CoreQuotientData cq2 = core_quotient(cq.core, p);
    CHECK(cq2.core == cq.core);
    CHECK(cq2.weight == 0);
    CHECK(cq2.sign == 1);
  }
}

TEST_CASE("rim hook removal yields partitions of the reduced size") {
  Rng rng(testutil::test_seed() + 4);
  for (int iter = 0; iter < 200; ++iter) {
    Partition la = testutil::random_partition(rng, 12);
    int l = rng.uniform(0, 6);
    for (const auto& [nla, leg] : hooks_of_length(la, l)) {
      CHECK(size_of(nla) == size_of(la) - l);
      CHECK(std::is_sorted(nla.begin(), nla.end(), std::greater<int>()));
      CHECK(leg >= 0);
    }
    if (l == 0 && !la.empty()) {
      CHECK(hooks_of_length(la, 0).size() == 1);
    }
    // Length-1 hooks are exactly the removable corners.
    std::set<int> distinct(la.begin(), la.end());
    CHECK(hooks_of_length(la, 1).size() == distinct.size());
  }
  CHECK(hooks_of_length({}, 2).empty());
}

TEST_CASE("hook length formula on classical shapes") {
  CHECK(hook_length_count({}) == 1);
  CHECK(hook_length_count({5}) == 1);
  CHECK(hook_length_count({1, 1, 1, 1, 1}) == 1);
  CHECK(hook_length_count({3, 2}) == 5);
  CHECK(hook_length_count({2, 2, 1}) == 5);
  CHECK(hook_length_count({4, 2, 1}) == 35);
  CHECK(hook_length_count({3, 3, 3}) == 42);
  CHECK(hook_length_count({4, 3, 2, 1}) == 768);
}

TEST_CASE("squared tableau counts sum to the factorial") {
  for (int n = 0; n <= 7; ++n) {
    BigInt sum = 0;
    for (const auto& la : partitions_of(n)) {
      BigInt f = hook_length_count(la);
      sum += f * f;
    }
    CHECK(sum == factorial(n));
  }
}

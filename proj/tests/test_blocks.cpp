#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "crg/blocks.hpp"
#include "doctest.h"
#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace crg;
using testutil::Rng;

namespace {

std::string block_key(const MultiPartition& core, const std::vector<int>& w) {
  return testutil::label_json(core) + "|" + testutil::vec_json(w);
}

const NBlock& find_block(const std::vector<NBlock>& blocks,
                         const std::string& core, const std::string& weight,
                         bool defect_zero) {
  for (const auto& b : blocks) {
    if (testutil::label_json(b.core) == core &&
        testutil::vec_json(b.weight) == weight &&
        b.defect_zero == defect_zero) {
      return b;
    }
  }
  REQUIRE(false);
  return blocks.front();
}

}  // namespace

TEST_CASE("bad primes are rejected") {
  CHECK_THROWS_AS(g_blocks(2, 2, 2), bad_prime_error);
  CHECK_THROWS_AS(g_blocks(3, 2, 3), bad_prime_error);
  CHECK_THROWS_AS(g_blocks(2, 2, 9), bad_prime_error);
  CHECK_THROWS_AS(n_blocks(1, 2, 2, 4), bad_prime_error);
  CHECK_THROWS_AS(n_blocks(2, 2, 2, 2), bad_prime_error);
}

TEST_CASE("group block partitions match the frozen cases") {
  for (const auto& oc : oracle::g_blocks_cases()) {
    auto blocks = g_blocks(oc.de, oc.r, oc.p);
    REQUIRE(blocks.size() == oc.blocks.size());
    size_t total = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
      CHECK(testutil::label_json(blocks[i].core) == oc.blocks[i].core);
      CHECK(testutil::vec_json(blocks[i].weight) == oc.blocks[i].weight);
      int wsum = 0;
      for (int w : blocks[i].weight) wsum += w;
      CHECK(blocks[i].defect_zero == (wsum == 0));
      std::vector<std::string> members;
      for (const auto& m : blocks[i].members) {
        members.push_back(testutil::label_json(m));
        CHECK(block_label_g(m, oc.p) ==
              std::make_pair(blocks[i].core, blocks[i].weight));
      }
      std::sort(members.begin(), members.end());
      CHECK(members == oc.blocks[i].members);
      total += members.size();
      // The block contains exactly the labels built from its core and weight.
      auto enumerated = enumerate_block(blocks[i].core, blocks[i].weight, oc.p);
      std::set<MultiPartition> expect(enumerated.begin(), enumerated.end());
      CHECK(expect.size() == blocks[i].members.size());
      for (const auto& m : blocks[i].members) CHECK(expect.count(m));
    }
    CHECK(total == multipartitions(oc.r, oc.de).size());
  }
}

TEST_CASE("subgroup block partitions match the frozen cases") {
  for (const auto& oc : oracle::n_blocks_cases()) {
    auto blocks = n_blocks(oc.d, oc.e, oc.r, oc.p);
    REQUIRE(blocks.size() == oc.blocks.size());
    auto gb = g_blocks(oc.d * oc.e, oc.r, oc.p);
    for (size_t i = 0; i < blocks.size(); ++i) {
      CHECK(testutil::label_json(blocks[i].core) == oc.blocks[i].core);
      CHECK(testutil::vec_json(blocks[i].weight) == oc.blocks[i].weight);
      CHECK(blocks[i].defect_zero == oc.blocks[i].defect_zero);
      std::vector<std::string> members;
      for (const auto& [la, k] : blocks[i].members) {
        members.push_back(testutil::label_json(la) + "|" + std::to_string(k));
      }
      std::sort(members.begin(), members.end());
      CHECK(members == oc.blocks[i].members);
      std::vector<std::string> covered;
      for (int idx : blocks[i].covered_by) {
        REQUIRE(idx >= 0);
        REQUIRE(idx < static_cast<int>(gb.size()));
        covered.push_back(block_key(gb[idx].core, gb[idx].weight));
      }
      std::sort(covered.begin(), covered.end());
      auto expect_covered = oc.blocks[i].covered;
      std::sort(expect_covered.begin(), expect_covered.end());
      CHECK(covered == expect_covered);
    }
  }
}

TEST_CASE("every subgroup constituent appears in exactly one block") {
  for (auto [d, e, r, p] : std::vector<std::tuple<int, int, int, int>>{
           {1, 2, 4, 3}, {2, 2, 3, 3}, {1, 3, 3, 2}}) {
    auto blocks = n_blocks(d, e, r, p);
    std::set<std::pair<MultiPartition, int>> seen;
    for (const auto& b : blocks) {
      for (const auto& m : b.members) CHECK(seen.insert(m).second);
    }
    size_t expect = 0;
    for (const auto& rep : orbit_transversal(d, e, r)) {
      expect += stabilizer(d, e, rep).orbit_count;
    }
    CHECK(seen.size() == expect);
  }
}

TEST_CASE("quotient transplants match the frozen samples and invert") {
  for (const auto& s : oracle::psi_samples()) {
    MultiPartition la = testutil::label_from_json(s.la);
    MultiPartition gp = testutil::label_from_json(s.gammap);
    MultiPartition img = psi_label(la, gp, s.p);
    CHECK(testutil::label_json(img) == s.image);
    // Transplanting back onto the original cores restores the label.
    MultiPartition gamma;
    for (const auto& comp : la) gamma.push_back(core_quotient(comp, s.p).core);
    CHECK(psi_label(img, gamma, s.p) == la);
  }
  Rng rng(testutil::test_seed());
  for (int iter = 0; iter < 80; ++iter) {
    int k = rng.uniform(1, 4);
    int p = std::vector<int>{2, 3, 5}[rng.uniform(0, 2)];
    MultiPartition la = testutil::random_label(rng, rng.uniform(0, 7), k);
    MultiPartition gamma, gammap(k);
    for (const auto& comp : la) gamma.push_back(core_quotient(comp, p).core);
    MultiPartition img = psi_label(la, gammap, p);  // transplant onto empties
    CHECK(psi_label(img, gamma, p) == la);
    for (int c = 0; c < k; ++c) {
      CHECK(core_quotient(img[c], p).quotient ==
            core_quotient(la[c], p).quotient);
    }
  }
  CHECK_THROWS_AS(psi_label({{1}, {}}, {{}}, 3), weight_mismatch_error);
}

TEST_CASE("abacus signs multiply componentwise") {
  for (const auto& s : oracle::core_quotient_samples()) {
    Partition la = testutil::partition_from_json(s.la);
    CHECK(delta_p_sign({la}, s.p) == s.sign);
    CHECK(delta_p_sign({la, la}, s.p) == 1);
    CHECK(delta_p_sign({la, {}}, s.p) == s.sign);
  }
}

TEST_CASE("constituent labels cover shift-closed families") {
  for (auto [d, e, r] :
       std::vector<std::tuple<int, int, int>>{{1, 2, 3}, {1, 3, 3}}) {
    auto all = multipartitions(r, d * e);
    auto labels = irr_b_labels(d, e, all);
    size_t expect = 0;
    for (const auto& rep : orbit_transversal(d, e, r)) {
      expect += stabilizer(d, e, rep).orbit_count;
    }
    CHECK(labels.size() == expect);
    for (const auto& [rep, k] : labels) {
      CHECK(orbit_rep(rep, d) == rep);
      CHECK(k >= 0);
      CHECK(k < stabilizer(d, e, rep).orbit_count);
    }
  }
}

TEST_CASE("isometry tables match the frozen pairings") {
  for (const auto& pr : oracle::iso_pairs()) {
    auto src_blocks = n_blocks(pr.d, pr.e, pr.r, pr.p);
    auto dst_blocks = n_blocks(pr.d, pr.e, pr.rp, pr.p);
    const NBlock& src =
        find_block(src_blocks, pr.src_core, pr.src_weight, pr.defect_zero);
    const NBlock& dst =
        find_block(dst_blocks, pr.dst_core, pr.dst_weight, pr.defect_zero);
    IsometryTable iso = isometry(pr.d, pr.e, pr.p, pr.r, src, pr.rp, dst);
    CHECK(iso.defect_zero == pr.defect_zero);
    CHECK(testutil::label_json(iso.gamma) == pr.src_core);
    CHECK(testutil::vec_json(iso.weight) == pr.src_weight);
    REQUIRE(iso.entries.size() == pr.entries.size());
    std::map<std::pair<std::string, int>, const oracle::IsoEntry*> expect;
    for (const auto& oe : pr.entries) expect[{oe.src, oe.k}] = &oe;
    std::set<std::pair<std::string, int>> images;
    for (const auto& en : iso.entries) {
      auto it = expect.find({testutil::label_json(en.src), en.k});
      REQUIRE(it != expect.end());
      CHECK(en.sign == it->second->sign);
      CHECK(testutil::label_json(en.dst) == it->second->dst);
      CHECK(en.kk == it->second->kk);
      CHECK(images.insert({testutil::label_json(en.dst), en.kk}).second);
    }
    if (!pr.defect_zero) {
      // The label-level family is shift-closed and sign-consistent.
      for (const auto& [la, ps] : iso.label_map) {
        CHECK(stabilizer(pr.d, pr.e, la).b == stabilizer(pr.d, pr.e, ps).b);
        auto it = iso.label_map.find(shift_label(la, pr.d));
        REQUIRE(it != iso.label_map.end());
        CHECK(it->second == shift_label(ps, pr.d));
      }
    }
  }
}

TEST_CASE("incompatible block pairs are rejected") {
  auto b3 = n_blocks(1, 2, 3, 3);
  auto b4 = n_blocks(1, 2, 4, 3);
  const NBlock* pos3 = nullptr;
  const NBlock* zero4 = nullptr;
  for (const auto& b : b3) {
    if (!b.defect_zero) pos3 = &b;
  }
  for (const auto& b : b4) {
    if (b.defect_zero) zero4 = &b;
  }
  REQUIRE(pos3 != nullptr);
  REQUIRE(zero4 != nullptr);
  CHECK_THROWS_AS(isometry(1, 2, 3, 3, *pos3, 4, *zero4), mixed_defect_error);

  // Equal defect but different weights.
  auto b6 = n_blocks(1, 2, 6, 3);
  const NBlock* w2 = nullptr;
  for (const auto& b : b6) {
    int wsum = 0;
    for (int w : b.weight) wsum += w;
    if (wsum == 2) w2 = &b;
  }
  REQUIRE(w2 != nullptr);
  CHECK_THROWS_AS(isometry(1, 2, 3, 3, *pos3, 6, *w2), weight_mismatch_error);
}

TEST_CASE("trace-basis image signs depend on the unstacking order") {
  for (const auto& pr : oracle::iso_pairs()) {
    if (pr.defect_zero) continue;
    auto src_blocks = n_blocks(pr.d, pr.e, pr.r, pr.p);
    auto dst_blocks = n_blocks(pr.d, pr.e, pr.rp, pr.p);
    const NBlock& src =
        find_block(src_blocks, pr.src_core, pr.src_weight, false);
    const NBlock& dst =
        find_block(dst_blocks, pr.dst_core, pr.dst_weight, false);
    IsometryTable iso = isometry(pr.d, pr.e, pr.p, pr.r, src, pr.rp, dst);
    for (const auto& [la, ps] : iso.label_map) {
      int s0 = delta_image_sign(pr.d, pr.e, pr.p, la, ps, 0);
      CHECK(s0 == delta_p_sign(la, pr.p) * delta_p_sign(ps, pr.p));
      int C = stabilizer(pr.d, pr.e, la).orbit_count;
      for (int k = 0; k < C; ++k) {
        int s = delta_image_sign(pr.d, pr.e, pr.p, la, ps, k);
        CHECK((s == 1 || s == -1));
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <numeric>
#include <set>

#include "crg/wreath.hpp"
#include "doctest.h"
#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace crg;
using testutil::Rng;

namespace {

GroupElement random_element(Rng& rng, int de, int r) {
  GroupElement g;
  g.z.resize(r);
  for (auto& x : g.z) x = rng.uniform(0, de - 1);
  g.sigma.resize(r);
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  std::shuffle(g.sigma.begin(), g.sigma.end(), rng.raw());
  return g;
}

}  // namespace

TEST_CASE("group operations satisfy the axioms") {
  Rng rng(testutil::test_seed());
  for (auto [de, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 4}}) {
    GroupElement id = g_identity(de, r);
    for (int iter = 0; iter < 60; ++iter) {
      GroupElement a = random_element(rng, de, r);
      GroupElement b = random_element(rng, de, r);
      GroupElement c = random_element(rng, de, r);
      CHECK(g_mul(de, a, g_mul(de, b, c)) == g_mul(de, g_mul(de, a, b), c));
      CHECK(g_mul(de, a, id) == a);
      CHECK(g_mul(de, id, a) == a);
      CHECK(g_mul(de, a, g_inv(de, a)) == id);
      CHECK(g_mul(de, g_inv(de, a), a) == id);
      CHECK(g_conj(de, id, a) == a);
      // Conjugation preserves the cycle structure and the order.
      CHECK(cycle_structure(de, g_conj(de, b, a)) == cycle_structure(de, a));
      CHECK(element_order(de, g_conj(de, b, a)) == element_order(de, a));
      long long n = element_order(de, a);
      GroupElement pw = id;
      for (long long i = 0; i < n; ++i) pw = g_mul(de, pw, a);
      CHECK(pw == id);
    }
  }
}

TEST_CASE("class representatives land in their own class") {
  Rng rng(testutil::test_seed() + 1);
  for (auto [de, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 2}}) {
    BigInt total = 0;
    for (const auto& eta : multipartitions(r, de)) {
      GroupElement g = class_rep(de, eta, r);
      CHECK(cycle_structure(de, g) == eta);
      total += group_order(de, r) / centralizer_order_g(de, eta);
    }
    CHECK(total == group_order(de, r));
    for (int iter = 0; iter < 40; ++iter) {
      GroupElement a = random_element(rng, de, r);
      CycleStructure eta = cycle_structure(de, a);
      CHECK(size_of(eta) == r);
      CHECK(cycle_structure(de, class_rep(de, eta, r)) == eta);
    }
  }
}

TEST_CASE("symmetric group character table at rank four") {
  // de = 1 reduces to S_r; the classical table pins the recursion.
  auto val = [](const Partition& la, const Partition& eta) {
    Cyc v = character_value(1, {la}, {eta}, 1);
    REQUIRE(v.is_rational());
    return v.rational_value();
  };
  const std::vector<Partition> classes = {
      {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const std::map<Partition, std::vector<int>> expected = {
      {{4}, {1, 1, 1, 1, 1}},
      {{3, 1}, {3, 1, -1, 0, -1}},
      {{2, 2}, {2, 0, 2, -1, 0}},
      {{2, 1, 1}, {3, -1, -1, 0, 1}},
      {{1, 1, 1, 1}, {1, -1, 1, 1, -1}}};
  for (const auto& [la, row] : expected) {
    for (size_t i = 0; i < classes.size(); ++i) {
      CHECK(val(la, classes[i]) == Rat(row[i]));
    }
  }
}

TEST_CASE("frozen wreath character tables") {
  for (const oracle::GTable* ot : {&oracle::g_table_3_2(), &oracle::g_table_2_3()}) {
    GCharacterTable t = character_table_g(ot->de, ot->r);
    REQUIRE(t.irreps.size() == ot->labels.size());
    REQUIRE(t.classes.size() == ot->classes.size());
    std::map<std::string, int> row_of, col_of;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
      row_of[testutil::label_json(t.irreps[i])] = static_cast<int>(i);
    }
    for (size_t j = 0; j < t.classes.size(); ++j) {
      col_of[testutil::label_json(t.classes[j])] = static_cast<int>(j);
    }
    for (size_t i = 0; i < ot->labels.size(); ++i) {
      REQUIRE(row_of.count(ot->labels[i]));
      for (size_t j = 0; j < ot->classes.size(); ++j) {
        REQUIRE(col_of.count(ot->classes[j]));
        int r = row_of[ot->labels[i]];
        int c = col_of[ot->classes[j]];
        CHECK(testutil::cyc_string(t.values[r][c]) == ot->values[i][j]);
        CHECK(testutil::bigint_string(t.centralizer_orders[c]) ==
              ot->centralizers[j]);
      }
    }
  }
}

TEST_CASE("models satisfy the defining relations and dimension count") {
  for (auto [de, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    BigInt total = 0;
    for (const auto& la : multipartitions(r, de)) {
      IrrepModel model(de, la, de);
      CHECK(check_defining_relations(model));
      CHECK(BigInt(model.dim()) == wreath_dim(la));
      total += BigInt(model.dim()) * BigInt(model.dim());
    }
    CHECK(total == group_order(de, r));
  }
}

TEST_CASE("model action is a homomorphism") {
  Rng rng(testutil::test_seed() + 2);
  for (auto [de, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    for (const auto& la : multipartitions(r, de)) {
      IrrepModel model(de, la, de);
      GroupElement a = random_element(rng, de, r);
      GroupElement b = random_element(rng, de, r);
      CHECK(mat_equal(model.rep_matrix(g_mul(de, a, b)),
                      mat_mul(model.rep_matrix(a), model.rep_matrix(b))));
      CHECK(mat_equal(model.rep_matrix(g_identity(de, r)),
                      mat_identity(model.dim(), de)));
    }
  }
}

TEST_CASE("model traces agree with the character recursion") {
  for (auto [de, r] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
    auto classes = multipartitions(r, de);
    for (const auto& la : multipartitions(r, de)) {
      IrrepModel model(de, la, de);
      for (const auto& eta : classes) {
        CHECK(model.trace(class_rep(de, eta, r)) ==
              character_value(de, la, eta, de));
      }
    }
  }
}

TEST_CASE("multitableau model is isomorphic to the induced model") {
  for (int de : {2, 3}) {
    for (const auto& la : multipartitions(2, de)) {
      CHECK(mm_isomorphism_check(de, la));
    }
  }
  // Standard multitableaux are counted by the model dimension.
  for (const auto& la : multipartitions(3, 2)) {
    CHECK(BigInt(multitableaux(la).size()) == wreath_dim(la));
  }
}

TEST_CASE("set tuple bookkeeping round-trips") {
  Rng rng(testutil::test_seed() + 3);
  for (int iter = 0; iter < 100; ++iter) {
    int de = rng.uniform(1, 4);
    int r = rng.uniform(1, 6);
    MultiPartition la = testutil::random_label(rng, r, de);
    std::vector<int> comp = composition_of(la);
    CHECK(std::accumulate(comp.begin(), comp.end(), 0) == r);
    std::vector<int> tau(r);
    std::iota(tau.begin(), tau.end(), 0);
    std::shuffle(tau.begin(), tau.end(), rng.raw());
    auto [x, locals] = decompose_perm(tau, comp);
    std::vector<int> tx = coset_rep(x, r);
    // tau = tx composed with the block-local permutations.
    int base = 0;
    for (size_t c = 0; c < comp.size(); ++c) {
      CHECK(std::is_sorted(x[c].begin(), x[c].end()));
      for (int i = 0; i < comp[c]; ++i) {
        CHECK(tau[base + i] == tx[base + locals[c][i]]);
      }
      base += comp[c];
    }
  }
}

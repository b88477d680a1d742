// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout.  Exit status is zero exactly when every criterion passes.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crg/perfiso.hpp"
#include "crg/selftest.hpp"
#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace crg;

namespace {

// 1. Every irreducible model of G(de,1,r) satisfies the defining relations
//    and the squared dimensions add up to the group order.
bool criterion_relations_dimensions() {
  for (int de : {2, 3, 4, 6}) {
    for (int r = 1; r <= 4; ++r) {
      BigInt sq = 0;
      for (const auto& la : multipartitions(r, de)) {
        const IrrepModel model(de, la, de);
        if (BigInt(model.dim()) != wreath_dim(la)) return false;
        if (!check_defining_relations(model)) return false;
        sq += wreath_dim(la) * wreath_dim(la);
      }
      if (sq != group_order(de, r)) return false;
    }
  }
  return true;
}

// 2. The induced model and the multitableau model are explicitly isomorphic.
bool criterion_model_equivalence() {
  for (int de = 1; de <= 4; ++de)
    for (const auto& la : multipartitions(3, de))
      if (!mm_isomorphism_check(de, la)) return false;
  return true;
}

// 3. The production twisted-trace formula agrees with the organized trace of
//    the intertwined model on entire groups (dimension-capped for the big
//    rank-six case).
bool criterion_delta_agreement() {
  struct Case {
    int d, e, r;
  };
  for (const Case& cs : {Case{2, 2, 2}, Case{2, 3, 3}, Case{1, 3, 3},
                         Case{2, 3, 6}}) {
    const int de = cs.d * cs.e;
    const auto classes = n_classes(cs.d, cs.e, cs.r);
    std::vector<GroupElement> reps;
    reps.reserve(classes.size());
    for (const auto& cl : classes)
      reps.push_back(n_class_rep(cs.d, cs.e, cs.r, cl.eta, cl.j));
    for (const auto& la : orbit_transversal(cs.d, cs.e, cs.r)) {
      if (wreath_dim(la) > BigInt(60)) continue;
      const GederModel model(cs.d, cs.e, la, de);
      for (int k = 0; k < model.extension_count(); ++k)
        for (std::size_t c = 0; c < classes.size(); ++c) {
          const Cyc fast = delta_fast(cs.d, cs.e, la, k, classes[c].eta,
                                      classes[c].j, de);
          if (!(fast == model.delta_trace(reps[c], k))) return false;
        }
    }
  }
  return true;
}

// 4. Worked rank-six example: the twisted traces at the six-cycle class with
//    cycle product -1 are three times a rank-two trace, for both powers of
//    the intertwiner, with the expected dimensions and values.
bool criterion_worked_example() {
  const CycleStructure eta = {{}, {}, {}, {6}, {}, {}};
  const GroupElement gq{{1, 0}, {1, 0}};
  for (const auto& s : oracle::g616_samples()) {
    const MultiPartition mu = testutil::label_from_json(s.mu);
    const MultiPartition la = stack_label(mu, 3);
    if (wreath_dim(la) != BigInt(s.dim)) return false;
    const Cyc f1 = delta_fast(2, 3, la, 1, eta, 0, 6);
    const Cyc f2 = delta_fast(2, 3, la, 2, eta, 0, 6);
    if (testutil::cyc_string(f1) != s.value) return false;
    if (!(f1 == f2)) return false;
    const IrrepModel small(2, mu, 6);
    if (!(f1 == small.trace(gq) * Rat(3))) return false;
  }
  return true;
}

// 5. Class counting three ways plus both orthogonality relations on the
//    full subgroup character tables.
bool criterion_classes_orthogonality() {
  struct Case {
    int d, e;
  };
  for (const Case& cs : {Case{1, 2}, Case{1, 3}, Case{2, 2}, Case{2, 3}}) {
    const int de = cs.d * cs.e;
    for (int r = 1; r <= 5; ++r) {
      const auto classes = n_classes(cs.d, cs.e, r);
      std::size_t char_count = 0;
      for (const auto& la : orbit_transversal(cs.d, cs.e, r))
        char_count += stabilizer(cs.d, cs.e, la).orbit_count;
      if (char_count != classes.size()) return false;

      if (r % cs.e == 0) {
        std::vector<std::pair<CycleStructure, int>> flat;
        flat.reserve(classes.size());
        for (const auto& cl : classes) flat.emplace_back(cl.eta, cl.j);
        std::sort(flat.begin(), flat.end());
        if (flat != classes_geder_param(cs.d, cs.e, r)) return false;
      }

      const NCharacterTable tab = character_table_n(cs.d, cs.e, r, 1);
      const BigInt order = group_order(de, r) / cs.e;
      const int nc = static_cast<int>(tab.classes.size());
      const int nl = static_cast<int>(tab.labels.size());
      std::vector<Cyc> class_sizes;
      class_sizes.reserve(nc);
      for (int j = 0; j < nc; ++j)
        class_sizes.push_back(
            Cyc::from_rat(Rat(order / tab.centralizer_orders[j])));
      for (int i = 0; i < nl; ++i)
        for (int i2 = i; i2 < nl; ++i2) {
          Cyc sum = Cyc::zero(de);
          for (int j = 0; j < nc; ++j)
            sum = sum +
                  class_sizes[j] * tab.values[i][j] * tab.values[i2][j].conj();
          const Cyc expect =
              (i == i2) ? Cyc::from_rat(Rat(order)) : Cyc::zero(de);
          if (!(sum == expect)) return false;
        }
      for (int j = 0; j < nc; ++j)
        for (int j2 = j; j2 < nc; ++j2) {
          Cyc sum = Cyc::zero(de);
          for (int i = 0; i < nl; ++i)
            sum = sum + tab.values[i][j] * tab.values[i][j2].conj();
          const Cyc expect = (j == j2)
                                 ? Cyc::from_rat(Rat(tab.centralizer_orders[j]))
                                 : Cyc::zero(de);
          if (!(sum == expect)) return false;
        }
    }
  }
  return true;
}

// 6. Doubled-rank split-class formula: on G(2,2,2r), the two extensions of a
//    doubled label differ from half the big-group value by +-2^l times a
//    symmetric-group character value, with the plus sign exactly when the
//    extension index matches the class index.
bool criterion_split_formula() {
  for (int half = 1; half <= 3; ++half) {
    const int m = 2 * half;
    const auto classes = n_classes(1, 2, m);
    for (const auto& mu : partitions_of(half)) {
      const MultiPartition la = stack_label({mu}, 2);
      if (stabilizer(1, 2, la).orbit_count != 2) return false;
      for (const auto& cl : classes) {
        const Cyc big = character_value(2, la, cl.eta, 2);
        for (int k = 0; k < 2; ++k) {
          const Cyc actual = chi_value(1, 2, la, k, cl.eta, cl.j, 2);
          Cyc expect = Cyc::zero(2);
          if (cl.split == 2) {
            if (!cl.eta[1].empty()) return false;
            Partition halved;
            for (int part : cl.eta[0]) {
              if (part % 2 != 0) return false;
              halved.push_back(part / 2);
            }
            const Cyc small = character_value(1, {mu}, {halved}, 2);
            const long long power = 1LL << halved.size();
            const long long signed_power = (k == cl.j) ? power : -power;
            expect = (big + small * Rat(signed_power)) * Rat(1, 2);
          } else {
            expect = big * Rat(1, 2);
          }
          if (!(actual == expect)) return false;
        }
      }
    }
  }
  return true;
}

// 7. Combinatorial blocks equal the congruence fibers of the central
//    characters reduced to the finite field, on both the full groups and the
//    index-e subgroups.
bool criterion_block_oracle() {
  for (int p : {3, 5}) {
    for (int de = 1; de <= 4; ++de) {
      if (de % p == 0) continue;
      for (int r = 1; r <= 4; ++r) {
        const auto blocks = g_blocks(de, r, p);
        const auto labels = multipartitions(r, de);
        std::map<MultiPartition, int> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
          index[labels[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> predicted;
        predicted.reserve(blocks.size());
        for (const auto& b : blocks) {
          std::vector<int> part;
          part.reserve(b.members.size());
          for (const auto& la : b.members) part.push_back(index.at(la));
          predicted.push_back(std::move(part));
        }
        if (canonical_partition(predicted) !=
            central_character_fibers_g(de, r, p))
          return false;
      }
    }
    for (const auto& [d, e] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 3}, {2, 2}, {1, 4}}) {
      if ((d * e) % p == 0) continue;
      for (int r = 1; r <= 4; ++r) {
        const auto blocks = n_blocks(d, e, r, p);
        std::map<std::pair<MultiPartition, int>, int> index;
        int next = 0;
        for (const auto& la : orbit_transversal(d, e, r)) {
          const int csize = stabilizer(d, e, la).orbit_count;
          for (int k = 0; k < csize; ++k) index[{la, k}] = next++;
        }
        std::vector<std::vector<int>> predicted;
        predicted.reserve(blocks.size());
        for (const auto& b : blocks) {
          std::vector<int> part;
          part.reserve(b.members.size());
          for (const auto& lab : b.members) part.push_back(index.at(lab));
          predicted.push_back(std::move(part));
        }
        if (canonical_partition(predicted) !=
            central_character_fibers_n(d, e, r, p))
          return false;
      }
    }
  }
  return true;
}

// 8. Every pairable pair of equal-weight positive-defect blocks across ranks
//    up to five verifies perfectly including the classwise decomposition, and
//    every pair of defect-zero blocks passes the two value conditions.
bool criterion_block_pairings() {
  long long positive_pairs = 0;
  long long defect_zero_pairs = 0;
  struct Case {
    int d, e;
  };
  for (const Case& cs : {Case{1, 2}, Case{1, 3}, Case{2, 2}}) {
    const int de = cs.d * cs.e;
    for (int p : {3, 5}) {
      if (de % p == 0) continue;
      std::vector<std::vector<NBlock>> by_rank(6);
      for (int r = 1; r <= 5; ++r) by_rank[r] = n_blocks(cs.d, cs.e, r, p);
      auto total_weight = [](const NBlock& b) {
        int t = 0;
        for (int w : b.weight) t += w;
        return t;
      };
      for (int r = 1; r <= 5; ++r)
        for (int r2 = 1; r2 <= 5; ++r2)
          for (const auto& src : by_rank[r])
            for (const auto& dst : by_rank[r2]) {
              if (src.defect_zero != dst.defect_zero) continue;
              if (src.defect_zero) {
                const VerificationReport rep = verify_isometry(
                    cs.d, cs.e, p, r, src, r2, dst, true, 1);
                if (rep.overall != "PASS") return false;
                if (rep.slice != "SKIPPED") return false;
                ++defect_zero_pairs;
                continue;
              }
              if (total_weight(src) != total_weight(dst)) continue;
              try {
                (void)isometry(cs.d, cs.e, p, r, src, r2, dst);
              } catch (const weight_mismatch_error&) {
                continue;  // weights are not twist-aligned: not a valid pair
              }
              const VerificationReport rep =
                  verify_isometry(cs.d, cs.e, p, r, src, r2, dst, true, 1);
              if (rep.overall != "PASS") return false;
              if (rep.condition1 != "PASS" || rep.condition2 != "PASS")
                return false;
              if (rep.slice != "PASS") return false;
              ++positive_pairs;
            }
    }
  }
  return positive_pairs > 0 && defect_zero_pairs > 0;
}

// 9. The seeded invariant suites report no failures.
bool criterion_selftest() {
  std::ostringstream sink;
  return run_selftest(20260814ULL, sink) == 0;
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    std::function<bool()> fn;
  };
  const std::vector<Item> items = {
      {"criterion 1 (relations and dimensions)", criterion_relations_dimensions},
      {"criterion 2 (model equivalence)", criterion_model_equivalence},
      {"criterion 3 (twisted trace agreement)", criterion_delta_agreement},
      {"criterion 4 (worked rank-six example)", criterion_worked_example},
      {"criterion 5 (class counts and orthogonality)",
       criterion_classes_orthogonality},
      {"criterion 6 (doubled-label split formula)", criterion_split_formula},
      {"criterion 7 (central-character block oracle)", criterion_block_oracle},
      {"criterion 8 (block pairing sweep)", criterion_block_pairings},
      {"criterion 9 (seeded selftest)", criterion_selftest},
  };
  int failures = 0;
  for (const auto& item : items) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = item.fn();
    } catch (const std::exception& ex) {
      ok = false;
      note = ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s: %s [%.1fs]%s%s\n", item.name, ok ? "PASS" : "FAIL", secs,
                note.empty() ? "" : " ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "crg/cyclotomic.hpp"
#include "crg/partitions.hpp"
#include "crg/tableaux.hpp"

namespace crg {

// Element (z; sigma) of G(de,1,r): z holds exponents in Z/de, sigma is a
// 0-based one-line permutation.  Multiplication follows
// (z; s)(w; t) = ((z_i + w_{s^{-1}(i)})_i ; s o t).
struct GroupElement {
  std::vector<int> z;
  std::vector<int> sigma;
  bool operator==(const GroupElement& o) const = default;
  bool operator<(const GroupElement& o) const {
    return std::tie(z, sigma) < std::tie(o.z, o.sigma);
  }
};

GroupElement g_identity(int de, int r);
GroupElement g_mul(int de, const GroupElement& a, const GroupElement& b);
GroupElement g_inv(int de, const GroupElement& a);
// g x g^{-1}
GroupElement g_conj(int de, const GroupElement& g, const GroupElement& x);
long long element_order(int de, const GroupElement& g);

// Cyclic structure: component u collects the lengths of the cycles whose
// cycle product is zeta^u.
using CycleStructure = MultiPartition;

CycleStructure cycle_structure(int de, const GroupElement& g);

// Convention representative: cycles laid out consecutively, colors ascending
// and parts descending, with the color exponent placed at each cycle start.
GroupElement class_rep(int de, const CycleStructure& eta, int r);

BigInt group_order(int de, int r);
BigInt centralizer_order_g(int de, const CycleStructure& eta);

// Tuple X of disjoint sorted blocks partitioning {0..r-1}; block i has the
// size of the i-th label component.
using SetTuple = std::vector<std::vector<int>>;

std::vector<int> composition_of(const MultiPartition& la);
// One-line permutation t_X mapping block-contiguous positions to X.
std::vector<int> coset_rep(const SetTuple& x, int r);
// Unique factorization tau = t_X * (per-block local permutations).
std::pair<SetTuple, std::vector<std::vector<int>>> decompose_perm(
    const std::vector<int>& tau, const std::vector<int>& comp);

// Dimension of the irreducible labeled by la without building the model.
BigInt wreath_dim(const MultiPartition& la);

// Induced model of the irreducible G(de,1,r)-module labeled by a
// de-multipartition: basis indexed by (X, tuple of standard tableaux),
// generators act through seminormal Specht matrices twisted by the
// block-permutation bookkeeping.
class IrrepModel {
 public:
  IrrepModel(int de, MultiPartition la, int conductor);

  int de() const { return de_; }
  int rank() const { return r_; }
  int conductor() const { return cond_; }
  int dim() const { return dim_; }
  const MultiPartition& label() const { return la_; }
  const std::vector<std::pair<SetTuple, std::vector<Tableau>>>& basis() const {
    return basis_;
  }

  int basis_index(const SetTuple& x, const std::vector<Tableau>& ts) const;

  // Sparse image of basis vector idx under rho(g): column of the matrix.
  std::map<int, Cyc> act(const GroupElement& g, int idx) const;
  // Image of a sparse vector.
  std::map<int, Cyc> act(const GroupElement& g,
                         const std::map<int, Cyc>& v) const;

  CMat rep_matrix(const GroupElement& g) const;
  Cyc trace(const GroupElement& g) const;

  // Cached seminormal matrix of a local permutation on component comp.
  const CMat& specht(int comp, const std::vector<int>& w) const;
  const std::vector<Tableau>& component_tableaux(int comp) const {
    return sts_[comp];
  }
  int component_tableau_index(int comp, const Tableau& t) const;

 protected:
  int de_, r_, cond_, dim_;
  MultiPartition la_;
  std::vector<int> comp_;
  std::vector<std::pair<SetTuple, std::vector<Tableau>>> basis_;
  std::map<std::pair<SetTuple, std::vector<Tableau>>, int> index_;
  std::vector<std::vector<Tableau>> sts_;
  std::vector<std::map<Tableau, int>> st_index_;
  mutable std::map<std::pair<int, std::vector<int>>, CMat> specht_cache_;
  mutable std::mutex specht_mutex_;
};

// All defining relations of G(de,1,r) hold in the model: t^de = 1, the
// s_i are involutive braids, distant generators commute, and ts_1ts_1 =
// s_1ts_1t.
bool check_defining_relations(const IrrepModel& model);

// Standard multitableaux of shape la with global entries 0..r-1 (the second
// matrix model's basis).
using MultiTableau = std::vector<Tableau>;
std::vector<MultiTableau> multitableaux(const MultiPartition& la);

// Builds the direct action on standard multitableaux and the basis map into
// the induced model, and checks that the map intertwines all generators.
bool mm_isomorphism_check(int de, const MultiPartition& la);

// chi-tilde at the convention class representative, by a memoized
// color-refined Murnaghan-Nakayama recursion (production character path).
Cyc character_value(int de, const MultiPartition& la, const CycleStructure& eta,
                    int conductor);

struct GCharacterTable {
  int de = 1;
  int r = 0;
  int conductor = 1;
  std::vector<CycleStructure> classes;
  std::vector<BigInt> centralizer_orders;
  std::vector<MultiPartition> irreps;
  std::vector<std::vector<Cyc>> values;  // [irrep][class]
};

GCharacterTable character_table_g(int de, int r, int threads = 1);

}  // namespace crg

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crg/wreath.hpp"

namespace crg {

// The subgroup G(de,e,r) of index e in G(de,1,r): elements whose diagonal
// exponent sum vanishes mod e.

int eps_exp(int d, int e, const GroupElement& g);
Cyc epsilon_value(int d, int e, const GroupElement& g, int conductor);
bool is_member(int d, int e, const GroupElement& g);

// Smallest b | e such that shifting the label components by d*b fixes it,
// together with the size e/b of the stabilizer of the label under the
// twisting character.
struct StabilizerData {
  int b = 1;
  int orbit_count = 1;  // e/b: number of extensions of the restriction
};
StabilizerData stabilizer(int d, int e, const MultiPartition& la);

// Conjugating element used to index the split classes: a canonical element
// whose twisting-character value is a primitive e-th root of unity, of order
// e when one exists (kind records which search stage produced it).
struct ConjugatingElement {
  GroupElement g;
  std::string kind;
  long long order = 1;
};
ConjugatingElement find_gfrak(int d, int e, int r);

// Number of subgroup classes a G-class meets: gcd of e with all occupied
// colors and all cycle lengths.
int split_count(int e, const CycleStructure& eta);

struct NClassLabel {
  CycleStructure eta;
  int j = 0;
  int split = 1;
  bool operator==(const NClassLabel&) const = default;
};

std::vector<NClassLabel> n_classes(int d, int e, int r);
GroupElement n_class_rep(int d, int e, int r, const CycleStructure& eta, int j);
BigInt centralizer_order_n(int d, int e, const CycleStructure& eta);
bool class_p_singular(const CycleStructure& eta, int p);

// Alternative parameterization of the subgroup classes (requires nothing of
// r); used as a counting cross-check.
std::vector<std::pair<CycleStructure, int>> classes_geder_param(int d, int e,
                                                                int r);

// Lexicographically least label in the shift orbit of la under steps of d.
MultiPartition orbit_rep(const MultiPartition& la, int d);
std::vector<MultiPartition> orbit_transversal(int d, int e, int r);

// Induced model together with the order-C twisting intertwiner M that
// permutes the basis by rotating block tuples and tableaux by d*b positions.
class GederModel : public IrrepModel {
 public:
  GederModel(int d, int e, MultiPartition la, int conductor);

  int d() const { return d_; }
  int e() const { return e_; }
  int b() const { return b_; }
  int extension_count() const { return csize_; }

  // Basis index after applying M^k.
  int m_image(int idx, int k) const;
  // Exact trace of M^k rho(g), organized block-tuple by block-tuple.
  Cyc delta_trace(const GroupElement& g, int k) const;
  // Same trace assembled entry by entry from the sparse action (slow path,
  // used to validate the organized one).
  Cyc delta_trace_direct(const GroupElement& g, int k) const;
  // M rho(g) M^{-1} == omega^{b*eps(g)} rho(g), checked columnwise.
  bool intertwine_holds(const GroupElement& g) const;

 private:
  int d_ = 1, e_ = 1, b_ = 1, csize_ = 1;
};

// Trace of M^k at the class representative indexed by (eta, j), evaluated
// through the character recursion on a stacked restriction (production path).
Cyc delta_fast(int d, int e, const MultiPartition& la, int k,
               const CycleStructure& eta, int j, int conductor);

// Irreducible subgroup character value at (eta, j) for the k-th extension of
// the orbit of la.
Cyc chi_value(int d, int e, const MultiPartition& la, int k,
              const CycleStructure& eta, int j, int conductor);

struct NCharacterTable {
  int d = 1, e = 1, r = 0, conductor = 1;
  std::vector<std::pair<MultiPartition, int>> labels;
  std::vector<NClassLabel> classes;
  std::vector<BigInt> centralizer_orders;
  std::vector<std::vector<Cyc>> values;  // [label][class]
};

NCharacterTable character_table_n(int d, int e, int r, int threads = 1);

}  // namespace crg

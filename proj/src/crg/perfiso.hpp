#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crg/blocks.hpp"
#include "crg/fq.hpp"

namespace crg {

// Character data of one side of a block pairing: the subgroup's full class
// list and the value rows of the requested irreducible labels.
struct PairingSide {
  int d = 1, e = 1, r = 0, conductor = 1;
  std::vector<NClassLabel> classes;
  std::vector<BigInt> centralizers;
  std::vector<std::pair<MultiPartition, int>> labels;
  std::map<std::pair<MultiPartition, int>, int> label_index;
  std::vector<std::vector<Cyc>> values;  // [label][class]
};

PairingSide block_side_values(
    int d, int e, int r,
    const std::vector<std::pair<MultiPartition, int>>& labels, int conductor,
    int threads);

struct CellRef {
  int row = 0;
  int col = 0;
  std::string reason;
};

struct VerificationReport {
  IsometryTable iso;
  PairingSide src_side, dst_side;
  std::vector<std::vector<Cyc>> ihat;  // [source class][target class]
  std::string condition1;              // PASS or INDETERMINATE
  std::string condition2;              // PASS or FAIL
  std::string slice;                   // PASS, FAIL or SKIPPED
  std::string overall;                 // PASS, INDETERMINATE or FAIL
  std::vector<CellRef> witnesses_condition1;
  std::vector<CellRef> witnesses_condition2;
  std::vector<CellRef> witnesses_slice;
};

// Pairs two subgroup blocks, computes the indicator values
//   ihat(x, x') = sum over mapped characters of sign * conj(chi(x)) * chi'(x'),
// and checks: (1) every value is an algebraic integer divisible by the p-parts
// of both centralizer orders (failures are witnessed and make the result
// INDETERMINATE); (2) ihat vanishes between
// classes of different p-singularity (a violation is a FAIL); and, for blocks
// of positive defect when requested, the classwise decomposition of e*ihat
// into stacked-restriction contributions.
VerificationReport verify_isometry(int d, int e, int p, int r,
                                   const NBlock& src, int r2, const NBlock& dst,
                                   bool with_slices, int threads);

// Classwise decomposition identity for one cell (positive defect only).
bool slice_check(const IsometryTable& iso, const NClassLabel& x,
                 const NClassLabel& xp, const Cyc& ihat_value, int conductor);

// Independent mod-p block oracles: labels are grouped by the reduction of
// their central character. Returned as a canonical partition of row indices
// (each part sorted, parts ordered by first element).
std::vector<std::vector<int>> central_character_fibers_g(int de, int r, int p);
std::vector<std::vector<int>> central_character_fibers_n(int d, int e, int r,
                                                         int p);
std::vector<std::vector<int>> canonical_partition(
    std::vector<std::vector<int>> parts);

}  // namespace crg

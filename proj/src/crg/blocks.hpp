#pragma once

#include <map>
#include <utility>
#include <vector>

#include "crg/geder.hpp"

namespace crg {

// p-block combinatorics for the wreath product and its index-e subgroup,
// via componentwise p-cores and p-weights.

// Componentwise (p-core, p-weight) of a label.
std::pair<MultiPartition, std::vector<int>> block_label_g(
    const MultiPartition& la, int p);

struct GBlock {
  MultiPartition core;
  std::vector<int> weight;
  bool defect_zero = false;
  std::vector<MultiPartition> members;
};

struct NBlock {
  MultiPartition core;     // least (core, weight) in the shift orbit
  std::vector<int> weight;
  bool defect_zero = false;
  std::vector<std::pair<MultiPartition, int>> members;  // (orbit rep, k)
  std::vector<int> covered_by;  // indices into g_blocks(de, r, p)
};

std::vector<GBlock> g_blocks(int de, int r, int p);
std::vector<NBlock> n_blocks(int d, int e, int r, int p);

// All labels with the given componentwise cores and weights.
std::vector<MultiPartition> enumerate_block(const MultiPartition& gamma,
                                            const std::vector<int>& weight,
                                            int p);

// Transplants the componentwise p-quotient of la onto the core tuple gammap.
MultiPartition psi_label(const MultiPartition& la, const MultiPartition& gammap,
                         int p);

// Product of the componentwise abacus signs.
int delta_p_sign(const MultiPartition& la, int p);

// Subgroup constituents (orbit rep, k) of a set of group labels.
std::vector<std::pair<MultiPartition, int>> irr_b_labels(
    int d, int e, const std::vector<MultiPartition>& labels);

// Label-level bijection on the full shift-closed family of group labels
// over the block of (gamma, weight), transplanting onto the matching shifts
// of gammap.
std::map<MultiPartition, MultiPartition> saturate_block(
    int d, int e, int p, const MultiPartition& gamma,
    const std::vector<int>& weight, const MultiPartition& gammap);

struct IsometryEntry {
  MultiPartition src;
  int k = 0;
  int sign = 1;
  MultiPartition dst;
  int kk = 0;
};

struct IsometryTable {
  int d = 1, e = 1, p = 2;
  int r = 0, r2 = 0;
  bool defect_zero = false;
  MultiPartition gamma, gammap;  // gammap already aligned to gamma's weights
  std::vector<int> weight;
  std::map<MultiPartition, MultiPartition> label_map;  // full family
  std::vector<IsometryEntry> entries;
};

// Signed bijection between the constituents of two equal-weight subgroup
// blocks (or the unique pairing when both have defect zero).
IsometryTable isometry(int d, int e, int p, int r, const NBlock& src, int r2,
                       const NBlock& dst);

// Sign attached to the image of the k-twisted trace function: the abacus
// signs of the q-fold unstackings, q = C/gcd(C,k).
int delta_image_sign(int d, int e, int p, const MultiPartition& la,
                     const MultiPartition& psila, int k);

}  // namespace crg

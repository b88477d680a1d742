#pragma once

#include <utility>
#include <vector>

#include "crg/common.hpp"

namespace crg {

// A partition is a weakly decreasing vector of positive parts; the empty
// partition is {}.  A multipartition is a fixed-length tuple of partitions.
using Partition = std::vector<int>;
using MultiPartition = std::vector<Partition>;

inline int size_of(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline int size_of(const MultiPartition& mp) {
  int s = 0;
  for (const auto& p : mp) s += size_of(p);
  return s;
}

// Total number of parts across all components.
inline int total_length(const MultiPartition& mp) {
  int s = 0;
  for (const auto& p : mp) s += static_cast<int>(p.size());
  return s;
}

// All partitions of n with parts <= maxpart, first part descending.
std::vector<Partition> partitions_of(int n, int maxpart);
std::vector<Partition> partitions_of(int n);

// All k-tuples of partitions with total size r; the first component's size
// runs from r down to 0, recursively.
std::vector<MultiPartition> multipartitions(int r, int k);

// (q*pi) multiplies every part by q; q_unstar divides and signals
// not_divisible_error when some part is not a multiple of q.
Partition q_star(int q, const Partition& pi);
Partition q_unstar(int q, const Partition& pi);

// Componentwise cyclic shift: result[i] = mp[(i + d) mod len].
MultiPartition shift_label(const MultiPartition& mp, int d);

// Concatenate t copies of the length-(len/t) multipartition alpha.
MultiPartition stack_label(const MultiPartition& alpha, int t);

// Inverse of stack_label; requires mp to consist of q equal runs.
MultiPartition unstack_label(const MultiPartition& mp, int q);

// Beta-set of la on a bead count that is the least multiple of p covering
// all rows: beta[i] = la[i] + (k - 1 - i) with la padded by zeros.
std::pair<std::vector<int>, int> beta_set(const Partition& la, int p);

struct CoreQuotientData {
  Partition core;
  std::vector<Partition> quotient;  // p components
  int weight = 0;
  int sign = 1;  // (-1)^(total leg length of removed p-hooks)
};

// p-core, p-quotient, p-weight and p-sign under the fixed abacus convention.
CoreQuotientData core_quotient(const Partition& la, int p);

// Unique partition with the given p-core and p-quotient; round-trips with
// core_quotient.
Partition from_core_quotient(const Partition& core,
                             const std::vector<Partition>& quotient, int p);

inline bool is_p_core(const Partition& la, int p) {
  return core_quotient(la, p).weight == 0;
}

// All ways to remove one rim hook of length l: (smaller partition, leg
// length).  l = 0 yields the no-op move; an empty partition has no hooks.
std::vector<std::pair<Partition, int>> hooks_of_length(const Partition& la,
                                                       int l);

// Number of standard Young tableaux of the given shape (hook length formula).
BigInt hook_length_count(const Partition& la);

}  // namespace crg

#pragma once

#include <utility>
#include <vector>

#include "crg/cyclotomic.hpp"
#include "crg/partitions.hpp"

namespace crg {

// A tableau is stored as its rows; standard tableaux of shape la are filled
// by 0..|la|-1 with rows and columns increasing.
using Tableau = std::vector<std::vector<int>>;
using CMat = std::vector<std::vector<Cyc>>;

std::vector<Tableau> standard_tableaux(const Partition& shape);
std::pair<int, int> tableau_pos(const Tableau& t, int entry);
bool tableau_is_standard(const Tableau& t);

// Renumber arbitrary distinct entries to 0..k-1 preserving positions.
Tableau theta_standardize(const Tableau& t);

// Seminormal matrix of the adjacent transposition (i, i+1) on standard
// tableaux of the given shape; columns are images of basis tableaux.
CMat specht_gen_matrix(const Partition& shape, int i, int conductor);

// Decompose sigma (one-line, 0-based) into adjacent transposition indices
// such that sigma = s_{w_0} s_{w_1} ... applied right-to-left as functions.
std::vector<int> perm_to_adjacent(const std::vector<int>& sigma);

// Seminormal matrix of an arbitrary permutation (product over its word).
CMat specht_perm_matrix(const Partition& shape, const std::vector<int>& sigma,
                        int conductor);

CMat mat_mul(const CMat& a, const CMat& b);
CMat mat_identity(int dim, int conductor);
Cyc mat_trace(const CMat& m);
bool mat_equal(const CMat& a, const CMat& b);

}  // namespace crg

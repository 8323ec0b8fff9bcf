#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qham/euclid.hpp"
#include "qham/rootsys_data.hpp"

namespace qham {

// Cartan integers c[i][j] = <grad_i, coroot_j> of a list of functionals
// (gradient parts only).  Throws std::invalid_argument on a zero gradient or
// a non-integer pairing.
IMat cartan_integers(const MetricSpace& space,
                     const std::vector<AffineFunctional>& roots);

// Searches for a relabeling perm with a[perm[i]][perm[j]] == b[i][j];
// perm[i] is the index in `a` playing the role of node i of `b`.
std::optional<std::vector<int>> match_gcm(const IMat& a, const IMat& b);

// Classification of an irreducible finite simple system by diagram shape and
// root lengths.  to_canonical[k] is the input index of the k-th node in the
// standard numbering (chains numbered from the end described below):
//   A_n   : along the path (either end; ties broken by input index)
//   B_n   : long end first, the unique short root last
//   C_n   : short end first, the unique long root last (rank 2 reported as C2)
//   D_n   : chain first, then the two fork tips (tips by input index)
//   E_n   : chain tip, branch node, chain, with node 2 the short branch tip
//   F_4   : long pair first, then short pair
//   G_2   : short root first
struct FiniteClassification {
  std::string family;
  int rank = 0;
  std::vector<int> to_canonical;
};

FiniteClassification classify_finite(const MetricSpace& space,
                                     const std::vector<AffineFunctional>& simples);

// Classification of an irreducible affine diagram by matching its Cartan
// integers against the built-in tables.  to_seed[k] is the input index
// playing the role of seed node k (node 0 first).  B2~1 is reported as C2~1.
struct AffineClassification {
  std::string family;
  int rank = 0;
  int twist = 1;
  std::vector<int> to_seed;
};

AffineClassification classify_affine_gcm(const IMat& gcm);

}  // namespace qham

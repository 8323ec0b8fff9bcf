#pragma once

#include <string>

#include "qham/euclid.hpp"

namespace qham {

// One irreducible factor request: family X, rank n (the subscript of
// X_n^(r)), twist order r, realized affine (with node 0) or finite, with the
// invariant form of the slice multiplied by scale.
struct TypeSpec {
  std::string family;  // "A".."G"
  int rank = 1;
  int twist = 1;
  bool affine = true;
  Rat scale = Rat(1);

  bool operator==(const TypeSpec&) const = default;
};

bool valid_type_spec(const TypeSpec& t);

// "A3~1" (affine), "A3~2" (twisted), "A3" (finite); used in messages and CLI.
std::string type_name(const TypeSpec& t);

// Rational realization seed of one irreducible factor: a chart, its metric,
// and the simple roots as coordinate formulas.  Node order is 0,1..n for
// affine specs and 1..n for finite ones.
struct SeedData {
  int dim = 0;
  QMat gram;        // unscaled Gram matrix of the chart
  QMat coeff_rows;  // coordinate-form coefficients, one row per simple root
  QVec constants;   // constants, parallel to coeff_rows
};

SeedData seed_data(const TypeSpec& t);  // throws std::invalid_argument if invalid

// Cartan integers <grad_i, coroot_j> of the seed simple roots (independent
// of scale).
IMat seed_gcm(const TypeSpec& t);

}  // namespace qham

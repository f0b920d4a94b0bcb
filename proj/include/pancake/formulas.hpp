#pragma once

#include <vector>

#include "pancake/scalar.hpp"
#include "pancake/shapes.hpp"

namespace pancake {

// Closed-form maximum region counts, with the certainty status carried along
// so conjectured or bound-only values are never mistaken for proven ones.
struct FormulaResult {
  long long value = 0;
  FormulaStatus status = FormulaStatus::Exact;
};

// Maximum number of regions n copies of the kind can cut the plane into
// (exact kinds), or the best conjectured / upper-bound value.  n = 0 gives 1
// for every kind: the empty drawing leaves one region.
FormulaResult max_regions(ShapeKind kind, int k, long long n);

// Maximum crossing count for n copies: n*sigma + C(n,2)*kappa.
long long crossing_bound(ShapeKind kind, int k, long long n);

// Crossings per arm at full crossing count: 2*crossing_bound / (n * arms).
Rat cpa(ShapeKind kind, int k, long long n);

// Region-count matrix for the arm-parameterized families; rows k = 1..k_max,
// columns n = 0..n_max.
std::vector<std::vector<long long>> emit_table(ShapeKind kind, int k_max, int n_max);

}  // namespace pancake

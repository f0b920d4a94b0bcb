#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <vector>

#include "pancake/errors.hpp"
#include "pancake/formulas.hpp"
#include "pancake/shapes.hpp"

using namespace pancake;

namespace {

// Frozen reference matrices, rows k = 1..7, columns n = 0..8.
const long long kVTable[7][9] = {
    {1, 1, 2, 4, 7, 11, 16, 22, 29},
    {1, 2, 7, 16, 29, 46, 67, 92, 121},
    {1, 3, 14, 34, 63, 101, 148, 204, 269},
    {1, 4, 23, 58, 109, 176, 259, 358, 473},
    {1, 5, 34, 88, 167, 271, 400, 554, 733},
    {1, 6, 47, 124, 237, 386, 571, 792, 1049},
    {1, 7, 62, 166, 319, 521, 772, 1072, 1421},
};
const long long kCTable[7][9] = {
    {1, 2, 4, 7, 11, 16, 22, 29, 37},
    {1, 2, 7, 16, 29, 46, 67, 92, 121},
    {1, 3, 14, 34, 63, 101, 148, 204, 269},
    {1, 5, 25, 61, 113, 181, 265, 365, 481},
    {1, 8, 40, 97, 179, 286, 418, 575, 757},
    {1, 12, 59, 142, 261, 416, 607, 834, 1097},
    {1, 17, 82, 196, 359, 571, 832, 1142, 1501},
};

const std::vector<std::pair<ShapeKind, int>>& formula_kinds() {
  static const std::vector<std::pair<ShapeKind, int>> kinds = {
      {ShapeKind::Line, 0},          {ShapeKind::Hatpin, 0},
      {ShapeKind::KArmedV, 2},       {ShapeKind::KArmedV, 6},
      {ShapeKind::KChain, 3},        {ShapeKind::KChain, 6},
      {ShapeKind::LongA, 0},         {ShapeKind::LongZ, 0},
      {ShapeKind::LongW, 0},         {ShapeKind::ConstrainedL, 0},
      {ShapeKind::ConstrainedX, 0},  {ShapeKind::ConstrainedH, 0},
      {ShapeKind::ConstrainedPhi, 0}, {ShapeKind::ConstrainedT, 0},
      {ShapeKind::ConstrainedA, 0},  {ShapeKind::ConvexPolygon, 3},
      {ShapeKind::ConvexPolygon, 8}, {ShapeKind::ConcaveQuadrilateral, 0},
      {ShapeKind::Circle, 0},        {ShapeKind::FigureEight, 0},
      {ShapeKind::Pentagram, 0},     {ShapeKind::Hexagram, 0},
      {ShapeKind::Lollipop, 0},
  };
  return kinds;
}

}  // namespace

TEST_CASE("spot values and statuses") {
  CHECK_EQ(max_regions(ShapeKind::KArmedV, 4, 4).value, 109);
  CHECK_EQ(max_regions(ShapeKind::KChain, 5, 2).value, 40);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedT, 0, 4).value, 32);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedT, 0, 4).status, FormulaStatus::Conjectured);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedA, 0, 5).value, 83);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedA, 0, 5).status, FormulaStatus::Conjectured);
  CHECK_EQ(max_regions(ShapeKind::Lollipop, 0, 6).status, FormulaStatus::UpperBound);
  CHECK_EQ(max_regions(ShapeKind::FigureEight, 0, 2).value, 12);
  CHECK_EQ(max_regions(ShapeKind::Hexagram, 0, 1).value, 8);
  CHECK_EQ(max_regions(ShapeKind::Pentagram, 0, 1).value, 7);
  CHECK_EQ(max_regions(ShapeKind::Pentagram, 0, 3).value, 77);
  CHECK_EQ(max_regions(ShapeKind::Circle, 0, 4).value, 14);
  CHECK_EQ(max_regions(ShapeKind::ConcaveQuadrilateral, 0, 2).value, 18);
  CHECK_EQ(max_regions(ShapeKind::ConvexPolygon, 8, 2).value, 18);
  CHECK_EQ(max_regions(ShapeKind::LongW, 0, 2).value, 19);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedL, 0, 5).value, 36);
  CHECK_EQ(max_regions(ShapeKind::ConstrainedX, 0, 3).value, 22);
  for (long long n = 0; n <= 5; ++n) {
    const long long h[] = {1, 4, 14, 31, 55, 86};
    CHECK_EQ(max_regions(ShapeKind::ConstrainedH, 0, n).value, h[n]);
    CHECK_EQ(max_regions(ShapeKind::ConstrainedPhi, 0, n).value, h[n]);
  }
  const long long abar[] = {1, 3, 13, 30, 53, 83};
  for (long long n = 0; n <= 5; ++n) {
    CHECK_EQ(max_regions(ShapeKind::ConstrainedA, 0, n).value, abar[n]);
  }
  const long long tbar[] = {1, 3, 9, 19, 32, 49, 70};
  for (long long n = 0; n <= 6; ++n) {
    CHECK_EQ(max_regions(ShapeKind::ConstrainedT, 0, n).value, tbar[n]);
  }
  // Everything gives exactly 1 at n=0, flagged exact.
  for (const auto& [kind, k] : formula_kinds()) {
    CHECK_EQ(max_regions(kind, k, 0).value, 1);
    CHECK_EQ(max_regions(kind, k, 0).status, FormulaStatus::Exact);
  }
}

TEST_CASE("tables match the frozen references") {
  const auto v = emit_table(ShapeKind::KArmedV, 7, 8);
  const auto c = emit_table(ShapeKind::KChain, 7, 8);
  REQUIRE_EQ(v.size(), 7);
  REQUIRE_EQ(c.size(), 7);
  for (int k = 1; k <= 7; ++k) {
    REQUIRE_EQ(v[k - 1].size(), 9);
    for (int n = 0; n <= 8; ++n) {
      CHECK_EQ(v[k - 1][n], kVTable[k - 1][n]);
      CHECK_EQ(c[k - 1][n], kCTable[k - 1][n]);
    }
  }
  CHECK_EQ(v[6][8], 1421);
  CHECK_EQ(c[6][8], 1501);
  CHECK_THROWS_AS(emit_table(ShapeKind::Circle, 3, 3), UnknownKindError);
}

TEST_CASE("crossing bounds follow n*sigma + C(n,2)*kappa") {
  CHECK_EQ(crossing_bound(ShapeKind::KChain, 3, 3), 30);
  CHECK_EQ(crossing_bound(ShapeKind::Pentagram, 0, 3), 75);
  CHECK_EQ(crossing_bound(ShapeKind::Line, 0, 1), 0);
  CHECK_EQ(crossing_bound(ShapeKind::ConstrainedT, 0, 4), 24);
}

TEST_CASE("crossings per arm") {
  CHECK_EQ(cpa(ShapeKind::KArmedV, 3, 4), rat(9));
  CHECK_EQ(cpa(ShapeKind::KChain, 3, 3), rat(20, 3));
  CHECK_EQ(cpa(ShapeKind::Line, 0, 2), rat(1));
  // Chains: integral exactly when k <= 2.
  for (int k = 1; k <= 6; ++k) {
    bool all_integral = true;
    for (long long n = 2; n <= 12; ++n) {
      const Rat v = cpa(ShapeKind::KChain, k, n);
      all_integral = all_integral && (v.get_den() == 1);
    }
    CHECK_EQ(all_integral, k <= 2);
  }
}

TEST_CASE("values are nondecreasing in n") {
  for (const auto& [kind, k] : formula_kinds()) {
    long long prev = 1;
    for (long long n = 0; n <= 40; ++n) {
      const long long v = max_regions(kind, k, n).value;
      CHECK_GE(v, prev);
      prev = v;
    }
  }
}

TEST_CASE("chain and V rows agree where the shapes coincide or transform") {
  for (long long n = 0; n <= 50; ++n) {
    CHECK_EQ(max_regions(ShapeKind::KChain, 2, n).value,
             max_regions(ShapeKind::KArmedV, 2, n).value);
    CHECK_EQ(max_regions(ShapeKind::KChain, 3, n).value,
             max_regions(ShapeKind::KArmedV, 3, n).value);
    CHECK_EQ(max_regions(ShapeKind::KChain, 3, n).value,
             max_regions(ShapeKind::LongA, 0, n).value);
  }
}

TEST_CASE("table near-symmetry in k and n") {
  for (int k = 1; k <= 12; ++k) {
    for (long long n = 1; n <= 12; ++n) {
      const long long a = max_regions(ShapeKind::KChain, k, n).value;
      const long long b = max_regions(ShapeKind::KChain, static_cast<int>(n), k).value;
      const long long diff = a > b ? a - b : b - a;
      CHECK_EQ(diff, 2 * (k > n ? k - n : n - k));
    }
  }
}

TEST_CASE("closed forms are consistent with the degree identity") {
  // For exact kinds: R(n) = crossings + n*(sum(deg)/2 - V_B + E_inf/2) + c,
  // where c is 1 with unbounded arms present and 2 for closed shapes.
  for (const auto& [kind, k] : formula_kinds()) {
    const CatalogEntry e = catalog(kind, kind_parametric(kind) ? k : 0);
    if (e.status != FormulaStatus::Exact) continue;
    const long long deg_sum = std::accumulate(e.degrees.begin(), e.degrees.end(), 0LL);
    const long long c2 = e.infinite_edges > 0 ? 2 : 4;
    for (long long n = 1; n <= 30; ++n) {
      const long long lhs = 2 * max_regions(kind, k, n).value;
      const long long rhs = 2 * crossing_bound(kind, k, n) +
                            n * (deg_sum - 2 * e.base_nodes + e.infinite_edges) + c2;
      CHECK_EQ(lhs, rhs);
    }
  }
}

TEST_CASE("conjectured T values track the stated difference list") {
  const long long diffs[] = {0, 0, 0, 0, 1, 2, 3, 5, 7, 9, 12, 15, 18};
  for (long long n = 0; n <= 12; ++n) {
    CHECK_EQ(2 * n * n + 1 - max_regions(ShapeKind::ConstrainedT, 0, n).value, diffs[n]);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pancake/curve.hpp"
#include "pancake/errors.hpp"
#include "pancake/intersect.hpp"
#include "pancake/quadval.hpp"
#include "pancake/rng.hpp"
#include "pancake/scalar.hpp"

using namespace pancake;

namespace {

Pt pt(long x, long y) { return {rat(x), rat(y)}; }

Pt grid_pt(Rng& rng, long half = 10, long den = 4) {
  return {rat(rng.range(-half * den, half * den), den),
          rat(rng.range(-half * den, half * den), den)};
}

Pt nonzero_dir(Rng& rng) {
  for (;;) {
    Pt d{rat(rng.range(-6, 6)), rat(rng.range(-6, 6))};
    if (!is_zero(d)) return d;
  }
}

bool hit_at(const std::vector<Hit>& hits, const Pt& p) {
  for (const Hit& h : hits) {
    if (same_point(h.p, QPt(p))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("orientation matches the signed triangle area") {
  CHECK_EQ(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
  CHECK_EQ(orientation(pt(0, 0), pt(1, 1), pt(2, 2)), 0);
  CHECK_EQ(orientation(pt(0, 0), pt(0, 1), pt(1, 0)), -1);
}

TEST_CASE("orientation is antisymmetric under argument swaps") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Pt p = grid_pt(rng), q = grid_pt(rng), r = grid_pt(rng);
    const int base = orientation(p, q, r);
    CHECK_EQ(orientation(q, p, r), -base);
    CHECK_EQ(orientation(p, r, q), -base);
    CHECK_EQ(orientation(r, q, p), -base);
  }
}

TEST_CASE("quadratic values compare exactly across radicands") {
  const Quad sqrt2{rat(0), rat(1), rat(2)};
  const Quad sqrt3{rat(0), rat(1), rat(3)};
  const Quad sqrt8{rat(0), rat(1), rat(8)};
  const Quad twice_sqrt2{rat(0), rat(2), rat(2)};

  CHECK_EQ(sign(sqrt2), 1);
  CHECK_EQ(sign(Quad{rat(0), rat(-1), rat(2)}), -1);
  CHECK_EQ(sign(Quad{rat(2), rat(-1), rat(2)}), 1);    // 2 - sqrt(2)
  CHECK_EQ(sign(Quad{rat(1), rat(-1), rat(2)}), -1);   // 1 - sqrt(2)
  CHECK_EQ(sign(Quad{rat(-2), rat(1), rat(4)}), 0);    // sqrt(4) - 2

  CHECK_LT(compare(sqrt2, sqrt3), 0);
  CHECK_EQ(compare(sqrt8, twice_sqrt2), 0);

  // 1 + sqrt(2) vs sqrt(6): squares 3 + 2 sqrt(2) = 5.83 vs 6.
  CHECK_LT(compare(Quad{rat(1), rat(1), rat(2)}, Quad{rat(0), rat(1), rat(6)}), 0);
  // 3 - sqrt(2) vs sqrt(10)/2: squares 11 - 6 sqrt(2) = 2.514 vs 2.5.
  CHECK_GT(compare(Quad{rat(3), rat(-1), rat(2)}, Quad{rat(0), rat(1, 2), rat(10)}), 0);
  // Rational vs quadratic.
  CHECK_GT(compare(Quad{rat(3, 2)}, sqrt2), 0);
}

TEST_CASE("enclose produces a correct interval of the requested width") {
  const Quad sqrt2{rat(0), rat(1), rat(2)};
  const Rat eps = rat(1, 1000000000000000000L) / rat(100);  // 1e-20
  const RatInterval box = enclose(sqrt2, eps);
  CHECK_LE(box.hi - box.lo, eps);
  CHECK_GT(box.lo, 0);
  CHECK_LE(box.lo * box.lo, rat(2));
  CHECK_GE(box.hi * box.hi, rat(2));

  const Quad neg{rat(1), rat(-3), rat(5)};  // 1 - 3 sqrt(5) < 0
  const RatInterval nbox = enclose(neg, eps);
  CHECK_LE(nbox.hi - nbox.lo, eps);
  CHECK_LE(nbox.lo, nbox.hi);
  CHECK_LT(nbox.hi, 0);
}

TEST_CASE("lines through the axes cross once at the origin") {
  const Curve a = Curve::line(pt(0, 0), pt(1, 0) - pt(0, 0));
  const Curve b = Curve::line(pt(0, -1), pt(0, 1) - pt(0, -1));
  const auto hits = intersect(a, b);
  REQUIRE_EQ(hits.size(), 1);
  CHECK(same_point(hits[0].p, QPt(pt(0, 0))));
  CHECK_EQ(hits[0].contact, Contact::Transversal);
}

TEST_CASE("circle pair counts follow the exact distance predicates") {
  SUBCASE("symmetric lens: 9 between 0 and 16") {
    const auto hits = intersect(Curve::circle(pt(0, 0), rat(2)), Curve::circle(pt(3, 0), rat(2)));
    REQUIRE_EQ(hits.size(), 2);
    for (const Hit& h : hits) CHECK_EQ(h.contact, Contact::Transversal);
  }
  SUBCASE("external tangency lands exactly on the center line") {
    const auto hits = intersect(Curve::circle(pt(0, 0), rat(1)), Curve::circle(pt(2, 0), rat(1)));
    REQUIRE_EQ(hits.size(), 1);
    CHECK_EQ(hits[0].contact, Contact::Tangential);
    CHECK(same_point(hits[0].p, QPt(pt(1, 0))));
  }
  SUBCASE("internal tangency") {
    const auto hits = intersect(Curve::circle(pt(0, 0), rat(3)), Curve::circle(pt(1, 0), rat(2)));
    REQUIRE_EQ(hits.size(), 1);
    CHECK_EQ(hits[0].contact, Contact::Tangential);
    CHECK(same_point(hits[0].p, QPt(pt(3, 0))));
  }
  SUBCASE("identical circles overlap") {
    CHECK_THROWS_AS(intersect(Curve::circle(pt(0, 0), rat(2)), Curve::circle(pt(0, 0), rat(2))),
                    OverlapError);
  }
  SUBCASE("concentric circles are disjoint") {
    CHECK(intersect(Curve::circle(pt(0, 0), rat(2)), Curve::circle(pt(0, 0), rat(1))).empty());
  }
}

TEST_CASE("collinear segments: disjoint is empty, overlap is an error, touch is empty") {
  const Curve s1 = Curve::segment(pt(0, 0), pt(1, 0));
  CHECK(intersect(s1, Curve::segment(pt(2, 0), pt(3, 0))).empty());
  CHECK(intersect(s1, Curve::segment(pt(1, 0), pt(2, 0))).empty());
  CHECK_THROWS_AS(intersect(s1, Curve::segment(pt(-1, 0), pt(5, 0))), OverlapError);
  CHECK_THROWS_AS(intersect(Curve::ray(pt(0, 0), pt(1, 0)), Curve::segment(pt(2, 0), pt(3, 0))),
                  OverlapError);
  CHECK_THROWS_AS(intersect(Curve::line(pt(0, 0), pt(1, 0)), Curve::line(pt(5, 0), pt(-2, 0))),
                  OverlapError);
  // Rays sharing only their origins, pointing apart.
  CHECK(intersect(Curve::ray(pt(0, 0), pt(1, 0)), Curve::ray(pt(0, 0), pt(-1, 0))).empty());
}

TEST_CASE("segment endpoints are excluded from intersections") {
  // Segment endpoint lying in the interior of another segment.
  CHECK(intersect(Curve::segment(pt(0, 0), pt(2, 0)), Curve::segment(pt(1, 0), pt(1, 2))).empty());
  // Proper crossing just inside.
  const auto hits =
      intersect(Curve::segment(pt(0, 0), pt(2, 0)), Curve::segment(pt(1, -1), pt(1, 1)));
  REQUIRE_EQ(hits.size(), 1);
  CHECK(same_point(hits[0].p, QPt(pt(1, 0))));
}

TEST_CASE("circle and line intersections follow the discriminant") {
  const Curve c = Curve::circle(pt(0, 0), rat(5));
  SUBCASE("secant: two hits ordered along the line") {
    const auto hits = intersect(c, Curve::line(pt(-10, 3), pt(1, 0)));
    REQUIRE_EQ(hits.size(), 2);
    CHECK(hit_at(hits, pt(-4, 3)));
    CHECK(hit_at(hits, pt(4, 3)));
  }
  SUBCASE("tangent line: single rational tangency") {
    const auto hits = intersect(c, Curve::line(pt(0, 5), pt(1, 0)));
    REQUIRE_EQ(hits.size(), 1);
    CHECK_EQ(hits[0].contact, Contact::Tangential);
    CHECK(same_point(hits[0].p, QPt(pt(0, 5))));
  }
  SUBCASE("missing line") {
    CHECK(intersect(c, Curve::line(pt(0, 6), pt(1, 0))).empty());
  }
  SUBCASE("irrational crossing points satisfy both curve equations exactly") {
    const auto hits = intersect(c, Curve::line(pt(1, -9), pt(1, 3)));
    REQUIRE_EQ(hits.size(), 2);
    for (const Hit& h : hits) {
      CHECK_EQ(sign_circle_at(pt(0, 0), rat(25), h.p), 0);
      // Line through (1,-9) with direction (1,3): 3x - y - 12 = 0.
      CHECK_EQ(sign_linear_at(rat(3), rat(-1), rat(-12), h.p), 0);
    }
  }
  SUBCASE("chord of a ray starting inside the circle: one hit") {
    const auto hits = intersect(c, Curve::ray(pt(0, 0), pt(1, 1)));
    REQUIRE_EQ(hits.size(), 1);
    CHECK_EQ(sign_circle_at(pt(0, 0), rat(25), hits[0].p), 0);
  }
}

TEST_CASE("intersect is symmetric in its arguments") {
  Rng rng(11);
  auto random_curve = [&](int which) -> Curve {
    switch (which % 4) {
      case 0: {
        const Pt a = grid_pt(rng);
        for (;;) {
          const Pt b = grid_pt(rng);
          if (b != a) return Curve::segment(a, b);
        }
      }
      case 1:
        return Curve::ray(grid_pt(rng), nonzero_dir(rng));
      case 2:
        return Curve::line(grid_pt(rng), nonzero_dir(rng));
      default:
        return Curve::circle(grid_pt(rng), rat(rng.range(1, 8), 2));
    }
  };
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Curve a = random_curve(static_cast<int>(rng.below(4)));
    const Curve b = random_curve(static_cast<int>(rng.below(4)));
    std::vector<Hit> ab, ba;
    try {
      ab = intersect(a, b);
      ba = intersect(b, a);
    } catch (const OverlapError&) {
      continue;
    }
    REQUIRE_EQ(ab.size(), ba.size());
    for (const Hit& h : ab) {
      bool found = false;
      for (const Hit& g : ba) found = found || same_point(h.p, g.p);
      CHECK(found);
    }
    ++checked;
  }
  CHECK_GT(checked, 300);
}

TEST_CASE("line pairs agree with the direct 2x2 solution") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Pt p1 = grid_pt(rng), d1 = nonzero_dir(rng);
    const Pt p2 = grid_pt(rng), d2 = nonzero_dir(rng);
    const Rat den = cross(d1, d2);
    const Curve a = Curve::line(p1, d1), b = Curve::line(p2, d2);
    if (sgn(den) == 0) continue;
    const Rat t = cross(p2 - p1, d2) / den;
    const Pt expect = p1 + t * d1;
    const auto hits = intersect(a, b);
    REQUIRE_EQ(hits.size(), 1);
    CHECK(same_point(hits[0].p, QPt(expect)));
  }
}

TEST_CASE("circle pair count matches the exact predicate on random instances") {
  Rng rng(17);
  int tangencies = 0;
  for (int i = 0; i < 1000; ++i) {
    const Pt c1 = grid_pt(rng, 6, 2), c2 = grid_pt(rng, 6, 2);
    const Rat r1 = rat(rng.range(1, 8), 2), r2 = rat(rng.range(1, 8), 2);
    if (c1 == c2 && r1 == r2) continue;
    const Rat d2 = dist2(c1, c2);
    const Rat sum = r1 + r2, diff = r1 - r2;
    size_t expect;
    if (d2 > sum * sum || d2 < diff * diff) {
      expect = 0;
    } else if (d2 == sum * sum || d2 == diff * diff) {
      expect = 1;
      ++tangencies;
    } else {
      expect = 2;
    }
    const auto hits = intersect(Curve::circle(c1, r1), Curve::circle(c2, r2));
    CHECK_EQ(hits.size(), expect);
  }
  // The half-integer grid makes tangencies reasonably common; make sure the
  // single-record branch was really exercised.
  CHECK_GT(tangencies, 0);
}

TEST_CASE("order_along sorts by the curve parameter") {
  const Curve ray = Curve::ray(pt(0, 0), pt(1, 0));
  const std::vector<QPt> pts{QPt(pt(2, 0)), QPt(pt(1, 0)), QPt(pt(3, 0))};
  const auto order = order_along(ray, pts, rat(10));
  CHECK_EQ(order, std::vector<int>{1, 0, 2});
}

TEST_CASE("order_along sorts circle points counter-clockwise from +x") {
  const Curve c = Curve::circle(pt(0, 0), rat(1));
  const std::vector<QPt> pts{QPt(pt(0, 1)), QPt(pt(1, 0)), QPt(pt(-1, 0))};
  const auto order = order_along(c, pts, rat(2));
  CHECK_EQ(order, std::vector<int>{1, 0, 2});
}

TEST_CASE("order_along on quadratic points agrees with their approximations") {
  // Cut one circle with a few secants and order all crossing points.
  const Curve c = Curve::circle(pt(0, 0), rat(5));
  std::vector<QPt> pts;
  for (long k = -3; k <= 3; ++k) {
    for (const Hit& h : intersect(c, Curve::line(pt(0, k), Pt{rat(1), rat(k, 7)}))) {
      pts.push_back(h.p);
    }
  }
  REQUIRE_GE(pts.size(), 10);
  const auto order = order_along(c, pts, rat(10));
  REQUIRE_EQ(order.size(), pts.size());
  // Angles must be strictly increasing in (-pi, pi] rotated to start at +x.
  auto angle = [&](const QPt& p) {
    const double a = std::atan2(p.y.approx(), p.x.approx());
    return a < 0 ? a + 6.283185307179586 : a;
  };
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    CHECK_LT(angle(pts[order[i]]), angle(pts[order[i + 1]]));
  }
}

TEST_CASE("coinciding points raise an exact-tie ordering error") {
  const Curve line = Curve::line(pt(0, 0), pt(1, 0));
  const std::vector<QPt> pts{QPt(pt(1, 0)), QPt(pt(1, 0))};
  CHECK_THROWS_AS(order_along(line, pts, rat(2)), AmbiguousOrderError);
  try {
    order_along(line, pts, rat(2));
  } catch (const AmbiguousOrderError& e) {
    CHECK(e.exact_tie);
  }
  const auto groups = order_along_grouped(line, pts);
  REQUIRE_EQ(groups.size(), 1);
  CHECK_EQ(groups[0].size(), 2);
}

TEST_CASE("near-coincident points beyond the refinement floor raise an error") {
  // Pick the lower end of sqrt(2)'s own enclosure at the 1e-30 refinement
  // floor: a rational distinct from sqrt(2) whose interval is guaranteed to
  // overlap it, so the comparison must give up rather than guess.  (It also
  // survives the coarse 1e-12 pass: sqrt(2) is badly approximable, so the
  // coarse bracket's gap around it is far wider than 1e-30.)
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  Rat floor_eps(mpz_class(1), big);
  floor_eps.canonicalize();

  const Quad exact{rat(0), rat(1), rat(2)};
  const RatInterval box = enclose(exact, floor_eps);
  const Quad approx{box.lo};
  CHECK_NE(compare(exact, approx), 0);  // they really are distinct numbers
  bool threw = false;
  try {
    certified_compare(exact, approx, rat(1));
  } catch (const AmbiguousOrderError& e) {
    threw = true;
    CHECK_FALSE(e.exact_tie);
  }
  CHECK(threw);

  // Well-separated values resolve fine at the same scale.
  CHECK_EQ(certified_compare(Quad{rat(0), rat(1), rat(2)}, Quad{rat(3, 2)}, rat(1)), -1);
}

#pragma once

#include <vector>

#include "pancake/quadval.hpp"

namespace pancake {

enum class CurveType { Segment, Ray, Line, Circle, Arc };

// One primitive curve.  Linear variants store an anchor `a` and a second
// point `b`; the parametrization is P(t) = a + t*(b-a) with t in [0,1] for a
// Segment, t >= 0 for a Ray (b = a + direction), and all t for a Line.
// Circular variants store center and radius; an Arc additionally stores its
// two endpoints, which must lie exactly on the circle, and runs
// counter-clockwise from p0 to p1.
struct Curve {
  CurveType type = CurveType::Line;
  Pt a, b;
  Pt c;
  Rat r;
  Pt p0, p1;

  static Curve segment(Pt from, Pt to);
  static Curve ray(Pt origin, Pt direction);
  static Curve line(Pt point, Pt direction);
  static Curve circle(Pt center, Rat radius);
  static Curve arc(Pt center, Rat radius, Pt from, Pt to);

  bool linear() const { return type != CurveType::Circle && type != CurveType::Arc; }
  bool circular() const { return !linear(); }
  Pt dir() const { return b - a; }  // linear only

  // Number of unbounded ends (0 for Segment/Circle/Arc, 1 for Ray, 2 for Line).
  int infinite_ends() const;
};

// Parameter of a point known to lie on the supporting line of a linear curve.
Quad line_param(const Curve& linear, const QPt& p);

// Is parameter t strictly inside the curve's range (endpoints excluded)?
bool param_interior(const Curve& linear, const Quad& t);
// ... and inside the closed range?
bool param_within(const Curve& linear, const Quad& t);

// Cyclic position of a point on a circle, counter-clockwise from the +x axis
// reference direction.  Total order: quadrant first, then the per-quadrant
// monotone coordinate key.
struct CircPos {
  int quadrant;
  Quad key;
};
CircPos circ_pos(const Pt& center, const QPt& p);

// Exact comparison of cyclic positions (absolute order from the reference).
int compare_circ(const CircPos& u, const CircPos& v);

// Is u strictly inside the counter-clockwise arc from p0 to p1?
bool arc_interior(const Curve& arc, const QPt& u);

// Exact incidence: point on the curve including endpoints.
bool on_curve(const Curve& k, const QPt& p);

// Comparison with the resolution discipline: exact equality returns 0;
// distinct values are ordered via interval refinement at width eps1 = 1e-12 *
// scale then eps2 = 1e-30 * scale, and a pair still overlapping at eps2
// raises AmbiguousOrderError (exact_tie = false).
int certified_compare(const Quad& u, const Quad& v, const Rat& scale);
int certified_compare_circ(const CircPos& u, const CircPos& v, const Rat& scale);

// Position of `p` along the curve for ordering purposes.
struct CurvePos {
  bool cyclic = false;
  Quad t;       // linear curves
  CircPos cp;   // circular curves (absolute for circles, and arcs use it too)
};
CurvePos curve_pos(const Curve& k, const QPt& p);
int certified_compare_pos(const Curve& k, const CurvePos& u, const CurvePos& v, const Rat& scale);

}  // namespace pancake

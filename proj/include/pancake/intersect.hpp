#pragma once

#include <vector>

#include "pancake/curve.hpp"

namespace pancake {

enum class Contact { Transversal, Tangential };

// One common point of two curves, with exact coordinates and, for linear
// curves, the exact parameter along each.
struct Hit {
  QPt p;
  Quad t_a, t_b;
  Contact contact = Contact::Transversal;
};

// All common points interior to both curves (segment/ray/arc endpoints are
// excluded), ordered along `a`.  Intersection counts are decided by exact
// rational sign tests (discriminant sign for circle-line, squared
// center-distance against (r1 +- r2)^2 for circle-circle); coordinates of
// circle-case points are exact quadratic numbers.  Throws OverlapError when
// the curves share infinitely many points.
std::vector<Hit> intersect(const Curve& a, const Curve& b);

// Indices of `pts` sorted by position along the curve (signed parameter for
// linear curves; counter-clockwise from the +x reference for circles, from
// the start point for arcs).  Exact coincidences and pairs finer than the
// certification floor raise AmbiguousOrderError (exact_tie distinguishes
// them); `scale` is the configuration's bounding-box diagonal, used for the
// certification widths.
std::vector<int> order_along(const Curve& k, const std::vector<QPt>& pts, const Rat& scale);

// Internal variant for degenerate inputs: exact total order with coinciding
// points grouped together; never throws.
std::vector<std::vector<int>> order_along_grouped(const Curve& k, const std::vector<QPt>& pts);

// Exact comparison of two positions along a curve (no certification floor).
int compare_pos_exact(const Curve& k, const CurvePos& u, const CurvePos& v);

}  // namespace pancake

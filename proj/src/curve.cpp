#include "pancake/curve.hpp"

#include <cassert>

#include "pancake/errors.hpp"

namespace pancake {

Curve Curve::segment(Pt from, Pt to) {
  assert(from != to);
  Curve k;
  k.type = CurveType::Segment;
  k.a = std::move(from);
  k.b = std::move(to);
  return k;
}

Curve Curve::ray(Pt origin, Pt direction) {
  assert(!is_zero(direction));
  Curve k;
  k.type = CurveType::Ray;
  k.b = origin + direction;
  k.a = std::move(origin);
  return k;
}

Curve Curve::line(Pt point, Pt direction) {
  assert(!is_zero(direction));
  Curve k;
  k.type = CurveType::Line;
  k.b = point + direction;
  k.a = std::move(point);
  return k;
}

Curve Curve::circle(Pt center, Rat radius) {
  assert(sgn(radius) > 0);
  Curve k;
  k.type = CurveType::Circle;
  k.c = std::move(center);
  k.r = std::move(radius);
  return k;
}

Curve Curve::arc(Pt center, Rat radius, Pt from, Pt to) {
  assert(sgn(radius) > 0);
  assert(from != to);
  assert(dist2(from, center) == radius * radius);
  assert(dist2(to, center) == radius * radius);
  Curve k;
  k.type = CurveType::Arc;
  k.c = std::move(center);
  k.r = std::move(radius);
  k.p0 = std::move(from);
  k.p1 = std::move(to);
  return k;
}

int Curve::infinite_ends() const {
  switch (type) {
    case CurveType::Ray: return 1;
    case CurveType::Line: return 2;
    default: return 0;
  }
}

Quad line_param(const Curve& k, const QPt& p) {
  assert(k.linear());
  const Pt d = k.dir();
  const Rat n2 = norm2(d);
  Quad num = add_same_field(d.x * (p.x - k.a.x), d.y * (p.y - k.a.y));
  return (1 / n2) * num;
}

bool param_interior(const Curve& k, const Quad& t) {
  switch (k.type) {
    case CurveType::Segment: return sign(t) > 0 && sign(t - Rat(1)) < 0;
    case CurveType::Ray: return sign(t) > 0;
    case CurveType::Line: return true;
    default: assert(false); return false;
  }
}

bool param_within(const Curve& k, const Quad& t) {
  switch (k.type) {
    case CurveType::Segment: return sign(t) >= 0 && sign(t - Rat(1)) <= 0;
    case CurveType::Ray: return sign(t) >= 0;
    case CurveType::Line: return true;
    default: assert(false); return false;
  }
}

CircPos circ_pos(const Pt& center, const QPt& p) {
  Quad dx = p.x - center.x, dy = p.y - center.y;
  int sx = sign(dx), sy = sign(dy);
  assert(sx != 0 || sy != 0);
  // Quadrant boundaries assigned so each quadrant's key ascends
  // counter-clockwise: [0, 90) keyed by dy, [90, 180) by -dx, [180, 270) by
  // -dy, [270, 360) by dx.
  if (sx > 0 && sy >= 0) return {0, dy};
  if (sx <= 0 && sy > 0) return {1, -dx};
  if (sx < 0 && sy <= 0) return {2, -dy};
  return {3, dx};
}

int compare_circ(const CircPos& u, const CircPos& v) {
  if (u.quadrant != v.quadrant) return u.quadrant < v.quadrant ? -1 : 1;
  return compare(u.key, v.key);
}

bool arc_interior(const Curve& arc, const QPt& u) {
  assert(arc.type == CurveType::Arc);
  CircPos k0 = circ_pos(arc.c, QPt(arc.p0));
  CircPos k1 = circ_pos(arc.c, QPt(arc.p1));
  CircPos ku = circ_pos(arc.c, u);
  int c01 = compare_circ(k0, k1);
  int cu0 = compare_circ(ku, k0), cu1 = compare_circ(ku, k1);
  if (cu0 == 0 || cu1 == 0) return false;
  if (c01 < 0) return cu0 > 0 && cu1 < 0;  // no wrap
  return cu0 > 0 || cu1 < 0;               // arc wraps past the reference
}

bool on_curve(const Curve& k, const QPt& p) {
  if (k.linear()) {
    const Pt d = k.dir();
    // Normal form: -d.y * x + d.x * y + (d.y * a.x - d.x * a.y) = 0
    if (sign_linear_at(-d.y, d.x, d.y * k.a.x - d.x * k.a.y, p) != 0) return false;
    return param_within(k, line_param(k, p));
  }
  if (sign_circle_at(k.c, k.r * k.r, p) != 0) return false;
  if (k.type == CurveType::Circle) return true;
  if (same_point(p, QPt(k.p0)) || same_point(p, QPt(k.p1))) return true;
  return arc_interior(k, p);
}

namespace {

// Interval-overlap test at the two spec widths; exact equality is a tie
// (returns 0), anything unresolved at the fine width is beyond engine
// resolution.
const Rat kCoarse = rat(1, 1000000) * rat(1, 1000000);  // 1e-12
const Rat kFine = kCoarse * kCoarse * rat(1, 1000000);  // 1e-30

int interval_compare(const Quad& u, const Quad& v, const Rat& width) {
  RatInterval iu = enclose(u, width), iv = enclose(v, width);
  if (iu.hi < iv.lo) return -1;
  if (iv.hi < iu.lo) return 1;
  return 0;
}

}  // namespace

int certified_compare(const Quad& u, const Quad& v, const Rat& scale) {
  if (u.is_rational() && v.is_rational()) return cmp(u.a, v.a);
  if (compare(u, v) == 0) return 0;
  Rat base = sgn(scale) > 0 ? scale : Rat(1);
  if (int c = interval_compare(u, v, base * kCoarse); c != 0) return c;
  if (int c = interval_compare(u, v, base * kFine); c != 0) return c;
  throw AmbiguousOrderError("positions distinct but closer than the certification floor", false,
                            0, 0);
}

int certified_compare_circ(const CircPos& u, const CircPos& v, const Rat& scale) {
  if (u.quadrant != v.quadrant) return u.quadrant < v.quadrant ? -1 : 1;
  return certified_compare(u.key, v.key, scale);
}

CurvePos curve_pos(const Curve& k, const QPt& p) {
  CurvePos pos;
  if (k.linear()) {
    pos.cyclic = false;
    // Normalize the parameter by the dominant direction component so the
    // certification width stays a length, not a bare parameter step.
    pos.t = line_param(k, p);
  } else {
    pos.cyclic = true;
    pos.cp = circ_pos(k.c, p);
  }
  return pos;
}

int certified_compare_pos(const Curve& k, const CurvePos& u, const CurvePos& v,
                          const Rat& scale) {
  if (k.linear()) {
    const Pt d = k.dir();
    Rat mag = std::max(rat_abs(d.x), rat_abs(d.y));
    return certified_compare(u.t, v.t, scale / mag);
  }
  if (k.type == CurveType::Circle) return certified_compare_circ(u.cp, v.cp, scale);
  // Arc: order counter-clockwise starting from p0.
  CircPos k0 = circ_pos(k.c, QPt(k.p0));
  int gu = compare_circ(u.cp, k0) >= 0 ? 0 : 1;
  int gv = compare_circ(v.cp, k0) >= 0 ? 0 : 1;
  if (gu != gv) return gu < gv ? -1 : 1;
  return certified_compare_circ(u.cp, v.cp, scale);
}

}  // namespace pancake

#include "pancake/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "pancake/errors.hpp"

namespace pancake {

namespace {

// Parameter range of a linear curve as optional bounds (nullopt = unbounded).
struct ParamRange {
  std::optional<Rat> lo, hi;
};

ParamRange own_range(const Curve& k) {
  switch (k.type) {
    case CurveType::Segment: return {Rat(0), Rat(1)};
    case CurveType::Ray: return {Rat(0), std::nullopt};
    default: return {std::nullopt, std::nullopt};
  }
}

// The parameter interval (on a's parametrization) covered by collinear b.
ParamRange range_on(const Curve& a, const Curve& b) {
  Quad q0 = line_param(a, QPt(b.a)), q1 = line_param(a, QPt(b.b));
  Rat t0 = q0.rational_value(), t1 = q1.rational_value();
  switch (b.type) {
    case CurveType::Segment: return {std::min(t0, t1), std::max(t0, t1)};
    case CurveType::Ray:
      if (t1 > t0) return {t0, std::nullopt};
      return {std::nullopt, t0};
    default: return {std::nullopt, std::nullopt};
  }
}

bool ranges_overlap_openly(const ParamRange& u, const ParamRange& v) {
  // Intersection of two intervals has positive length iff max(lo) < min(hi).
  if (u.lo && v.hi && *u.lo >= *v.hi) return false;
  if (v.lo && u.hi && *v.lo >= *u.hi) return false;
  if (u.lo && u.hi && *u.lo >= *u.hi) return false;  // cannot happen for valid curves
  if (v.lo && v.hi && *v.lo >= *v.hi) return false;
  return true;
}

void linear_linear(const Curve& a, const Curve& b, std::vector<Hit>& out) {
  const Pt d1 = a.dir(), d2 = b.dir();
  const Rat den = cross(d1, d2);
  if (sgn(den) == 0) {
    if (sgn(cross(d1, b.a - a.a)) != 0) return;  // parallel, distinct supports
    if (ranges_overlap_openly(own_range(a), range_on(a, b)))
      throw OverlapError("collinear curves overlap");
    return;  // collinear but disjoint or touching only at endpoints
  }
  const Pt w = b.a - a.a;
  Rat t = cross(w, d2) / den;
  Rat s = cross(w, d1) / den;
  if (!param_interior(a, Quad(t)) || !param_interior(b, Quad(s))) return;
  Hit h;
  h.p = QPt(a.a + t * d1);
  h.t_a = Quad(t);
  h.t_b = Quad(s);
  out.push_back(h);
}

// Does the point count as interior for a circular curve?
bool circ_interior(const Curve& k, const QPt& p) {
  if (k.type == CurveType::Circle) return true;
  return arc_interior(k, p);
}

// Intersection of a circle/arc support (center c, radius r) with a linear
// curve; emits hits that are interior to both `circ` and `lin`.  The hit
// parameters t_a/t_b are filled for the linear side only; `lin_is_a` says
// which slot that is.
void circle_linear(const Curve& circ, const Curve& lin, bool lin_is_a, std::vector<Hit>& out) {
  const Pt D = lin.dir();
  const Pt W = lin.a - circ.c;
  const Rat A2 = norm2(D);
  const Rat B2 = 2 * dot(D, W);
  const Rat C2 = norm2(W) - circ.r * circ.r;
  const Rat disc = B2 * B2 - 4 * A2 * C2;
  const int ds = sgn(disc);
  if (ds < 0) return;

  auto emit = [&](const Quad& t, Contact contact) {
    if (!param_interior(lin, t)) return;
    QPt p{add_same_field(Quad(lin.a.x), mul_same_field(t, Quad(D.x))),
          add_same_field(Quad(lin.a.y), mul_same_field(t, Quad(D.y)))};
    if (!circ_interior(circ, p)) return;
    Hit h;
    h.p = p;
    if (lin_is_a)
      h.t_a = t;
    else
      h.t_b = t;
    h.contact = contact;
    out.push_back(h);
  };

  if (ds == 0) {
    emit(Quad(-B2 / (2 * A2)), Contact::Tangential);
    return;
  }
  const Rat mid = -B2 / (2 * A2), half = 1 / (2 * A2);
  emit(Quad{mid, -half, disc}, Contact::Transversal);
  emit(Quad{mid, half, disc}, Contact::Transversal);
}

// Cyclic open-interval overlap of two arcs on one supporting circle.
bool arcs_overlap(const Curve& u, const Curve& v) {
  if (u.p0 == v.p0) return true;
  return arc_interior(u, QPt(v.p0)) || arc_interior(u, QPt(v.p1)) ||
         arc_interior(v, QPt(u.p0)) || arc_interior(v, QPt(u.p1));
}

void circle_circle(const Curve& a, const Curve& b, std::vector<Hit>& out) {
  if (a.c == b.c && a.r == b.r) {
    // Same supporting circle.
    if (a.type == CurveType::Circle && b.type == CurveType::Circle)
      throw OverlapError("identical circles");
    if (a.type == CurveType::Circle || b.type == CurveType::Circle)
      throw OverlapError("arc lies on the other curve's circle");
    if (arcs_overlap(a, b)) throw OverlapError("arcs on one circle overlap");
    return;  // complementary arcs share endpoints only; endpoints are not interior
  }
  if (a.c == b.c) return;  // concentric, distinct radii

  const Pt e = b.c - a.c;
  const Rat D2 = norm2(e);
  const Rat sum = a.r + b.r, diff = a.r - b.r;
  if (D2 > sum * sum || D2 < diff * diff) return;

  auto emit_tangent = [&](const Rat& lambda) {
    QPt p{Quad(a.c.x + lambda * e.x), Quad(a.c.y + lambda * e.y)};
    if (circ_interior(a, p) && circ_interior(b, p)) {
      Hit h;
      h.p = p;
      h.contact = Contact::Tangential;
      out.push_back(h);
    }
  };
  if (D2 == sum * sum) {  // external tangency
    emit_tangent(a.r / sum);
    return;
  }
  if (D2 == diff * diff) {  // internal tangency (diff != 0 since D2 > 0)
    emit_tangent(a.r / diff);
    return;
  }

  // Two transversal points: intersect circle a with the radical line.
  const Rat lambda = (D2 + a.r * a.r - b.r * b.r) / (2 * D2);
  const Pt m = a.c + lambda * e;
  const Curve radical = Curve::line(m, perp(e));
  std::vector<Hit> raw;
  circle_linear(Curve::circle(a.c, a.r), radical, false, raw);
  assert(raw.size() == 2);
  for (const Hit& h : raw) {
    if (!circ_interior(a, h.p) || !circ_interior(b, h.p)) continue;
    Hit g;
    g.p = h.p;
    g.contact = Contact::Transversal;
    out.push_back(g);
  }
}

}  // namespace

int compare_pos_exact(const Curve& k, const CurvePos& u, const CurvePos& v) {
  if (k.linear()) return compare(u.t, v.t);
  if (k.type == CurveType::Circle) return compare_circ(u.cp, v.cp);
  CircPos k0 = circ_pos(k.c, QPt(k.p0));
  int gu = compare_circ(u.cp, k0) >= 0 ? 0 : 1;
  int gv = compare_circ(v.cp, k0) >= 0 ? 0 : 1;
  if (gu != gv) return gu < gv ? -1 : 1;
  return compare_circ(u.cp, v.cp);
}

std::vector<Hit> intersect(const Curve& a, const Curve& b) {
  std::vector<Hit> out;
  if (a.linear() && b.linear()) {
    linear_linear(a, b, out);
  } else if (a.linear()) {
    circle_linear(b, a, true, out);
  } else if (b.linear()) {
    circle_linear(a, b, false, out);
  } else {
    circle_circle(a, b, out);
  }
  if (out.size() > 1) {
    std::vector<CurvePos> pos;
    pos.reserve(out.size());
    for (const Hit& h : out) pos.push_back(curve_pos(a, h.p));
    std::vector<int> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return compare_pos_exact(a, pos[i], pos[j]) < 0; });
    std::vector<Hit> sorted;
    sorted.reserve(out.size());
    for (int i : idx) sorted.push_back(out[i]);
    out = std::move(sorted);
  }
  return out;
}

std::vector<int> order_along(const Curve& k, const std::vector<QPt>& pts, const Rat& scale) {
  std::vector<CurvePos> pos;
  pos.reserve(pts.size());
  for (const QPt& p : pts) pos.push_back(curve_pos(k, p));
  std::vector<int> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return compare_pos_exact(k, pos[i], pos[j]) < 0; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t u = idx[i - 1], v = idx[i];
    if (compare_pos_exact(k, pos[u], pos[v]) == 0)
      throw AmbiguousOrderError("coinciding positions along curve", true, u, v);
    try {
      certified_compare_pos(k, pos[u], pos[v], scale);
    } catch (const AmbiguousOrderError&) {
      throw AmbiguousOrderError("positions closer than the certification floor", false, u, v);
    }
  }
  return idx;
}

std::vector<std::vector<int>> order_along_grouped(const Curve& k, const std::vector<QPt>& pts) {
  std::vector<CurvePos> pos;
  pos.reserve(pts.size());
  for (const QPt& p : pts) pos.push_back(curve_pos(k, p));
  std::vector<int> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return compare_pos_exact(k, pos[i], pos[j]) < 0; });
  std::vector<std::vector<int>> groups;
  for (int i : idx) {
    if (!groups.empty() && compare_pos_exact(k, pos[groups.back().back()], pos[i]) == 0)
      groups.back().push_back(i);
    else
      groups.push_back({i});
  }
  return groups;
}

}  // namespace pancake

#include "pancake/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pancake/errors.hpp"
#include "pancake/intersect.hpp"

namespace pancake {
namespace {

constexpr double kPi = 3.14159265358979323846;

void need(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

Pt cmul(const Pt& a, const Pt& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

// Pose layouts, one line per kind.  validate() enforces them.
//
//   Line                  pts [P]             dirs [d]
//   Hatpin                pts [P]             dirs [d]            ray from P
//   KArmedV(k)            pts [tip]           dirs [u_1..u_k]
//   KChain(1)             pts [P]             dirs [d]            plain line
//   KChain(k>1)           pts [J_1..J_{k-1}]  dirs [d_in d_out]
//   LongA                 pts [tip]           dirs [u1 u2]        lens [d1 d2]
//   LongZ                 pts [P0 P1]         dirs [d0 d1]
//   LongW                 pts [P0 P1 P2]      dirs [d0 d1]
//   ConstrainedL          pts [corner]        dirs [u1 u2]        u1.u2 = 0
//   ConstrainedX          pts [center]        dirs [u1 u2]        u1.u2 = 0
//   ConstrainedH          pts [mid]           dirs [u]            lens [L], |u| = 1
//   ConstrainedPhi        pts [center]        dirs [u]            lens [r], |u| = 1
//   ConstrainedT          pts [node]          dirs [u]            ray dir (u.y, -u.x)
//   ConstrainedA          pts [tip]           dirs [u1 u2]        lens [d], |u1| = |u2|
//   ConvexPolygon(k)      pts [V_1..V_k]
//   ConcaveQuadrilateral  pts [V_1..V_4]
//   Circle                pts [center]                            lens [r]
//   FigureEight           pts [tangency]      dirs [u]            lens [r], |u| = 1
//   Pentagram, Hexagram   pts [center]        dirs [u]            lens [R], |u| = 1
//   Lollipop              pts [center]        dirs [u]            lens [r], |u| = 1

void need_layout(const Pose& pose, size_t pts, size_t dirs, size_t lens, const char* kind) {
  need(pose.pts.size() == pts && pose.dirs.size() == dirs && pose.lens.size() == lens,
       std::string(kind) + ": pose has wrong field counts");
}

void need_nonzero_dirs(const Pose& pose, const char* kind) {
  for (const Pt& d : pose.dirs) {
    need(!is_zero(d), std::string(kind) + ": zero direction");
  }
}

void need_unit(const Pt& u, const char* kind) {
  need(norm2(u) == 1, std::string(kind) + ": direction must be a unit vector");
}

void need_positive(const Rat& v, const char* kind, const char* what) {
  need(sgn(v) > 0, std::string(kind) + ": " + what + " must be positive");
}

// Travel-direction turn at a chain joint: sign of the cross product of the
// incoming and outgoing travel vectors.
int turn(const Pt& incoming, const Pt& outgoing) { return sgn(cross(incoming, outgoing)); }

// Unit vectors at the k-th of `count` equally spaced angles, shared by the
// star kinds.  Computed once; the tan-half-angle discretization makes them
// exactly unit rationals within 1e-9 of the regular directions.
const std::vector<Pt>& spokes(int count) {
  static const std::vector<Pt> five = [] {
    std::vector<Pt> v;
    for (int j = 0; j < 5; ++j) v.push_back(unit_from_angle(2.0 * kPi * j / 5.0));
    return v;
  }();
  static const std::vector<Pt> six = [] {
    std::vector<Pt> v;
    for (int j = 0; j < 6; ++j) v.push_back(unit_from_angle(2.0 * kPi * j / 6.0));
    return v;
  }();
  return count == 5 ? five : six;
}

struct Parts {
  std::vector<Curve> prims;
  std::vector<BaseNode> base_nodes;
};

Parts build_parts(ShapeKind kind, const Pose& pose) {
  Parts out;
  auto node = [&](const Pt& p, int degree) { out.base_nodes.push_back({p, degree}); };

  switch (kind) {
    case ShapeKind::Line: {
      need_layout(pose, 1, 1, 0, "line");
      need_nonzero_dirs(pose, "line");
      out.prims.push_back(Curve::line(pose.pts[0], pose.dirs[0]));
      break;
    }
    case ShapeKind::Hatpin: {
      need_layout(pose, 1, 1, 0, "hatpin");
      need_nonzero_dirs(pose, "hatpin");
      out.prims.push_back(Curve::ray(pose.pts[0], pose.dirs[0]));
      node(pose.pts[0], 1);
      break;
    }
    case ShapeKind::KArmedV: {
      need(pose.k >= 1, "karmedv: k must be >= 1");
      need_layout(pose, 1, static_cast<size_t>(pose.k), 0, "karmedv");
      need_nonzero_dirs(pose, "karmedv");
      for (const Pt& u : pose.dirs) out.prims.push_back(Curve::ray(pose.pts[0], u));
      node(pose.pts[0], pose.k);
      break;
    }
    case ShapeKind::KChain: {
      need(pose.k >= 1, "kchain: k must be >= 1");
      if (pose.k == 1) {
        need_layout(pose, 1, 1, 0, "kchain");
        need_nonzero_dirs(pose, "kchain");
        out.prims.push_back(Curve::line(pose.pts[0], pose.dirs[0]));
        break;
      }
      need_layout(pose, static_cast<size_t>(pose.k - 1), 2, 0, "kchain");
      need_nonzero_dirs(pose, "kchain");
      for (size_t i = 0; i + 1 < pose.pts.size(); ++i) {
        need(pose.pts[i] != pose.pts[i + 1], "kchain: consecutive joints coincide");
      }
      out.prims.push_back(Curve::ray(pose.pts.front(), pose.dirs[0]));
      for (size_t i = 0; i + 1 < pose.pts.size(); ++i) {
        out.prims.push_back(Curve::segment(pose.pts[i], pose.pts[i + 1]));
      }
      out.prims.push_back(Curve::ray(pose.pts.back(), pose.dirs[1]));
      for (const Pt& j : pose.pts) node(j, 2);
      break;
    }
    case ShapeKind::LongA: {
      need_layout(pose, 1, 2, 2, "longa");
      need_nonzero_dirs(pose, "longa");
      need(sgn(cross(pose.dirs[0], pose.dirs[1])) != 0, "longa: legs are parallel");
      need_positive(pose.lens[0], "longa", "crossbar distance d1");
      need_positive(pose.lens[1], "longa", "crossbar distance d2");
      const Pt tip = pose.pts[0];
      const Pt n1 = tip + pose.lens[0] * pose.dirs[0];
      const Pt n2 = tip + pose.lens[1] * pose.dirs[1];
      out.prims.push_back(Curve::ray(tip, pose.dirs[0]));
      out.prims.push_back(Curve::ray(tip, pose.dirs[1]));
      out.prims.push_back(Curve::segment(n1, n2));
      node(tip, 2);
      node(n1, 3);
      node(n2, 3);
      break;
    }
    case ShapeKind::LongZ: {
      need_layout(pose, 2, 2, 0, "longz");
      need_nonzero_dirs(pose, "longz");
      need(pose.pts[0] != pose.pts[1], "longz: joints coincide");
      const Pt m = pose.pts[1] - pose.pts[0];
      const int t0 = turn(-pose.dirs[0], m);
      const int t1 = turn(m, pose.dirs[1]);
      need(t0 != 0 && t1 != 0, "longz: collinear joint");
      need(t0 != t1, "longz: turns must alternate");
      out.prims.push_back(Curve::ray(pose.pts[0], pose.dirs[0]));
      out.prims.push_back(Curve::segment(pose.pts[0], pose.pts[1]));
      out.prims.push_back(Curve::ray(pose.pts[1], pose.dirs[1]));
      node(pose.pts[0], 2);
      node(pose.pts[1], 2);
      break;
    }
    case ShapeKind::LongW: {
      need_layout(pose, 3, 2, 0, "longw");
      need_nonzero_dirs(pose, "longw");
      need(pose.pts[0] != pose.pts[1] && pose.pts[1] != pose.pts[2], "longw: joints coincide");
      const Pt m0 = pose.pts[1] - pose.pts[0];
      const Pt m1 = pose.pts[2] - pose.pts[1];
      const int t0 = turn(-pose.dirs[0], m0);
      const int t1 = turn(m0, m1);
      const int t2 = turn(m1, pose.dirs[1]);
      need(t0 != 0 && t1 != 0 && t2 != 0, "longw: collinear joint");
      need(t0 != t1 && t1 != t2, "longw: turns must alternate");
      out.prims.push_back(Curve::ray(pose.pts[0], pose.dirs[0]));
      out.prims.push_back(Curve::segment(pose.pts[0], pose.pts[1]));
      out.prims.push_back(Curve::segment(pose.pts[1], pose.pts[2]));
      out.prims.push_back(Curve::ray(pose.pts[2], pose.dirs[1]));
      for (const Pt& j : pose.pts) node(j, 2);
      break;
    }
    case ShapeKind::ConstrainedL: {
      need_layout(pose, 1, 2, 0, "lbar");
      need_nonzero_dirs(pose, "lbar");
      if (dot(pose.dirs[0], pose.dirs[1]) != 0) {
        throw PerpendicularityError("lbar: arms are not perpendicular");
      }
      out.prims.push_back(Curve::ray(pose.pts[0], pose.dirs[0]));
      out.prims.push_back(Curve::ray(pose.pts[0], pose.dirs[1]));
      node(pose.pts[0], 2);
      break;
    }
    case ShapeKind::ConstrainedX: {
      need_layout(pose, 1, 2, 0, "xbar");
      need_nonzero_dirs(pose, "xbar");
      if (dot(pose.dirs[0], pose.dirs[1]) != 0) {
        throw PerpendicularityError("xbar: lines are not perpendicular");
      }
      out.prims.push_back(Curve::line(pose.pts[0], pose.dirs[0]));
      out.prims.push_back(Curve::line(pose.pts[0], pose.dirs[1]));
      node(pose.pts[0], 4);
      break;
    }
    case ShapeKind::ConstrainedH: {
      need_layout(pose, 1, 1, 1, "hbar");
      need_nonzero_dirs(pose, "hbar");
      need_unit(pose.dirs[0], "hbar");
      need_positive(pose.lens[0], "hbar", "crossbar length");
      const Pt u = pose.dirs[0];
      const Rat half = pose.lens[0] / 2;
      const Pt e0 = pose.pts[0] - half * u;
      const Pt e1 = pose.pts[0] + half * u;
      out.prims.push_back(Curve::segment(e0, e1));
      out.prims.push_back(Curve::line(e0, perp(u)));
      out.prims.push_back(Curve::line(e1, perp(u)));
      node(e0, 3);
      node(e1, 3);
      break;
    }
    case ShapeKind::ConstrainedPhi: {
      need_layout(pose, 1, 1, 1, "phibar");
      need_nonzero_dirs(pose, "phibar");
      need_unit(pose.dirs[0], "phibar");
      need_positive(pose.lens[0], "phibar", "radius");
      const Pt c = pose.pts[0];
      const Pt u = pose.dirs[0];
      const Rat& r = pose.lens[0];
      const Pt b0 = c + r * u;
      const Pt b1 = c - r * u;
      out.prims.push_back(Curve::ray(b0, u));
      out.prims.push_back(Curve::ray(b1, -u));
      out.prims.push_back(Curve::segment(b0, b1));
      out.prims.push_back(Curve::arc(c, r, b0, b1));
      out.prims.push_back(Curve::arc(c, r, b1, b0));
      node(b0, 4);
      node(b1, 4);
      break;
    }
    case ShapeKind::ConstrainedT: {
      need_layout(pose, 1, 1, 0, "tbar");
      need_nonzero_dirs(pose, "tbar");
      const Pt u = pose.dirs[0];
      out.prims.push_back(Curve::line(pose.pts[0], u));
      out.prims.push_back(Curve::ray(pose.pts[0], Pt{u.y, -u.x}));
      node(pose.pts[0], 3);
      break;
    }
    case ShapeKind::ConstrainedA: {
      need_layout(pose, 1, 2, 1, "abar");
      need_nonzero_dirs(pose, "abar");
      need(sgn(cross(pose.dirs[0], pose.dirs[1])) != 0, "abar: legs are parallel");
      need(norm2(pose.dirs[0]) == norm2(pose.dirs[1]),
           "abar: leg directions must have equal length for the equidistant crossbar");
      need_positive(pose.lens[0], "abar", "crossbar distance");
      const Pt tip = pose.pts[0];
      const Pt n1 = tip + pose.lens[0] * pose.dirs[0];
      const Pt n2 = tip + pose.lens[0] * pose.dirs[1];
      out.prims.push_back(Curve::ray(tip, pose.dirs[0]));
      out.prims.push_back(Curve::ray(tip, pose.dirs[1]));
      out.prims.push_back(Curve::segment(n1, n2));
      node(tip, 2);
      node(n1, 3);
      node(n2, 3);
      break;
    }
    case ShapeKind::ConvexPolygon: {
      const int k = pose.k > 0 ? pose.k : static_cast<int>(pose.pts.size());
      need(k >= 3, "polygon: k must be >= 3");
      need_layout(pose, static_cast<size_t>(k), 0, 0, "polygon");
      int sign_seen = 0;
      for (int i = 0; i < k; ++i) {
        const Pt& p = pose.pts[i];
        const Pt& q = pose.pts[(i + 1) % k];
        const Pt& r = pose.pts[(i + 2) % k];
        const int s = orientation(p, q, r);
        need(s != 0, "polygon: three consecutive vertices are collinear");
        if (sign_seen == 0) sign_seen = s;
        need(s == sign_seen, "polygon: not convex");
      }
      for (int i = 0; i < k; ++i) {
        out.prims.push_back(Curve::segment(pose.pts[i], pose.pts[(i + 1) % k]));
        node(pose.pts[i], 2);
      }
      break;
    }
    case ShapeKind::ConcaveQuadrilateral: {
      need_layout(pose, 4, 0, 0, "concavequad");
      int pos = 0, neg = 0;
      for (int i = 0; i < 4; ++i) {
        const int s =
            orientation(pose.pts[i], pose.pts[(i + 1) % 4], pose.pts[(i + 2) % 4]);
        need(s != 0, "concavequad: three consecutive vertices are collinear");
        (s > 0 ? pos : neg) += 1;
      }
      need((pos == 3 && neg == 1) || (pos == 1 && neg == 3),
           "concavequad: needs exactly one reflex vertex");
      for (int i = 0; i < 4; ++i) {
        out.prims.push_back(Curve::segment(pose.pts[i], pose.pts[(i + 1) % 4]));
        node(pose.pts[i], 2);
      }
      break;
    }
    case ShapeKind::Circle: {
      need_layout(pose, 1, 0, 1, "circle");
      need_positive(pose.lens[0], "circle", "radius");
      out.prims.push_back(Curve::circle(pose.pts[0], pose.lens[0]));
      break;
    }
    case ShapeKind::FigureEight: {
      need_layout(pose, 1, 1, 1, "figure8");
      need_nonzero_dirs(pose, "figure8");
      need_unit(pose.dirs[0], "figure8");
      need_positive(pose.lens[0], "figure8", "radius");
      const Pt t = pose.pts[0];
      const Pt u = pose.dirs[0];
      const Rat& r = pose.lens[0];
      out.prims.push_back(Curve::circle(t + r * u, r));
      out.prims.push_back(Curve::circle(t - r * u, r));
      node(t, 4);
      break;
    }
    case ShapeKind::Pentagram:
    case ShapeKind::Hexagram: {
      const int m = kind == ShapeKind::Pentagram ? 5 : 6;
      const char* name = m == 5 ? "pentagram" : "hexagram";
      need_layout(pose, 1, 1, 1, name);
      need_nonzero_dirs(pose, name);
      need_unit(pose.dirs[0], name);
      need_positive(pose.lens[0], name, "circumradius");
      std::vector<Pt> tips;
      for (int j = 0; j < m; ++j) {
        tips.push_back(pose.pts[0] + pose.lens[0] * cmul(pose.dirs[0], spokes(m)[j]));
      }
      for (int j = 0; j < m; ++j) {
        out.prims.push_back(Curve::segment(tips[j], tips[(j + 2) % m]));
        node(tips[j], 2);
      }
      break;
    }
    case ShapeKind::Lollipop: {
      need_layout(pose, 1, 1, 1, "lollipop");
      need_nonzero_dirs(pose, "lollipop");
      need_unit(pose.dirs[0], "lollipop");
      need_positive(pose.lens[0], "lollipop", "radius");
      const Pt b = pose.pts[0] + pose.lens[0] * pose.dirs[0];
      out.prims.push_back(Curve::circle(pose.pts[0], pose.lens[0]));
      out.prims.push_back(Curve::ray(b, pose.dirs[0]));
      node(b, 3);
      break;
    }
  }
  return out;
}

// Degree the primitive contributes at p: 1 for an endpoint, 2 for passing
// through (or lying on a closed curve), 0 if p is not on the primitive.
int prim_degree_at(const Curve& c, const Pt& p) {
  if (c.linear()) {
    const Pt d = c.dir();
    if (sgn(cross(d, p - c.a)) != 0) return 0;
    const Rat t = dot(d, p - c.a) / norm2(d);
    switch (c.type) {
      case CurveType::Line:
        return 2;
      case CurveType::Ray: {
        const int s = sgn(t);
        return s < 0 ? 0 : (s == 0 ? 1 : 2);
      }
      default: {  // Segment
        if (sgn(t) == 0 || t == 1) return 1;
        return (sgn(t) > 0 && t < 1) ? 2 : 0;
      }
    }
  }
  if (dist2(p, c.c) != c.r * c.r) return 0;
  if (c.type == CurveType::Circle) return 2;
  if (p == c.p0 || p == c.p1) return 1;
  return arc_interior(c, QPt(p)) ? 2 : 0;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

long long max_self_crossings(ShapeKind kind, int k) {
  switch (kind) {
    case ShapeKind::Pentagram:
      return 5;
    case ShapeKind::Hexagram:
      return 6;
    case ShapeKind::KChain:
      return static_cast<long long>(k - 1) * (k - 2) / 2;
    default:
      return 0;
  }
}

// The only same-instance contacts that are structure rather than
// self-crossings: the X center where its two lines meet, and the figure-8
// tangency.  Both coincide with the kind's single base node.
bool structural_contact(ShapeKind kind, const ShapeInstance& inst, const Hit& h) {
  if (kind == ShapeKind::ConstrainedX) {
    return h.contact == Contact::Transversal &&
           same_point(h.p, QPt(inst.base_nodes[0].p));
  }
  if (kind == ShapeKind::FigureEight) {
    return h.contact == Contact::Tangential && same_point(h.p, QPt(inst.base_nodes[0].p));
  }
  return false;
}

}  // namespace

bool kind_parametric(ShapeKind kind) {
  return kind == ShapeKind::KArmedV || kind == ShapeKind::KChain ||
         kind == ShapeKind::ConvexPolygon;
}

CatalogEntry catalog(ShapeKind kind, int k) {
  CatalogEntry e;
  e.kind = kind;
  e.k = k;
  auto deg = [](std::initializer_list<int> d) { return std::vector<int>(d); };
  switch (kind) {
    case ShapeKind::Line:
      e = {kind, 0, 0, 1, 0, {}, 2, 1, 1, Family::Affine, FormulaStatus::Exact};
      break;
    case ShapeKind::Hatpin:
      e = {kind, 0, 0, 1, 1, deg({1}), 1, 1, 1, Family::Affine, FormulaStatus::Exact};
      break;
    case ShapeKind::KArmedV: {
      if (k < 1) throw ValidationError("karmedv: k must be >= 1");
      e = {kind, k, 0, static_cast<long long>(k) * k, 1, deg({k}), k, k, k,
           Family::Affine, FormulaStatus::Exact};
      break;
    }
    case ShapeKind::KChain: {
      if (k < 1) throw ValidationError("kchain: k must be >= 1");
      const long long sigma = static_cast<long long>(k - 1) * (k - 2) / 2;
      e = {kind,
           k,
           sigma,
           static_cast<long long>(k) * k,
           k - 1,
           std::vector<int>(static_cast<size_t>(k - 1), 2),
           2,
           k,
           k,
           Family::Affine,
           FormulaStatus::Exact};
      break;
    }
    case ShapeKind::LongA:
      e = {kind, 0, 0, 9, 3, deg({2, 3, 3}), 2, 5, 3, Family::Affine, FormulaStatus::Exact};
      break;
    case ShapeKind::LongZ:
      e = {kind, 0, 0, 9, 2, deg({2, 2}), 2, 3, 3, Family::Affine, FormulaStatus::Exact};
      break;
    case ShapeKind::LongW:
      e = {kind, 0, 0, 16, 3, deg({2, 2, 2}), 2, 4, 4, Family::Affine, FormulaStatus::Exact};
      break;
    case ShapeKind::ConstrainedL:
      e = {kind, 0, 0, 3, 1, deg({2}), 2, 2, 2, Family::Similarity, FormulaStatus::Exact};
      break;
    case ShapeKind::ConstrainedX:
      e = {kind, 0, 0, 4, 1, deg({4}), 4, 4, 2, Family::Similarity, FormulaStatus::Exact};
      break;
    case ShapeKind::ConstrainedH:
      e = {kind, 0, 0, 7, 2, deg({3, 3}), 4, 5, 3, Family::Similarity, FormulaStatus::Exact};
      break;
    case ShapeKind::ConstrainedPhi:
      e = {kind, 0, 0, 7, 2, deg({4, 4}), 2, 5, 5, Family::Similarity, FormulaStatus::Exact};
      break;
    case ShapeKind::ConstrainedT:
      e = {kind, 0,    0, 4, 1, deg({3}), 3, 3, 2, Family::Similarity,
           FormulaStatus::Conjectured};
      break;
    case ShapeKind::ConstrainedA:
      e = {kind, 0,    0, 8, 3, deg({2, 3, 3}), 2, 5, 3, Family::Similarity,
           FormulaStatus::Conjectured};
      break;
    case ShapeKind::ConvexPolygon: {
      if (k < 3) throw ValidationError("polygon: k must be >= 3");
      e = {kind,
           k,
           0,
           2LL * k,
           k,
           std::vector<int>(static_cast<size_t>(k), 2),
           0,
           k,
           k,
           Family::Affine,
           FormulaStatus::Exact};
      break;
    }
    case ShapeKind::ConcaveQuadrilateral:
      e = {kind, 0, 0, 16, 4, deg({2, 2, 2, 2}), 0, 4, 4, Family::Affine,
           FormulaStatus::Exact};
      break;
    case ShapeKind::Circle:
      e = {kind, 0, 0, 2, 0, {}, 0, 1, 1, Family::Similarity, FormulaStatus::Exact};
      break;
    case ShapeKind::FigureEight:
      e = {kind, 0,    0, 8, 1, deg({4}), 0, 2, 2, Family::Similarity,
           FormulaStatus::Conjectured};
      break;
    case ShapeKind::Pentagram:
      e = {kind, 0, 5, 20, 5, std::vector<int>(5, 2), 0, 5, 5, Family::Similarity,
           FormulaStatus::Exact};
      break;
    case ShapeKind::Hexagram:
      e = {kind, 0, 6, 24, 6, std::vector<int>(6, 2), 0, 6, 6, Family::Similarity,
           FormulaStatus::Exact};
      break;
    case ShapeKind::Lollipop:
      e = {kind, 0,    0, 7, 1, deg({3}), 1, 2, 2, Family::Similarity,
           FormulaStatus::UpperBound};
      break;
  }
  return e;
}

const char* kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Line: return "line";
    case ShapeKind::Hatpin: return "hatpin";
    case ShapeKind::KArmedV: return "karmedv";
    case ShapeKind::KChain: return "kchain";
    case ShapeKind::LongA: return "longa";
    case ShapeKind::LongZ: return "longz";
    case ShapeKind::LongW: return "longw";
    case ShapeKind::ConstrainedL: return "lbar";
    case ShapeKind::ConstrainedX: return "xbar";
    case ShapeKind::ConstrainedH: return "hbar";
    case ShapeKind::ConstrainedPhi: return "phibar";
    case ShapeKind::ConstrainedT: return "tbar";
    case ShapeKind::ConstrainedA: return "abar";
    case ShapeKind::ConvexPolygon: return "polygon";
    case ShapeKind::ConcaveQuadrilateral: return "concavequad";
    case ShapeKind::Circle: return "circle";
    case ShapeKind::FigureEight: return "figure8";
    case ShapeKind::Pentagram: return "pentagram";
    case ShapeKind::Hexagram: return "hexagram";
    case ShapeKind::Lollipop: return "lollipop";
  }
  return "?";
}

std::optional<ShapeKind> kind_from_name(std::string_view name) {
  static const std::pair<std::string_view, ShapeKind> table[] = {
      {"line", ShapeKind::Line},
      {"hatpin", ShapeKind::Hatpin},
      {"karmedv", ShapeKind::KArmedV},
      {"kchain", ShapeKind::KChain},
      {"longa", ShapeKind::LongA},
      {"longz", ShapeKind::LongZ},
      {"longw", ShapeKind::LongW},
      {"lbar", ShapeKind::ConstrainedL},
      {"xbar", ShapeKind::ConstrainedX},
      {"hbar", ShapeKind::ConstrainedH},
      {"phibar", ShapeKind::ConstrainedPhi},
      {"tbar", ShapeKind::ConstrainedT},
      {"abar", ShapeKind::ConstrainedA},
      {"polygon", ShapeKind::ConvexPolygon},
      {"concavequad", ShapeKind::ConcaveQuadrilateral},
      {"circle", ShapeKind::Circle},
      {"figure8", ShapeKind::FigureEight},
      {"pentagram", ShapeKind::Pentagram},
      {"hexagram", ShapeKind::Hexagram},
      {"lollipop", ShapeKind::Lollipop},
  };
  for (const auto& [n, k] : table) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ShapeInstance instantiate(ShapeKind kind, const Pose& pose, int id) {
  ShapeInstance inst;
  inst.id = id;
  inst.kind = kind;
  inst.k = pose.k;
  if (kind == ShapeKind::ConvexPolygon && inst.k == 0) {
    inst.k = static_cast<int>(pose.pts.size());
  }
  inst.pose = pose;
  inst.pose.k = inst.k;
  Parts parts = build_parts(kind, inst.pose);
  inst.prims = std::move(parts.prims);
  inst.base_nodes = std::move(parts.base_nodes);
  inst.family = catalog(kind, kind_parametric(kind) ? inst.k : 0).family;
  validate(inst);
  return inst;
}

void validate(const ShapeInstance& inst) {
  const CatalogEntry entry = catalog(inst.kind, kind_parametric(inst.kind) ? inst.k : 0);
  need(static_cast<int>(inst.prims.size()) == entry.primitives,
       "instance primitive count does not match the catalog");
  need(static_cast<int>(inst.base_nodes.size()) == entry.base_nodes,
       "instance base node count does not match the catalog");

  for (size_t i = 0; i < inst.base_nodes.size(); ++i) {
    for (size_t j = i + 1; j < inst.base_nodes.size(); ++j) {
      need(inst.base_nodes[i].p != inst.base_nodes[j].p, "base nodes coincide");
    }
  }

  // Degrees: recompute from the geometry and match both the declared values
  // and the catalog's multiset.
  std::vector<int> computed;
  for (const BaseNode& bn : inst.base_nodes) {
    int d = 0;
    for (const Curve& c : inst.prims) d += prim_degree_at(c, bn.p);
    need(d == bn.degree, "declared base node degree does not match the geometry");
    computed.push_back(d);
  }
  std::vector<int> expected = entry.degrees;
  std::sort(computed.begin(), computed.end());
  std::sort(expected.begin(), expected.end());
  need(computed == expected, "base node degrees do not match the catalog");

  int infinite = 0;
  for (const Curve& c : inst.prims) infinite += c.infinite_ends();
  need(infinite == entry.infinite_edges,
       "infinite arm count does not match the catalog");

  // Self-intersections: overlaps are always invalid; contacts at a base node
  // are either the kind's structural contact or a degeneracy; what remains
  // must match the kind's self-crossing budget.
  DisjointSets comps(inst.prims.size());
  long long self_hits = 0;
  for (size_t i = 0; i < inst.prims.size(); ++i) {
    for (size_t j = i + 1; j < inst.prims.size(); ++j) {
      std::vector<Hit> hits;
      try {
        hits = intersect(inst.prims[i], inst.prims[j]);
      } catch (const OverlapError&) {
        throw ValidationError("primitives of one instance overlap");
      }
      if (!hits.empty()) comps.unite(static_cast<int>(i), static_cast<int>(j));
      for (const Hit& h : hits) {
        if (structural_contact(inst.kind, inst, h)) continue;
        if (h.contact == Contact::Tangential) {
          throw ValidationError("primitives of one instance are tangent");
        }
        for (const BaseNode& bn : inst.base_nodes) {
          if (same_point(h.p, QPt(bn.p))) {
            throw ValidationError("an arm passes through a base node");
          }
        }
        ++self_hits;
      }
    }
  }
  const long long budget = max_self_crossings(inst.kind, inst.k);
  if (inst.kind == ShapeKind::Pentagram || inst.kind == ShapeKind::Hexagram) {
    need(self_hits == budget, "star does not have its full set of self-crossings");
  } else {
    need(self_hits <= budget, "too many self-crossings");
  }

  // Structural contacts that the kind requires.
  if (inst.kind == ShapeKind::ConstrainedX || inst.kind == ShapeKind::FigureEight) {
    const auto hits = intersect(inst.prims[0], inst.prims[1]);
    need(hits.size() == 1 && structural_contact(inst.kind, inst, hits[0]),
         "the kind's structural contact is missing");
  }

  // Connectivity: primitives joined through base nodes and self-crossings.
  for (size_t i = 0; i < inst.prims.size(); ++i) {
    for (const BaseNode& bn : inst.base_nodes) {
      if (prim_degree_at(inst.prims[i], bn.p) == 0) continue;
      for (size_t j = 0; j < i; ++j) {
        if (prim_degree_at(inst.prims[j], bn.p) > 0) {
          comps.unite(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  }
  int roots = 0;
  for (size_t i = 0; i < inst.prims.size(); ++i) {
    if (comps.find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
  }
  need(roots == 1, "instance is not connected");

  // Arm count: each primitive contributes one graph edge plus one more per
  // base node strictly inside it; a bare closed circle counts once.
  int arms = 0;
  for (const Curve& c : inst.prims) {
    int interior_nodes = 0;
    for (const BaseNode& bn : inst.base_nodes) {
      const int d = prim_degree_at(c, bn.p);
      if (c.type == CurveType::Circle ? d > 0 : d == 2) ++interior_nodes;
    }
    if (c.type == CurveType::Circle) {
      arms += std::max(1, interior_nodes);
    } else {
      arms += 1 + interior_nodes;
    }
  }
  need(arms == entry.arms, "arm count does not match the catalog");
}

Pt unit_from_angle(double radians) {
  double x = std::remainder(radians, 2.0 * kPi);
  bool flip = false;
  if (x > kPi / 2.0) {
    x -= kPi;
    flip = true;
  } else if (x < -kPi / 2.0) {
    x += kPi;
    flip = true;
  }
  const double t = std::tan(x / 2.0);  // in [-1, 1]

  // Best rational approximation with denominator <= 1e9 via continued
  // fractions; the error is below 1e-9 in angle.
  long long pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  long long bp = 0, bq = 1;
  double rest = t;
  for (int iter = 0; iter < 64; ++iter) {
    const double fa = std::floor(rest);
    if (std::abs(fa * static_cast<double>(qm1)) > 4.0e18) break;
    const long long a = static_cast<long long>(fa);
    const long long p = a * pm1 + pm2;
    const long long q = a * qm1 + qm2;
    if (q > 1000000000LL) break;
    bp = p;
    bq = q;
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
    const double frac = rest - fa;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }

  const mpz_class P(static_cast<long>(bp)), Q(static_cast<long>(bq));
  const mpz_class den = P * P + Q * Q;
  mpq_class ux(Q * Q - P * P, den), uy(2 * P * Q, den);
  ux.canonicalize();
  uy.canonicalize();
  Pt u{Rat(ux), Rat(uy)};
  return flip ? -u : u;
}

Pt unit_from_angle(const Rat& radians) { return unit_from_angle(to_double(radians)); }

Pt random_unit(Rng& rng) {
  const long q = rng.range(1, 1000);
  const long p = rng.range(-q, q);
  const mpz_class P(p), Q(q);
  const mpz_class den = P * P + Q * Q;
  mpq_class ux(Q * Q - P * P, den), uy(2 * P * Q, den);
  ux.canonicalize();
  uy.canonicalize();
  Pt u{Rat(ux), Rat(uy)};
  return rng.coin() ? -u : u;
}

namespace {

Rat grid_rat(Rng& rng, long half_width) {
  return rat(rng.range(-half_width * 64, half_width * 64), 64);
}

Pt grid_pt(Rng& rng, long half_width) {
  return {grid_rat(rng, half_width), grid_rat(rng, half_width)};
}

Pt small_dir(Rng& rng) {
  for (;;) {
    Pt d{rat(rng.range(-8, 8), 1), rat(rng.range(-8, 8), 1)};
    if (!is_zero(d)) return d;
  }
}

Rat small_len(Rng& rng) { return rat(rng.range(1, 8), 2); }

// Angular order around the origin, counterclockwise from the +x axis.
bool angular_less(const Pt& p, const Pt& q) {
  auto quadrant = [](const Pt& v) {
    const int sx = sgn(v.x), sy = sgn(v.y);
    if (sx > 0 && sy >= 0) return 0;
    if (sx <= 0 && sy > 0) return 1;
    if (sx < 0 && sy <= 0) return 2;
    return 3;
  };
  const int qp = quadrant(p), qq = quadrant(q);
  if (qp != qq) return qp < qq;
  return sgn(cross(p, q)) > 0;
}

Pose random_pose_attempt(ShapeKind kind, int k, Rng& rng, long hw) {
  Pose pose;
  pose.k = k;
  switch (kind) {
    case ShapeKind::Line:
    case ShapeKind::Hatpin:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {small_dir(rng)};
      break;
    case ShapeKind::KArmedV:
      pose.pts = {grid_pt(rng, hw)};
      for (int i = 0; i < k; ++i) pose.dirs.push_back(small_dir(rng));
      break;
    case ShapeKind::KChain: {
      if (k == 1) {
        pose.pts = {grid_pt(rng, hw)};
        pose.dirs = {small_dir(rng)};
        break;
      }
      Pt j = grid_pt(rng, hw);
      pose.pts.push_back(j);
      for (int i = 1; i < k - 1; ++i) {
        j = j + small_dir(rng);
        pose.pts.push_back(j);
      }
      pose.dirs = {small_dir(rng), small_dir(rng)};
      break;
    }
    case ShapeKind::LongA:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {small_dir(rng), small_dir(rng)};
      pose.lens = {small_len(rng), small_len(rng)};
      break;
    case ShapeKind::LongZ:
      pose.pts = {grid_pt(rng, hw)};
      pose.pts.push_back(pose.pts[0] + small_dir(rng));
      pose.dirs = {small_dir(rng), small_dir(rng)};
      break;
    case ShapeKind::LongW:
      pose.pts = {grid_pt(rng, hw)};
      pose.pts.push_back(pose.pts[0] + small_dir(rng));
      pose.pts.push_back(pose.pts[1] + small_dir(rng));
      pose.dirs = {small_dir(rng), small_dir(rng)};
      break;
    case ShapeKind::ConstrainedL:
    case ShapeKind::ConstrainedX: {
      const Pt u = random_unit(rng);
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {u, perp(u)};
      break;
    }
    case ShapeKind::ConstrainedH:
    case ShapeKind::ConstrainedPhi:
    case ShapeKind::FigureEight:
    case ShapeKind::Lollipop:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {random_unit(rng)};
      pose.lens = {small_len(rng)};
      break;
    case ShapeKind::ConstrainedT:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {random_unit(rng)};
      break;
    case ShapeKind::ConstrainedA:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {random_unit(rng), random_unit(rng)};
      pose.lens = {small_len(rng)};
      break;
    case ShapeKind::ConvexPolygon: {
      std::vector<Pt> units;
      while (static_cast<int>(units.size()) < k) {
        const Pt u = random_unit(rng);
        bool dup = false;
        for (const Pt& v : units) dup = dup || v == u;
        if (!dup) units.push_back(u);
      }
      std::sort(units.begin(), units.end(), angular_less);
      const Pt c = grid_pt(rng, hw);
      const Rat radius = small_len(rng) + 2;
      for (const Pt& u : units) pose.pts.push_back(c + radius * u);
      break;
    }
    case ShapeKind::ConcaveQuadrilateral: {
      const Pt a = grid_pt(rng, hw);
      Pt b = a + small_dir(rng), c = a + small_dir(rng);
      // Reflex vertex: a point near the triangle centroid, visited between
      // b and c.
      const Pt g{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
      pose.pts = {a, b, g, c};
      break;
    }
    case ShapeKind::Circle:
      pose.pts = {grid_pt(rng, hw)};
      pose.lens = {small_len(rng)};
      break;
    case ShapeKind::Pentagram:
    case ShapeKind::Hexagram:
      pose.pts = {grid_pt(rng, hw)};
      pose.dirs = {random_unit(rng)};
      pose.lens = {small_len(rng) + 1};
      break;
  }
  return pose;
}

}  // namespace

Pose random_pose(ShapeKind kind, int k, Rng& rng, long half_width) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Pose pose = random_pose_attempt(kind, k, rng, half_width);
    try {
      instantiate(kind, pose);
      return pose;
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw ValidationError("random_pose: could not produce a valid pose");
}

Pose apply_similarity(ShapeKind kind, const Pose& pose, const Similarity& map) {
  (void)kind;  // the rule is uniform: points scale and rotate, directions
               // rotate, length parameters scale
  Pose out;
  out.k = pose.k;
  for (const Pt& p : pose.pts) out.pts.push_back(map.shift + map.scale * cmul(map.rot, p));
  for (const Pt& d : pose.dirs) out.dirs.push_back(cmul(map.rot, d));
  for (const Rat& l : pose.lens) out.lens.push_back(map.scale * l);
  return out;
}

Pose apply_affine(ShapeKind kind, const Pose& pose, const Affine& map) {
  (void)kind;  // length entries of affine kinds are parameters along the
               // mapped directions, so they stay fixed
  auto lin = [&](const Pt& p) {
    return Pt{map.a * p.x + map.b * p.y, map.c * p.x + map.d * p.y};
  };
  Pose out;
  out.k = pose.k;
  for (const Pt& p : pose.pts) out.pts.push_back(map.shift + lin(p));
  for (const Pt& d : pose.dirs) out.dirs.push_back(lin(d));
  out.lens = pose.lens;
  return out;
}

}  // namespace pancake

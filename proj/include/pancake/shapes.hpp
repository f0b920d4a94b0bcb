#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pancake/curve.hpp"
#include "pancake/point.hpp"
#include "pancake/rng.hpp"
#include "pancake/scalar.hpp"

namespace pancake {

// The shape zoo.  Each kind is a finite union of segments, rays, lines,
// circles, and arcs, decomposed into primitive curves plus "base nodes":
// the vertices the shape carries by construction (joints, tips, tangency
// points), as opposed to vertices created by crossings between instances.
enum class ShapeKind {
  Line,
  Hatpin,      // line with one marked interior point (degree-1 node riding on it)
  KArmedV,     // k rays from a common tip
  KChain,      // k arms: ray, k-2 segments, ray, joined end to end
  LongA,       // two legs from a tip plus a crossbar between them
  LongZ,       // ray, segment, ray zigzag with alternating turns, no self-crossing
  LongW,       // ray, segment, segment, ray zigzag, alternating turns, no self-crossing
  ConstrainedL,    // two perpendicular rays from a corner
  ConstrainedX,    // two perpendicular lines through a point
  ConstrainedH,    // segment crossbar with perpendicular full lines at both ends
  ConstrainedPhi,  // circle, a diameter chord, and the two rays extending it
  ConstrainedT,    // line with a perpendicular ray from an interior point
  ConstrainedA,    // equal-length legs, crossbar at matching distances from the tip
  ConvexPolygon,         // k-gon, strictly convex
  ConcaveQuadrilateral,  // simple quadrilateral with one reflex vertex
  Circle,
  FigureEight,  // two externally tangent circles of equal radius
  Pentagram,    // closed 5-segment star, 5 self-crossings
  Hexagram,     // closed 6-segment star, 6 self-crossings
  Lollipop,     // circle with a radial stick attached outward
};

enum class Family { Affine, Similarity };
enum class FormulaStatus { Exact, Conjectured, UpperBound };

// Per-kind combinatorial constants that feed the counting identities.
// All values are per instance: sigma self-crossings, kappa the maximum
// crossings between two distinct copies, base node count and degrees,
// infinite_edges the number of unbounded arms, arms the number of graph
// edges leaving the base structure, primitives the curve count.
struct CatalogEntry {
  ShapeKind kind = ShapeKind::Line;
  int k = 0;
  long long sigma = 0;
  long long kappa = 0;
  int base_nodes = 0;
  std::vector<int> degrees;
  int infinite_edges = 0;
  int arms = 0;
  int primitives = 0;
  Family family = Family::Affine;
  FormulaStatus status = FormulaStatus::Exact;
};

bool kind_parametric(ShapeKind kind);  // true for kinds taking an arm/vertex count k
CatalogEntry catalog(ShapeKind kind, int k = 0);

const char* kind_name(ShapeKind kind);
std::optional<ShapeKind> kind_from_name(std::string_view name);

// A pose fixes one concrete placement.  The layout of pts/dirs/lens is
// per kind and documented in shapes.cpp next to the instantiation code;
// validate() rejects anything malformed or degenerate.
struct Pose {
  std::vector<Pt> pts;
  std::vector<Pt> dirs;
  std::vector<Rat> lens;
  int k = 0;
};

struct BaseNode {
  Pt p;
  int degree = 0;
};

struct ShapeInstance {
  int id = -1;
  ShapeKind kind = ShapeKind::Line;
  int k = 0;
  Pose pose;
  Family family = Family::Affine;
  std::vector<Curve> prims;
  std::vector<BaseNode> base_nodes;
};

// Builds the primitive decomposition and base nodes for a pose.  Throws
// ValidationError when the pose violates the kind's constraints (wrong
// field counts, zero directions, broken perpendicularity or equal-length
// requirements, self-overlap, wrong self-crossing count).
ShapeInstance instantiate(ShapeKind kind, const Pose& pose, int id = -1);

// Re-checks an already built instance; instantiate() calls this.
void validate(const ShapeInstance& inst);

// Exact rational unit vector at angle `radians`, within 1e-9 of the true
// direction (the catalog constraints only need 1e-6).  The result has
// |u|^2 == 1 exactly.
Pt unit_from_angle(double radians);
Pt unit_from_angle(const Rat& radians);

// Random rational unit vector, uniform-ish over the circle.
Pt random_unit(Rng& rng);

// Random valid pose in a box of the given half-width (coordinates are
// rationals on a fine grid).  Retries internally until validate passes.
Pose random_pose(ShapeKind kind, int k, Rng& rng, long half_width = 10);

// Rigid-ish maps for property tests.  The rotation is a rational unit
// vector, so similarity images stay in the rational world: points map via
// p -> scale * R p + t, unit directions via R, lengths via |scale|.
struct Similarity {
  Pt rot;  // rational unit vector (cos, sin)
  Rat scale = Rat(1);
  Pt shift;
};

Pose apply_similarity(ShapeKind kind, const Pose& pose, const Similarity& map);

// General affine map x -> L x + t for affine-family kinds: points map via
// the full map, directions via L, length parameters stay fixed.
struct Affine {
  Rat a = Rat(1), b = Rat(0), c = Rat(0), d = Rat(1);  // L = [[a, b], [c, d]]
  Pt shift;
};

Pose apply_affine(ShapeKind kind, const Pose& pose, const Affine& map);

}  // namespace pancake

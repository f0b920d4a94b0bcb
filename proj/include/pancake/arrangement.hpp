#pragma once

#include <string>
#include <vector>

#include "pancake/formulas.hpp"
#include "pancake/intersect.hpp"
#include "pancake/shapes.hpp"

namespace pancake {

// A configuration of placed shapes induces a planar graph: base nodes plus a
// vertex wherever two arms cross. The counting identities assume general
// position; anything that breaks it is recorded as a degeneracy rather than
// silently miscounted.
enum class DegeneracyKind {
  TriplePoint,               // three or more arms through one point
  ArmThroughForeignBaseNode, // an arm passes through another instance's node
  CollinearOverlap,          // two prims share infinitely many points
  InterInstanceTangency,     // tangential contact between different instances
  CoincidentBaseNodes,       // base nodes of different instances coincide
};

const char* degeneracy_name(DegeneracyKind kind);

struct Degeneracy {
  DegeneracyKind kind;
  int inst_a = -1;
  int inst_b = -1;
  bool has_where = false;
  QPt where;
  std::string detail;
};

// One point where two arms cross. Structural contacts inside a single
// instance (a constrained-X center, a figure-8 tangency) are part of the
// shape and are not recorded here.
struct IntersectionRecord {
  QPt p;
  int inst_a = -1;
  int prim_a = -1;
  int inst_b = -1;
  int prim_b = -1;
  Contact contact = Contact::Transversal;
  bool self = false;
};

struct Arrangement {
  std::vector<ShapeInstance> instances;
  std::vector<IntersectionRecord> records;
  // arm_order[i][p] lists indices into `records` in order along prim p of
  // instance i (cyclic order for circles, from the start for the rest).
  // Records that coincide in space appear as one group member each; the
  // order within a coincident cluster is arbitrary and such inputs are
  // already flagged as TriplePoint.
  std::vector<std::vector<std::vector<int>>> arm_order;
  std::vector<Degeneracy> degeneracies;
  int components = 0;
  int bounded_components = 0;
  size_t self_crossings = 0;
  size_t pair_crossings = 0;
  // Number of geometrically distinct crossing points (coincident records
  // merged). Equals records.size() when the degeneracy report is empty.
  size_t distinct_crossing_points = 0;
};

enum class CountMethod { Formula, Faces };

struct RegionReport {
  long long v_b = 0;
  long long v_c = 0;
  long long v = 0;
  long long e_i = 0;
  long long e_f = 0;
  long long e = 0;
  long long r_i = 0;
  long long r_f = 0;
  long long r = 0;
  CountMethod method = CountMethod::Formula;
};

enum class Outcome { OptimalConfirmed, Consistent, Mismatch };

const char* outcome_name(Outcome outcome);

struct VerificationOutcome {
  Outcome outcome = Outcome::Mismatch;
  long long r_formula = -1;
  long long r_faces = -1;
  long long closed_form = -1;
  long long crossings = -1;
  long long bound = -1;
  FormulaStatus status = FormulaStatus::Exact;
};

// Computes all pairwise and self intersections, the per-arm crossing orders,
// the degeneracy report, and the component structure. Never throws on
// degenerate input; findings land in the report.
Arrangement build(const std::vector<ShapeInstance>& instances);

// Region count from the vertex/edge identity. Requires an empty degeneracy
// report and a connected arrangement; throws DegenerateInputError or
// DisconnectedInputError otherwise.
RegionReport count_regions_formula(const Arrangement& arr);

// Independent region count: clips everything to a rectangle that strictly
// contains all vertices, replaces circles and arcs by certified inscribed
// polylines, and counts the faces of the resulting exact rational
// subdivision directly. Handles disconnected input; handles degenerate
// input as long as no circular prim is involved in a degeneracy (throws
// ResolutionExceededError for those).
RegionReport count_regions_faces(const Arrangement& arr);

// Cross-checks both counters against the closed form and the crossing bound.
VerificationOutcome verify(ShapeKind kind, int k, int n,
                           const std::vector<ShapeInstance>& construction);

}  // namespace pancake

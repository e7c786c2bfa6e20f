// Exact-rational convex geometry: H- and V-representations, simplex LP,
// vertex and facet enumeration, redundancy removal, membership.
//
// Vertex enumeration runs the double description method on the homogenized
// cone (x0, x), x0 >= 0, with integer rays and combinatorial adjacency; the
// polar backend enumerates instead the facets of the dual point set around an
// interior point, which is the exact-arithmetic counterpart of running a
// QuickHull-style halfspace intersection. Both produce identical canonical
// output.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dwf/linalg.hpp"
#include "dwf/rational.hpp"

namespace dwf {

struct Inequality {
  RatVec a;
  Rational b;  // a.x >= b

  bool operator==(const Inequality&) const = default;
};

struct Equality {
  RatVec e;
  Rational f;  // e.x = f

  bool operator==(const Equality&) const = default;
};

struct HPolytope {
  int dim = 0;
  std::vector<Inequality> inequalities;
  std::vector<Equality> equalities;
};

struct VPolytope {
  int dim = 0;
  RatMatrix vertices;  // deduplicated, lexicographically sorted

  static VPolytope from_points(int dim, RatMatrix points);  // sorts + dedupes
};

// ---------------------------------------------------------------------------
// Linear programming

enum class LpStatus { optimal, infeasible, unbounded };
enum class LpSense { maximize, minimize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;  // meaningful when optimal
  RatVec point;    // satisfies all constraints exactly when optimal
};

// Exact simplex (active-set form) with Bland's anti-cycling rule; equalities
// are converted to inequality pairs, rank-deficient systems are reduced onto
// the constraint row space first.
LpResult lp_solve(const RatVec& objective, const HPolytope& h, LpSense sense);

// true iff every coordinate has a finite max and min over h (2*dim LPs);
// an empty polytope is trivially bounded.
bool is_bounded(const HPolytope& h);

// ---------------------------------------------------------------------------
// Vertex enumeration

struct VertexEnumOptions {
  enum class Backend { dd, polar };
  Backend backend = Backend::dd;
  // Caller has already established boundedness; skips the 2*dim LP check.
  // The run still fails loudly if a recession ray shows up.
  bool assume_bounded = false;
  // Checkpointing of the double-description state (used for long runs).
  std::string checkpoint_path;
  int checkpoint_every = 0;  // insertions between checkpoints; 0 = off
  // Abort (std::length_error) when the intermediate ray count exceeds this;
  // 0 = unlimited. The checkpoint, when configured, survives the abort.
  std::size_t max_rays = 0;
  // Progress callback: (constraints processed, total, current ray count).
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

struct VertexEnumResult {
  VPolytope poly;
  bool feasible = true;
  std::size_t max_intermediate_rays = 0;
};

// Exactly the extreme points of h. Preconditions: h bounded (checked; throws
// std::domain_error when unbounded). An empty polytope yields zero vertices
// with feasible = false.
VertexEnumResult vertex_enumeration(const HPolytope& h, const VertexEnumOptions& opts = {});

// Irredundant facet list of a full-dimensional V-polytope, rows canonicalized
// to integer coefficients with content 1 and sorted. Throws std::domain_error
// on a lower-dimensional hull (message reports the detected affine-hull
// dimension).
HPolytope facet_enumeration(const VPolytope& v);

// ---------------------------------------------------------------------------
// Membership and redundancy

struct ConvexCombination {
  // (vertex index into v.vertices, weight); weights > 0, summing exactly to 1
  std::vector<std::pair<int, Rational>> weights;
};

struct MembershipResult {
  bool inside = false;
  ConvexCombination combination;  // set when inside
  // set when outside: g.y >= h holds for every vertex, g.x < h
  Inequality separator;
};

MembershipResult hull_membership(const VPolytope& v, const RatVec& x);

struct RedundancyReport {
  HPolytope reduced;
  int removed = 0;
};

// Drops inequalities whose removal provably (by LP) leaves the feasible set
// unchanged.
RedundancyReport remove_redundant(const HPolytope& h);

struct VertexDiff {
  bool equal = false;
  RatMatrix missing;  // in conjectured, not enumerated
  RatMatrix extra;    // in enumerated, not conjectured
};

VertexDiff polytope_equal(const VPolytope& enumerated, const VPolytope& conjectured);

// ---------------------------------------------------------------------------
// Shared internals (also used by the cd module and tests)

// Integer rows r of the homogenized cone {y : r . y >= 0}; helpers convert
// between polytope inequalities a.x >= b and rows (-b, a).
IntVec homogenize(const Inequality& iq);

struct DdOptions {
  std::string checkpoint_path;
  int checkpoint_every = 0;
  std::size_t max_rays = 0;
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

struct DdResult {
  std::vector<IntVec> rays;  // extreme rays, content-normalized
  std::size_t max_intermediate_rays = 0;
};

// Double description on a pointed full-rank cone {y : rows . y >= 0 }.
// Throws std::domain_error when the rows do not have full column rank.
DdResult dd_cone(const std::vector<IntVec>& rows, const DdOptions& opts = {});

}  // namespace dwf

// The polytope C_d of probability tables with non-negative W under every
// Wigner definition, its d^(d+1) half-space description, the conjectured
// vertex set (one vertex per MUB basis state), and the verification that the
// two descriptions agree.
//
// Coordinates: the (d+1) x d table p_{i,j} is reduced to dimension d^2 - 1 by
// eliminating the last column, p_{i,d} = 1 - sum_{j<d} p_{i,j}; coordinate
// (i, j), 0-based with j < d-1, maps to index i*(d-1) + j. One inequality per
// tuple (j_1..j_{d+1}) in {1..d}^{d+1}: sum_i p_{i,j_i} >= 1, tuples in
// lexicographic order.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwf/polytope.hpp"
#include "dwf/wigner.hpp"

namespace dwf {

struct CdSystem {
  int d = 0;
  HPolytope h;  // d^(d+1) integer inequalities in dimension d^2 - 1

  int coord(int i, int j) const { return i * (d - 1) + j; }
  // tuple of the k-th inequality (0-based entries), lexicographic order
  std::vector<int> tuple_of(std::size_t k) const;
  std::size_t index_of(const std::vector<int>& tuple) const;
};

CdSystem build_cd_inequalities(int d);  // d in {2,3,4,5}

// The d(d+1) conjectured vertices: vertex (i0, j0) has p_{i0,j} = delta_{j,j0}
// and p_{i,j} = 1/d elsewhere, in reduced coordinates.
struct LabeledVertex {
  int basis = 0;   // i0, 0-based
  int vector = 0;  // j0, 0-based
  RatVec point;
};
std::vector<LabeledVertex> conjectured_vertex_list(int d);
VPolytope conjectured_vertices(int d);

struct EasyDirectionReport {
  bool ok = false;
  // per conjectured vertex: number of tight inequalities and rank of the
  // tight normals (a vertex needs rank d^2 - 1)
  std::vector<std::size_t> tight_counts;
  std::vector<int> tight_ranks;
  std::string failure;
};

// Checks that every conjectured vertex satisfies every inequality with value
// exactly 1 or 2 and has tight-set rank d^2 - 1 (so each genuinely is a
// vertex of C_d). Linear scan, parallelized over vertices.
EasyDirectionReport easy_direction_check(int d, int threads = 1);

enum class CdBackend { dd, pivot };

struct ConjectureReport {
  int d = 0;
  CdBackend backend = CdBackend::dd;
  bool bounded = false;
  bool equal = false;
  std::size_t inequality_count = 0;
  std::size_t enumerated_count = 0;
  std::size_t conjectured_count = 0;
  std::vector<std::size_t> vertex_tight_counts;  // per enumerated vertex
  RatMatrix vertices;                            // enumerated, sorted
  RatMatrix missing, extra;                      // diff when not equal
  std::int64_t bounded_ms = 0, enumeration_ms = 0, compare_ms = 0;
  std::size_t max_intermediate_rays = 0;
};

struct VerifyOptions {
  CdBackend backend = CdBackend::dd;
  std::string checkpoint_path;
  int checkpoint_every = 0;
  std::size_t max_rays = 0;  // 0 = unlimited
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

// is_bounded + vertex_enumeration + exact comparison against the conjectured
// vertex list.
ConjectureReport verify_conjecture(int d, const VerifyOptions& opts = {});

// ---------------------------------------------------------------------------
// Membership

enum class CdVerdict { in, out };

struct MembershipCertificate {
  CdVerdict verdict = CdVerdict::out;
  // OUT: the violated tuple (0-based entries), its value sum_i p_{i,t_i} and
  // violation 1 - value (> 0 exact, or > tol in float mode)
  std::vector<int> violated_tuple;
  Rational tuple_value;
  Rational violation;
  // IN: exact convex weights over the conjectured vertices; each entry is
  // ((i0, j0), weight). Valid as a C_d certificate given the verified
  // conjecture for this d when from_conjectured_hull is set; a direct check
  // of all inequalities (no conjecture needed) otherwise.
  std::vector<std::pair<std::pair<int, int>, Rational>> weights;
  bool from_conjectured_hull = false;
  double rationalization_error = 0;  // float mode only
};

struct CdMembershipOptions {
  bool exact = true;          // float mode rationalizes the input first
  double tol = 0;             // float mode: violations <= tol are not OUT
  Int max_denominator = Int(1000000000);
};

MembershipCertificate cd_membership(const PMatrix& p, const CdMembershipOptions& opts = {});

// Reduced coordinates of an exact p table (drops column d-1 of each row).
RatVec reduce_p_table(const std::vector<RatVec>& rows);

}  // namespace dwf

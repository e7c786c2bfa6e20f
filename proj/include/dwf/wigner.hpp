// Wigner-function definitions over the finite phase space: the assignment of
// bases to striations and basis vectors to lines, probability tables p_{i,j},
// and the quasi-probability array W.
//
// A WignerTable is stored row-major with cell (r, c) = W at phase-space point
// (q = c, p = r), so the top-left cell is the origin. Under the canonical
// definition (identity assignments) the qubit table obeys
//   W[0][0] = (p_{1,1} + p_{2,1} + p_{3,1} - 1)/2
// and its three companions; other labelings of the same class differ only by
// the striation/basis and line/vector permutations carried in the definition.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwf/mub.hpp"
#include "dwf/phasespace.hpp"
#include "dwf/rational.hpp"

namespace dwf {

struct DensityMatrix {
  int d = 0;
  CMatrix rho;

  // Validates Hermiticity (1e-10), unit trace (1e-10) and spectrum >= -1e-9.
  static DensityMatrix validated(CMatrix m);
  double min_eigenvalue() const;
};

// Deterministic random density matrix: G G^dagger / tr from a seeded complex
// Gaussian G.
DensityMatrix random_state(int d, std::uint64_t seed);

struct PMatrix {
  int d = 0;
  bool exact = false;
  std::vector<std::vector<double>> rows;  // (d+1) x d
  std::vector<RatVec> rows_exact;         // set when exact

  double at(int i, int j) const { return rows[i][j]; }
  static PMatrix from_float(std::vector<std::vector<double>> rows);
  static PMatrix from_exact(std::vector<RatVec> rows);
};

struct WignerDefinition {
  int d = 0;
  // basis i is associated with striation striation_perm[i]
  std::vector<int> striation_perm;
  // basis vector j of basis i is associated with line line_perms[i][j]
  std::vector<std::vector<int>> line_perms;

  static WignerDefinition canonical(int d);
  bool valid() const;
  // inverse maps: striation s -> basis, (basis, line) -> vector
  std::vector<int> striation_inverse() const;
  std::vector<std::vector<int>> line_inverses() const;

  bool operator==(const WignerDefinition&) const = default;
};

struct WignerTable {
  int d = 0;
  std::vector<std::vector<double>> w;        // w[r][c] = W(q = c, p = r)
  std::vector<RatVec> w_exact;               // populated on the exact path
  bool exact = false;

  double at(int q_index, int p_index) const { return w[p_index][q_index]; }
  double sum() const;
  double min_entry() const;
  double negative_sum() const;  // sum of the negative entries
};

// p_{i,j} = <a_ij| rho |a_ij>; rows indexed by basis.
PMatrix p_matrix_from_state(const DensityMatrix& rho, const MubSet& mubs);

// W_alpha = (1/d) [ sum over the d+1 lines through alpha of the assigned
// probability - 1 ].
WignerTable wigner_from_p(const PMatrix& p, const WignerDefinition& defn, const StriationSet& s);

// max over lines of | sum_{alpha in line} W_alpha - p(assigned vector) |
double line_sum_check(const WignerTable& w, const WignerDefinition& defn, const StriationSet& s,
                      const PMatrix& p);

// The four explicit qubit formulas; agrees with wigner_from_p under the
// canonical definition.
WignerTable qubit_closed_form(const PMatrix& p);

// rho = sum_{ij} p_ij |a_ij><a_ij| - I. Trace is 1 by construction; the
// spectrum is reported, not enforced (corner tables are legitimately
// nonphysical).
struct StateReconstruction {
  CMatrix rho;
  double min_eigenvalue = 0;
};
StateReconstruction state_from_p(const PMatrix& p, const MubSet& mubs);

// A_alpha = sum_{lines through alpha} Pi_line - I; Tr(rho A_alpha)/d = W_alpha.
CMatrix phase_point_operator(const PhasePoint& alpha, const WignerDefinition& defn,
                             const StriationSet& s, const MubSet& mubs);

// Deterministic enumeration of all (d+1)!(d!)^(d+1) definitions,
// lexicographic over permutation encodings; the first is the canonical one.
class DefinitionEnumerator {
 public:
  // Throws when the total count exceeds cap.
  explicit DefinitionEnumerator(int d, std::int64_t cap = 1'000'000);

  static Int count(int d);

  bool done() const { return done_; }
  const WignerDefinition& current() const { return current_; }
  void advance();

 private:
  WignerDefinition current_;
  bool done_ = false;
};

// Seeded random definition (uniform over the full class).
WignerDefinition random_definition(int d, std::uint64_t seed);

// Non-negativity constraints W_alpha >= 0 of a definition, written in the
// reduced coordinates p_{i,j}, j < d (column d eliminated by row
// normalization): one integer inequality a.x >= b per phase-space point.
struct IntInequality {
  IntVec a;
  Int b;
  bool operator==(const IntInequality&) const = default;
};
std::vector<IntInequality> nonnegativity_system(const WignerDefinition& defn,
                                                const StriationSet& s);

// Groups the 48 qubit definitions by their canonicalized non-negativity
// system and enumerates each class's vertex set; exactly two classes arise
// (the T1 and T2 tetrahedra).
struct DefinitionClass {
  std::vector<IntInequality> system;       // canonical (sorted) inequality rows
  RatMatrix vertices;                      // exact, lexicographically sorted
  std::vector<std::int64_t> definition_indices;  // enumeration indices of members
};
std::vector<DefinitionClass> classify_qubit_definitions(const StriationSet& s);

}  // namespace dwf

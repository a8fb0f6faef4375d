#pragma once

#include <vector>

#include "lsa/superalgebra.hpp"

namespace lsa {

/// Linear map L -> L of a declared parity; matrix column j is the image of b_j.
struct GradedLinearMap {
  Matrix matrix;
  Parity parity = Parity::Even;

  /// Zero outside the blocks allowed by the declared parity.
  bool respects_parity(SuperDim sdim) const;
};

/// Der(L) or one of its graded subspaces. Each parity part is kept both as a
/// list of maps and as an echelon basis over the parity-compatible matrix
/// entries (row-major order), which is what membership tests run against.
struct DerivationSpace {
  SuperDim ambient;
  std::vector<GradedLinearMap> even_basis;
  std::vector<GradedLinearMap> odd_basis;
  EchelonBasis even_coords;
  EchelonBasis odd_coords;

  SuperDim sdim() const { return {even_basis.size(), odd_basis.size()}; }
  bool contains(const GradedLinearMap& D) const;
};

/// Entries (row, col) of a map of the given parity that may be nonzero, in
/// row-major order.
std::vector<std::pair<std::size_t, std::size_t>> compatible_entries(SuperDim sdim, Parity parity);

/// Coordinates of D over compatible_entries(sdim, D.parity), or nullopt if D
/// has a nonzero entry outside them.
std::optional<Row> flatten(const GradedLinearMap& D, SuperDim sdim);

/// D[x,y] = [Dx, y] + (-1)^{|D||x|}[x, Dy] on every basis pair.
bool satisfies_derivation_law(const LieSuperalgebra& L, const GradedLinearMap& D);

/// Solves the superderivation law for each parity over the compatible entries.
DerivationSpace derivation_space(const LieSuperalgebra& L);

/// [D, E] = DE - (-1)^{|D||E|} ED.
GradedLinearMap der_bracket(const GradedLinearMap& D, const GradedLinearMap& E);

/// ad(L), spanned by ad_{b_i} with parity |b_i|.
DerivationSpace inner_derivations(const LieSuperalgebra& L);

struct IdSpaces {
  DerivationSpace id;       // D(L) ⊆ L^2
  DerivationSpace id_star;  // additionally D(Z(L)) = 0
};

IdSpaces id_star(const LieSuperalgebra& L);

struct IdStarBoundReport {
  SuperDim sdim_ad;
  SuperDim sdim_id_star;
  SuperDim sdim_id;
  SuperDim sdim_der;
  SuperDim generator_pair;  // of L/Z(L)
  SuperDim lambda;
  bool chain_holds = false;  // ad <= ID* <= ID <= Der componentwise
  bool bound_holds = false;  // ID* <= lambda(L^2, p, q)
};

/// Requires nilpotent L (throws UnsupportedError otherwise).
IdStarBoundReport idstar_bound_check(const LieSuperalgebra& L);

}  // namespace lsa

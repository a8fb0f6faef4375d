#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/superalgebra.hpp"

namespace lsa {

/// The requested computation is not defined for this input (for example a
/// generator pair of a non-nilpotent algebra, or an unclassified st value).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Signals a bug or a sign-convention
/// mismatch, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// L^2, the span of all brackets of basis pairs.
GradedSubspace derived_subalgebra(const LieSuperalgebra& L);

/// Z(L), solved separately for its even and odd parts.
GradedSubspace center(const LieSuperalgebra& L);

/// Z_1(L), Z_2(L), ..., Z_k(L) where Z_i/Z_{i-1} = Z(L/Z_{i-1}) and k is the
/// first index with Z_{k+1} = Z_k. For nilpotent L the last entry is L.
/// The zero algebra yields an empty chain.
std::vector<GradedSubspace> upper_central_series(const LieSuperalgebra& L);

/// Least k with Z_k(L) = L, or nullopt when the series stops below L.
std::optional<std::size_t> nilpotency_class(const LieSuperalgebra& L);
bool is_nilpotent(const LieSuperalgebra& L);

/// Z(L) contained in L^2.
bool is_stem(const LieSuperalgebra& L);

struct StemDecomposition {
  LieSuperalgebra stem;          // T, containing L^2
  GradedSubspace stem_subspace;  // T inside L
  GradedSubspace abelian_part;   // A, a complement of L^2 ∩ Z(L) in Z(L)
  SuperDim abelian_sdim;
};

/// L = T ⊕ A with A central and Z(T) = L^2 ∩ Z(L). Throws InternalError if
/// the identity fails on the constructed T.
StemDecomposition stem_decomposition(const LieSuperalgebra& L);

/// sdim L/L^2. Throws UnsupportedError unless L is nilpotent.
SuperDim generator_pair(const LieSuperalgebra& L);

/// (p dim K_0 + q dim K_1, q dim K_0 + p dim K_1).
SuperDim lambda(SuperDim k, std::size_t p, std::size_t q);

/// lambda(L^2, p, q) - sdim L/Z(L) with (p|q) the generator pair of L/Z(L).
/// Throws UnsupportedError for non-nilpotent L and InternalError if a
/// component would be negative.
SuperDim st(const LieSuperalgebra& L);

struct SchurBoundReport {
  SuperDim sdim_mod_center;
  SuperDim generator_pair;  // of L/Z(L)
  SuperDim sdim_derived;
  SuperDim lambda;
  bool holds = false;
};

SchurBoundReport schur_bound_check(const LieSuperalgebra& L);

struct LadderStep {
  std::size_t min_derived_dim;  // hypothesis: dim L^2 >= min_derived_dim
  std::size_t min_t;            // conclusion: t(L) >= min_t
  bool applies = false;
  bool holds = true;
};

struct PropositionAudit {
  std::size_t derived_dim = 0;
  SuperDim st;
  std::size_t t = 0;
  std::vector<LadderStep> steps;

  bool ok() const;
};

/// dim L^2 >= 2 => t >= 1, >= 3 => t >= 2, >= 4 => t >= 3.
PropositionAudit proposition_audit(const LieSuperalgebra& L);

struct InvariantReport {
  std::string name;
  SuperDim sdim;
  SuperDim sdim_derived;
  SuperDim sdim_center;
  SuperDim sdim_mod_center;
  std::vector<SuperDim> central_series;
  std::optional<std::size_t> nilpotency_class;
  bool is_stem = false;
  // Defined for nilpotent L only. generator_pair is that of L/Z(L).
  std::optional<SuperDim> generator_pair;
  std::optional<SuperDim> lambda;
  std::optional<SuperDim> st;
  std::optional<std::size_t> t_scalar;
};

InvariantReport invariant_report(const LieSuperalgebra& L);

/// A family representative T ⊕ A(a|b) returned by classify_by_st.
struct ClassifiedInstance {
  std::string family;  // e.g. "(4|0)_2 + A(k-4|l)"
  std::string base;    // name of T
  SuperDim padding;    // (a|b)
  LieSuperalgebra algebra;
};

/// Expands the classification of nilpotent superalgebras by st at the given
/// superdimension. Matches are invariant-level, not isomorphism tests. Each
/// returned instance has its st and sdim recomputed before return. Throws
/// UnsupportedError if st is outside {(0,0),(1,0),(0,1),(2,0),(0,2),(1,1)}.
std::vector<ClassifiedInstance> classify_by_st(SuperDim st_value, SuperDim sdim);

bool is_classified_st(SuperDim st_value);

/// A finite family T ⊕ A(k-a|l-b) of the classification: base T is a catalog
/// entry of superdimension (a|b). The st = (0,0) families (abelian and
/// Heisenberg) are parametric and not listed here.
struct StemFamily {
  SuperDim st;
  std::string base;
  SuperDim base_sdim;
};

const std::vector<StemFamily>& classified_stem_families();

/// "T + A(k-a|l-b)" label of a family with base superdimension (a|b).
std::string family_label(const std::string& base, SuperDim base_sdim);

}  // namespace lsa

#include "lsa/derivations.hpp"

#include <stdexcept>

#include "lsa/invariants.hpp"

namespace lsa {

namespace {

Parity parity_at(SuperDim s, std::size_t i) { return i < s.even ? Parity::Even : Parity::Odd; }

struct Unknowns {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::vector<long> index;  // n*n, -1 where the entry is forced to zero
  std::size_t n = 0;

  Unknowns(SuperDim s, Parity parity) : entries(compatible_entries(s, parity)), index(s.total() * s.total(), -1), n(s.total()) {
    for (std::size_t u = 0; u < entries.size(); ++u) index[entries[u].first * n + entries[u].second] = static_cast<long>(u);
  }
  long at(std::size_t row, std::size_t col) const { return index[row * n + col]; }
};

GradedLinearMap unflatten(std::span<const Scalar> coords, const Unknowns& u, Parity parity) {
  GradedLinearMap D{Matrix(u.n, u.n), parity};
  for (std::size_t k = 0; k < u.entries.size(); ++k) D.matrix(u.entries[k].first, u.entries[k].second) = coords[k];
  return D;
}

void add(Row& eq, long unknown, const Scalar& value) {
  if (unknown >= 0 && sgn(value) != 0) eq[static_cast<std::size_t>(unknown)] += value;
}

void push_if_nonzero(Matrix& m, const Row& eq) {
  for (const auto& x : eq) {
    if (sgn(x) != 0) {
      m.append_row(eq);
      return;
    }
  }
}

// Superderivation law on basis pairs i <= j; the remaining pairs follow from
// super-skew-symmetry of the bracket.
void append_law(const LieSuperalgebra& L, const Unknowns& u, Parity alpha, Matrix& system) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int s = sign(alpha, L.parity(i));
      for (std::size_t k = 0; k < n; ++k) {
        Row eq(u.entries.size());
        // (D[b_i, b_j])_k
        for (std::size_t l = 0; l < n; ++l) add(eq, u.at(k, l), L.structure_constant(i, j, l));
        // -([D b_i, b_j])_k - s ([b_i, D b_j])_k
        for (std::size_t a = 0; a < n; ++a) {
          add(eq, u.at(a, i), -L.structure_constant(a, j, k));
          add(eq, u.at(a, j), -s * L.structure_constant(i, a, k));
        }
        push_if_nonzero(system, eq);
      }
    }
}

struct Constraints {
  bool image_in_derived = false;
  bool kills_center = false;
};

void solve_part(const LieSuperalgebra& L, Parity alpha, Constraints extra, std::vector<GradedLinearMap>& maps,
                EchelonBasis& coords) {
  const Unknowns u(L.sdim(), alpha);
  Matrix system(0, u.entries.size());
  append_law(L, u, alpha, system);
  const std::size_t n = L.dim();

  if (extra.image_in_derived) {
    // v ∈ L^2 iff every annihilating functional of L^2 vanishes on v.
    const auto derived = derived_subalgebra(L).basis();
    const EchelonBasis annihilator = kernel_basis(Matrix::from_rows(n, derived));
    for (std::size_t r = 0; r < annihilator.dim(); ++r)
      for (std::size_t b = 0; b < n; ++b) {
        Row eq(u.entries.size());
        for (std::size_t a = 0; a < n; ++a) add(eq, u.at(a, b), annihilator.matrix(r, a));
        push_if_nonzero(system, eq);
      }
  }
  if (extra.kills_center) {
    for (const auto& z : center(L).basis())
      for (std::size_t a = 0; a < n; ++a) {
        Row eq(u.entries.size());
        for (std::size_t b = 0; b < n; ++b) add(eq, u.at(a, b), z[b]);
        push_if_nonzero(system, eq);
      }
  }

  coords = kernel_basis(system);
  maps.clear();
  for (std::size_t r = 0; r < coords.dim(); ++r) maps.push_back(unflatten(coords.matrix.row(r), u, alpha));
}

DerivationSpace solve(const LieSuperalgebra& L, Constraints extra) {
  DerivationSpace space;
  space.ambient = L.sdim();
  solve_part(L, Parity::Even, extra, space.even_basis, space.even_coords);
  solve_part(L, Parity::Odd, extra, space.odd_basis, space.odd_coords);
  return space;
}

bool space_within(const DerivationSpace& a, const DerivationSpace& b) {
  return is_subspace(a.even_coords, b.even_coords) && is_subspace(a.odd_coords, b.odd_coords);
}

}  // namespace

bool GradedLinearMap::respects_parity(SuperDim sdim) const {
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c)
      if (sgn(matrix(r, c)) != 0 && parity_at(sdim, r) != parity_at(sdim, c) + parity) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> compatible_entries(SuperDim sdim, Parity parity) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = sdim.total();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (parity_at(sdim, r) == parity_at(sdim, c) + parity) out.emplace_back(r, c);
  return out;
}

std::optional<Row> flatten(const GradedLinearMap& D, SuperDim sdim) {
  if (D.matrix.rows() != sdim.total() || D.matrix.cols() != sdim.total())
    throw std::invalid_argument("flatten: map size does not match superdimension");
  if (!D.respects_parity(sdim)) return std::nullopt;
  Row out;
  for (const auto& [r, c] : compatible_entries(sdim, D.parity)) out.push_back(D.matrix(r, c));
  return out;
}

bool DerivationSpace::contains(const GradedLinearMap& D) const {
  const auto coords = flatten(D, ambient);
  if (!coords) return false;
  return membership(*coords, D.parity == Parity::Even ? even_coords : odd_coords).has_value();
}

bool satisfies_derivation_law(const LieSuperalgebra& L, const GradedLinearMap& D) {
  const std::size_t n = L.dim();
  if (D.matrix.rows() != n || D.matrix.cols() != n) throw std::invalid_argument("derivation law: size mismatch");
  std::vector<Row> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = D.matrix.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sign(D.parity, L.parity(i));
    Row unit_i(n);
    unit_i[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Row unit_j(n);
      unit_j[j] = 1;
      const Row lhs = matvec(D.matrix, L.bracket_of_basis(i, j));
      const Row first = L.bracket(images[i], unit_j);
      const Row second = L.bracket(unit_i, images[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] != first[k] + s * second[k]) return false;
      }
    }
  }
  return true;
}

DerivationSpace derivation_space(const LieSuperalgebra& L) { return solve(L, {}); }

GradedLinearMap der_bracket(const GradedLinearMap& D, const GradedLinearMap& E) {
  if (D.matrix.rows() != E.matrix.rows() || D.matrix.cols() != E.matrix.cols())
    throw std::invalid_argument("der_bracket: size mismatch");
  const int s = sign(D.parity, E.parity);
  return {D.matrix * E.matrix - (E.matrix * D.matrix).scaled(s), D.parity + E.parity};
}

DerivationSpace inner_derivations(const LieSuperalgebra& L) {
  DerivationSpace space;
  space.ambient = L.sdim();
  std::vector<Row> even;
  std::vector<Row> odd;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const GradedLinearMap ad{L.adjoint(i), L.parity(i)};
    const auto coords = flatten(ad, L.sdim());
    if (!coords) throw InternalError("inner_derivations: ad of " + L.basis_name(i) + " breaks the grading");
    (ad.parity == Parity::Even ? even : odd).push_back(*coords);
  }
  const Unknowns ue(L.sdim(), Parity::Even);
  const Unknowns uo(L.sdim(), Parity::Odd);
  space.even_coords = span_of(ue.entries.size(), even);
  space.odd_coords = span_of(uo.entries.size(), odd);
  for (std::size_t r = 0; r < space.even_coords.dim(); ++r)
    space.even_basis.push_back(unflatten(space.even_coords.matrix.row(r), ue, Parity::Even));
  for (std::size_t r = 0; r < space.odd_coords.dim(); ++r)
    space.odd_basis.push_back(unflatten(space.odd_coords.matrix.row(r), uo, Parity::Odd));
  return space;
}

IdSpaces id_star(const LieSuperalgebra& L) {
  return {solve(L, {true, false}), solve(L, {true, true})};
}

IdStarBoundReport idstar_bound_check(const LieSuperalgebra& L) {
  const SchurBoundReport schur = schur_bound_check(L);
  const DerivationSpace der = derivation_space(L);
  const DerivationSpace ad = inner_derivations(L);
  const IdSpaces ids = id_star(L);

  IdStarBoundReport r;
  r.sdim_ad = ad.sdim();
  r.sdim_id_star = ids.id_star.sdim();
  r.sdim_id = ids.id.sdim();
  r.sdim_der = der.sdim();
  r.generator_pair = schur.generator_pair;
  r.lambda = schur.lambda;
  r.chain_holds = r.sdim_ad <= r.sdim_id_star && r.sdim_id_star <= r.sdim_id && r.sdim_id <= r.sdim_der &&
                  space_within(ad, ids.id_star) && space_within(ids.id_star, ids.id) && space_within(ids.id, der);
  r.bound_holds = r.sdim_id_star <= r.lambda;
  return r;
}

}  // namespace lsa

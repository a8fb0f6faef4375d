#include "lsa/invariants.hpp"

#include <algorithm>

namespace lsa {

namespace {

// Kernel of v -> ([v, b_j])_j restricted to basis indices [first, first+count).
EchelonBasis centralizing_block(const LieSuperalgebra& L, std::size_t first, std::size_t count) {
  const std::size_t n = L.dim();
  Matrix equations(0, count);
  Row eq(count);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      bool nonzero = false;
      for (std::size_t i = 0; i < count; ++i) {
        eq[i] = L.structure_constant(first + i, j, k);
        nonzero = nonzero || sgn(eq[i]) != 0;
      }
      if (nonzero) equations.append_row(eq);
    }
  return kernel_basis(equations);
}

// Extends `base` (echelon) by vectors from `candidates` until the span is
// reached; returns the vectors that were added.
std::vector<Row> extend(EchelonBasis base, const std::vector<Row>& candidates) {
  std::vector<Row> added;
  for (const auto& v : candidates) {
    if (membership(v, base)) continue;
    added.push_back(v);
    Matrix m = base.matrix;
    m.append_row(v);
    base = rref(std::move(m));
  }
  return added;
}

std::vector<Row> units(std::size_t n) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < n; ++i) {
    Row v(n);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

GradedSubspace derived_subalgebra(const LieSuperalgebra& L) {
  std::vector<Row> brackets;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) brackets.push_back(L.bracket_of_basis(i, j));
  return GradedSubspace::span(L.sdim(), brackets);
}

GradedSubspace center(const LieSuperalgebra& L) {
  const SuperDim s = L.sdim();
  return {centralizing_block(L, 0, s.even), centralizing_block(L, s.even, s.odd)};
}

std::vector<GradedSubspace> upper_central_series(const LieSuperalgebra& L) {
  std::vector<GradedSubspace> chain;
  if (L.dim() == 0) return chain;
  const GradedSubspace whole = GradedSubspace::whole(L.sdim());
  GradedSubspace previous = GradedSubspace::zero(L.sdim());
  while (true) {
    const Quotient q = quotient(L, previous);
    GradedSubspace next = q.preimage(center(q.algebra), previous, L.sdim());
    if (!chain.empty() && next == previous) break;
    chain.push_back(next);
    if (next == whole || next == previous) break;
    previous = std::move(next);
  }
  return chain;
}

std::optional<std::size_t> nilpotency_class(const LieSuperalgebra& L) {
  if (L.dim() == 0) return 0;
  const auto chain = upper_central_series(L);
  if (chain.back() == GradedSubspace::whole(L.sdim())) return chain.size();
  return std::nullopt;
}

bool is_nilpotent(const LieSuperalgebra& L) { return nilpotency_class(L).has_value(); }

bool is_stem(const LieSuperalgebra& L) { return derived_subalgebra(L).contains(center(L)); }

StemDecomposition stem_decomposition(const LieSuperalgebra& L) {
  const SuperDim s = L.sdim();
  const GradedSubspace derived = derived_subalgebra(L);
  const GradedSubspace z = center(L);
  const GradedSubspace m = intersect(derived, z);

  // A: complement of L^2 ∩ Z(L) inside Z(L).
  const EchelonBasis a_even = span_of(s.even, extend(m.even_part(), z.even_part().rows()));
  const EchelonBasis a_odd = span_of(s.odd, extend(m.odd_part(), z.odd_part().rows()));
  const GradedSubspace a(a_even, a_odd);

  // T: L^2 plus a complement of A + L^2 in L.
  const GradedSubspace a_plus_derived = sum(a, derived);
  const GradedSubspace c(span_of(s.even, extend(a_plus_derived.even_part(), units(s.even))),
                         span_of(s.odd, extend(a_plus_derived.odd_part(), units(s.odd))));
  const GradedSubspace t = sum(derived, c);

  const bool is_trivial = a.sdim() == SuperDim{};
  LieSuperalgebra stem = restrict_to(L, t, is_trivial ? L.name() : "T(" + L.name() + ")");

  // Z(T), mapped back into L, must equal L^2 ∩ Z(L).
  const auto t_basis = t.basis();
  std::vector<Row> center_in_l;
  for (const auto& w : center(stem).basis()) {
    Row v(L.dim());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (sgn(w[i]) == 0) continue;
      for (std::size_t c2 = 0; c2 < v.size(); ++c2) v[c2] += w[i] * t_basis[i][c2];
    }
    center_in_l.push_back(std::move(v));
  }
  if (GradedSubspace::span(s, center_in_l) != m)
    throw InternalError("stem_decomposition: Z(T) differs from L^2 ∩ Z(L) for " + L.name());
  if (!(t.sdim() + a.sdim() == s) || intersect(t, a).sdim() != SuperDim{})
    throw InternalError("stem_decomposition: T and A do not split " + L.name());

  return {std::move(stem), t, a, a.sdim()};
}

SuperDim generator_pair(const LieSuperalgebra& L) {
  if (!is_nilpotent(L)) throw UnsupportedError("generator pair requested for non-nilpotent " + L.name());
  return L.sdim() - derived_subalgebra(L).sdim();
}

SuperDim lambda(SuperDim k, std::size_t p, std::size_t q) {
  return {p * k.even + q * k.odd, q * k.even + p * k.odd};
}

SchurBoundReport schur_bound_check(const LieSuperalgebra& L) {
  if (!is_nilpotent(L)) throw UnsupportedError("bound check requires a nilpotent algebra: " + L.name());
  const GradedSubspace z = center(L);
  const Quotient q = quotient(L, z);
  SchurBoundReport r;
  r.sdim_mod_center = q.algebra.sdim();
  r.generator_pair = generator_pair(q.algebra);
  r.sdim_derived = derived_subalgebra(L).sdim();
  r.lambda = lambda(r.sdim_derived, r.generator_pair.even, r.generator_pair.odd);
  r.holds = r.sdim_mod_center <= r.lambda;
  return r;
}

SuperDim st(const LieSuperalgebra& L) {
  const SchurBoundReport r = schur_bound_check(L);
  if (!r.holds)
    throw InternalError("st: negative component for " + L.name() + ": lambda " + to_string(r.lambda) +
                        " vs sdim L/Z " + to_string(r.sdim_mod_center));
  return r.lambda - r.sdim_mod_center;
}

bool PropositionAudit::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const LadderStep& s) { return s.holds; });
}

PropositionAudit proposition_audit(const LieSuperalgebra& L) {
  PropositionAudit audit;
  audit.derived_dim = derived_subalgebra(L).sdim().total();
  audit.st = st(L);
  audit.t = audit.st.total();
  for (std::size_t k = 1; k <= 3; ++k) {
    LadderStep step{k + 1, k, audit.derived_dim >= k + 1, true};
    step.holds = !step.applies || audit.t >= step.min_t;
    audit.steps.push_back(step);
  }
  return audit;
}

InvariantReport invariant_report(const LieSuperalgebra& L) {
  InvariantReport r;
  r.name = L.name();
  r.sdim = L.sdim();
  r.sdim_derived = derived_subalgebra(L).sdim();
  r.sdim_center = center(L).sdim();
  r.sdim_mod_center = r.sdim - r.sdim_center;
  for (const auto& z : upper_central_series(L)) r.central_series.push_back(z.sdim());
  r.nilpotency_class = nilpotency_class(L);
  r.is_stem = is_stem(L);
  if (r.nilpotency_class) {
    const SchurBoundReport b = schur_bound_check(L);
    r.generator_pair = b.generator_pair;
    r.lambda = b.lambda;
    r.st = st(L);
    r.t_scalar = r.st->total();
  }
  return r;
}

}  // namespace lsa

#pragma once

// Shared test helpers: brute-force oracles that work directly from structure
// constants (no library subspace machinery) and seeded random generators.

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

namespace lsa {
inline std::ostream& operator<<(std::ostream& os, SuperDim d) { return os << to_string(d); }
}  // namespace lsa

namespace oracle {

using lsa::LieSuperalgebra;
using lsa::Scalar;
using lsa::SuperDim;
using Rows = std::vector<std::vector<Scalar>>;

// Plain Gaussian elimination on a copy; independent of lsa::rref.
inline std::size_t rank(Rows m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline bool odd(const LieSuperalgebra& L, std::size_t i) { return i >= L.sdim().even; }

// All brackets of basis pairs.
inline Rows bracket_rows(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  Rows out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = L.structure_constant(i, j, k);
      out.push_back(std::move(v));
    }
  return out;
}

// sdim of the span of vectors that are each homogeneous or split into parts.
inline SuperDim graded_span_sdim(const LieSuperalgebra& L, const Rows& vectors) {
  const std::size_t n = L.dim();
  const std::size_t e = L.sdim().even;
  Rows even, oddp;
  for (const auto& v : vectors) {
    even.emplace_back(v.begin(), v.begin() + e);
    oddp.emplace_back(v.begin() + e, v.begin() + n);
  }
  return {e == 0 ? 0 : rank(even), n == e ? 0 : rank(oddp)};
}

inline SuperDim derived_sdim(const LieSuperalgebra& L) { return graded_span_sdim(L, bracket_rows(L)); }

// Basis of Z(L) split by parity: x in a parity block with [x, b_j] = 0 for all j.
inline Rows center_basis(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  Rows basis;
  for (int part = 0; part < 2; ++part) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (odd(L, i) == (part == 1)) idx.push_back(i);
    if (idx.empty()) continue;
    // Equations: for each (j, k), sum_i x_i c[i][j][k] = 0. Reduce to RREF and
    // read off a kernel basis.
    Rows eq;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row;
        for (auto i : idx) row.push_back(L.structure_constant(i, j, k));
        eq.push_back(std::move(row));
      }
    const std::size_t cols = idx.size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < eq.size(); ++c) {
      std::size_t p = r;
      while (p < eq.size() && eq[p][c] == 0) ++p;
      if (p == eq.size()) continue;
      std::swap(eq[p], eq[r]);
      const Scalar inv = 1 / eq[r][c];
      for (auto& x : eq[r]) x *= inv;
      for (std::size_t i = 0; i < eq.size(); ++i) {
        if (i == r || eq[i][c] == 0) continue;
        const Scalar f = eq[i][c];
        for (std::size_t k = 0; k < cols; ++k) eq[i][k] -= f * eq[r][k];
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t free = 0; free < cols; ++free) {
      if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
      std::vector<Scalar> v(n);
      v[idx[free]] = 1;
      for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[idx[pivots[pr]]] = -eq[pr][free];
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

inline SuperDim center_sdim(const LieSuperalgebra& L) { return graded_span_sdim(L, center_basis(L)); }

// (sdim L/Z, generator pair of L/Z, sdim L^2). (L/Z)^2 = (L^2 + Z)/Z, so the
// generator pair of L/Z is sdim L - sdim(L^2 + Z).
struct Triple {
  SuperDim mod_center, generators, derived;
  friend bool operator==(const Triple&, const Triple&) = default;
};

inline Triple triple(const LieSuperalgebra& L) {
  const SuperDim z = center_sdim(L);
  Rows both = bracket_rows(L);
  for (auto& v : center_basis(L)) both.push_back(v);
  const SuperDim sum = graded_span_sdim(L, both);
  return {L.sdim() - z, L.sdim() - sum, derived_sdim(L)};
}

inline SuperDim st(const LieSuperalgebra& L) {
  const Triple t = triple(L);
  const std::size_t p = t.generators.even, q = t.generators.odd;
  const SuperDim lam{p * t.derived.even + q * t.derived.odd, q * t.derived.even + p * t.derived.odd};
  return lam - t.mod_center;
}

// Dimension of Der(L) by brute force: one unknown per parity-compatible
// matrix entry, law imposed on every ordered basis pair (i, j).
inline SuperDim der_sdim(const LieSuperalgebra& L) {
  const std::size_t n = L.dim();
  SuperDim out;
  for (int alpha = 0; alpha < 2; ++alpha) {
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((odd(L, a) != odd(L, b)) == (alpha == 1)) entries.emplace_back(a, b);
    // Column per unknown: the law residual of the elementary map E_ab.
    Rows cols;
    for (auto [a, b] : entries) {
      std::vector<Scalar> res;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const int s = (alpha == 1 && odd(L, i)) ? -1 : 1;
          for (std::size_t k = 0; k < n; ++k) {
            // E[b_i, b_j] - [E b_i, b_j] - s [b_i, E b_j], with E b_b = b_a.
            Scalar v = k == a ? L.structure_constant(i, j, b) : Scalar(0);
            if (i == b) v -= L.structure_constant(a, j, k);
            if (j == b) v -= s * L.structure_constant(i, a, k);
            res.push_back(v);
          }
        }
      cols.push_back(std::move(res));
    }
    const std::size_t dim = entries.size() - rank(cols);
    (alpha == 0 ? out.even : out.odd) = dim;
  }
  return out;
}

}  // namespace oracle

namespace gen {

// Seeded source of small random inputs. Everything is reproducible from the seed.
struct Source {
  std::mt19937 rng;
  explicit Source(unsigned seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  lsa::Scalar rational() {
    const long den = integer(1, 4);
    lsa::Scalar q(integer(-5, 5), den);
    q.canonicalize();  // mpq_class(p, q) does not reduce; GMP arithmetic expects reduced operands
    return q;
  }

  std::vector<lsa::Scalar> vector(std::size_t n, int zero_bias = 1) {
    std::vector<lsa::Scalar> v(n);
    for (auto& x : v) x = integer(0, zero_bias) == 0 ? rational() : lsa::Scalar(0);
    return v;
  }

  // Homogeneous vector of the given parity in L.
  std::vector<lsa::Scalar> homogeneous(const lsa::LieSuperalgebra& L, bool odd_part) {
    auto v = vector(L.dim(), 0);
    for (std::size_t i = 0; i < L.dim(); ++i)
      if ((i >= L.sdim().even) != odd_part) v[i] = 0;
    return v;
  }

  const lsa::catalog::CatalogEntry& catalog_entry() {
    const auto& all = lsa::catalog::entries();
    return all[index(all.size())];
  }

  // A small valid nilpotent superalgebra: a family member or catalog entry,
  // optionally summed with another piece.
  lsa::LieSuperalgebra nilpotent(std::size_t max_dim = 8) {
    for (;;) {
      auto piece = [&]() -> lsa::LieSuperalgebra {
        switch (integer(0, 4)) {
          case 0: return lsa::heisenberg_even(integer(0, 2), integer(1, 2));
          case 1: return lsa::heisenberg_odd(integer(1, 2));
          case 2: return lsa::tower(integer(1, 3));
          case 3: return lsa::abelian(integer(0, 2), integer(0, 2));
          default: return catalog_entry().algebra;
        }
      };
      auto L = piece();
      if (coin()) L = lsa::direct_sum(L, piece());
      if (L.dim() >= 1 && L.dim() <= max_dim) return L;
    }
  }

  lsa::Matrix matrix(std::size_t rows, std::size_t cols) {
    lsa::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer(0, 2) == 0 ? rational() : lsa::Scalar(0);
    // Occasionally force a dependent row.
    if (rows >= 2 && coin())
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c) - m(1, c);
    return m;
  }
};

}  // namespace gen

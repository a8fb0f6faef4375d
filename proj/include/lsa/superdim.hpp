#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsa {

/// Superdimension pair (even | odd). Ordered componentwise, so two pairs may
/// be incomparable.
struct SuperDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  constexpr std::size_t total() const { return even + odd; }

  friend constexpr bool operator==(SuperDim, SuperDim) = default;
  friend constexpr SuperDim operator+(SuperDim a, SuperDim b) { return {a.even + b.even, a.odd + b.odd}; }
  friend constexpr bool operator<=(SuperDim a, SuperDim b) { return a.even <= b.even && a.odd <= b.odd; }
};

/// Componentwise difference; defined only when b <= a.
inline SuperDim operator-(SuperDim a, SuperDim b) {
  if (!(b <= a)) throw std::domain_error("SuperDim subtraction below zero");
  return {a.even - b.even, a.odd - b.odd};
}

inline std::string to_string(SuperDim d) {
  return "(" + std::to_string(d.even) + "," + std::to_string(d.odd) + ")";
}

}  // namespace lsa

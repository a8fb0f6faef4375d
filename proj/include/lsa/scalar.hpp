#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lsa {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (reduced fraction, positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

/// Parses an optionally signed integer or fraction ("3", "-1/3").
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Scalar> parse_rational(std::string_view text);

}  // namespace lsa

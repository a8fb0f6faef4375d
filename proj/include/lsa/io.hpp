#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lsa/superalgebra.hpp"

namespace lsa::io {

enum class ErrorKind {
  Syntax,
  UnknownName,
  DuplicateName,
  ConflictingRelation,
  BadRational,
  Validation,
};

/// Stable identifier used in CLI diagnostics, e.g. "unknown_name".
std::string_view kind_name(ErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses the algebra text format (see docs/FORMAT.md). Mirror brackets are
/// filled in by super-skew-symmetry and undeclared brackets vanish. With
/// `check_laws` the result must also pass validate().
LieSuperalgebra parse_algebra(std::string_view text, bool check_laws = true);

/// Writes L in the text format, one relation per unordered basis pair.
std::string export_algebra(const LieSuperalgebra& L);

}  // namespace lsa::io

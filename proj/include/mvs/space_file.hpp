#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mvs/errors.hpp"
#include "mvs/mvspace.hpp"

namespace mvs {

/// Malformed space-file text, located at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedSpace {
  std::string name;
  MVSpace space;

  friend bool operator==(const NamedSpace&, const NamedSpace&) = default;
};

/// Grammar (whitespace separated, `#` comments to end of line):
///
///   field Q | field GF <p>
///   ambient <m>
///   omega <w>
///   space <NAME>
///     level <n> span { <vec>* }
///     ...
///   end
///
/// <vec> is "(s,...)" with integer or p/q scalars. Each level lists
/// generators of its whole subspace; counts decrease top-down.
struct SpaceFile {
  Field field;
  std::size_t ambient = 0;
  unsigned omega = 0;
  std::vector<NamedSpace> spaces;

  /// Throws PreconditionError for an unknown name.
  const MVSpace& get(std::string_view name) const;

  friend bool operator==(const SpaceFile&, const SpaceFile&) = default;
};

/// ParseError on malformed text; InvariantViolation when a block is a
/// well-formed but invalid level chain.
SpaceFile parse_space_file(std::string_view text);

/// Canonical text: each level prints the RREF rows of its subspace.
std::string serialize(const SpaceFile& file);
std::string serialize_space(const std::string& name, const MVSpace& v);

}  // namespace mvs

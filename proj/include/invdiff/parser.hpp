#pragma once

#include "invdiff/operators.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invdiff {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct UnknownSymbol : std::runtime_error {
  UnknownSymbol(const std::string& name, std::size_t pos)
      : std::runtime_error("unknown symbol '" + name + "' at position " + std::to_string(pos)),
        symbol(name),
        position(pos) {}
  std::string symbol;
  std::size_t position;
};

/// Previously defined operators that may be referenced by name.
using SymbolTable = std::map<std::string, OreOperator, std::less<>>;

/// Grammar (products are operator composition, `^` binds tightest):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ['^' ['-'] int]
///   atom   := int ['/' int] | 'i' | first | second | 'e(' ['-'] int ')' | D1 | D2 | name | '(' expr ')'
/// Negative powers are only allowed for a single monomial term without derivatives.
OreOperator parse_operator(std::string_view text, const Notation& names, const SymbolTable& symbols = {});

}  // namespace invdiff

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "meadowlab/term.hpp"

namespace meadowlab {

struct ParseError : std::runtime_error {
  ParseError(std::string message, size_t position)
      : std::runtime_error(std::move(message)), position(position) {}
  size_t position;  // byte offset into the input
};

/// Grammar:
///   term  := add
///   add   := mul (("+" | "-") mul)*
///   mul   := unary ("*" unary)*
///   unary := "-" unary | atom "^2" | atom "^-1" | atom
///   atom  := nat | "i" | ident | "inv" "(" term ")" | "(" term ")"
///
/// nat >= 2 desugars to the numeral for that value, "^2" to self-product,
/// "^-1" to inv, binary "-" to adding the negation. "i" is only accepted
/// under the extended signature.
Term parse_term(std::string_view text, Signature allowed = Signature::Plain);

/// Equation text: term "=" term.
Equation parse_equation(std::string_view text, Signature allowed = Signature::Plain);

}  // namespace meadowlab

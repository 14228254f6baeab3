#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace meadowlab {

enum class TermKind : uint8_t { Zero, One, Var, Neg, Add, Mul, Inv, Imaginary };

struct TermNode;

/// Immutable, shareable term over the meadow signature {0, 1, -, +, *, inv},
/// optionally extended with the imaginary unit. Terms are walked
/// recursively; the parser and the schema constructors bound structural
/// depth at 5000, and callers building deeper trees by hand own that risk.
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var only
  Term a;            // unary operand / left child
  Term b;            // right child
};

Term zero();
Term one();
Term imaginary_unit();
Term var(std::string name);  // [a-z][a-z0-9_]*, "i" and "inv" are reserved
Term neg(Term t);
Term add(Term l, Term r);
Term mul(Term l, Term r);
Term inv(Term t);
Term sub(Term l, Term r);  // l + (-r)
Term square(Term t);       // t * t

/// The numeral for n: 0 maps to the constant 0, n+1 to (numeral n) + 1.
/// Left-nested, no folding of 0 + 1 into 1.
Term numeral(uint64_t n);

bool term_equal(const Term& s, const Term& t);
bool contains_imaginary(const Term& t);
std::set<std::string> free_vars(const Term& t);

/// Simultaneous substitution; variables absent from the binding stay put.
Term substitute(const Term& t, const std::map<std::string, Term>& binding);

/// Canonical concrete syntax. Precedence: Neg > Mul > Add, inverse always as
/// inv(...). Nested operands of the same precedence are parenthesized, so the
/// printed string reparses to the identical tree.
std::string print_term(const Term& t);

bool is_valid_var_name(std::string_view name);

enum class Signature : uint8_t { Plain, Extended };

/// lhs = rhs. The signature is Extended exactly when the imaginary unit
/// occurs on either side; make_equation derives it.
struct Equation {
  Term lhs;
  Term rhs;
  Signature signature;
};

Equation make_equation(Term lhs, Term rhs);
std::set<std::string> free_vars(const Equation& e);

}  // namespace meadowlab

#pragma once

#include <string>
#include <vector>

#include "meadowlab/term.hpp"

namespace meadowlab {

/// The ten meadow axioms, in their standard order:
///   1. (x+y)+z = x+(y+z)     6. x*y = y*x
///   2. x+y = y+x             7. 1*x = x
///   3. x+0 = x               8. x*(y+z) = x*y + x*z
///   4. x+(-x) = 0            9. inv(inv(x)) = x
///   5. (x*y)*z = x*(y*z)    10. x*(x*inv(x)) = x
std::vector<Equation> md_axioms();

/// One axiom by 1-based index.
Equation md_axiom(unsigned index);

/// (1 + x1^2 + ... + xn^2) * inv(1 + x1^2 + ... + xn^2) = 1, n >= 1.
Equation l_n(unsigned n);

/// (1 + <numeral n> + x^2) * inv(...) = 1.
Equation h_n(unsigned n);

/// (1 + <numeral n>) * inv(...) = 1; the x = 0 instance of h_n up to the
/// vanished square summand.
Equation c_n(unsigned n);

struct SchemaId {
  enum class Family : uint8_t { Md, L, H, C };
  Family family;
  unsigned parameter;  // Md: 1-based axiom index
};

std::string schema_name(const SchemaId& id);  // "Md:3", "L:2", "H:0", "C:7"
Equation instantiate(const SchemaId& id);

/// Expands a list of schema references into (id, equation) pairs.
/// Accepted forms: "Md" (all ten axioms), "Md:4", "L:2", "H:0..5", "C:7".
std::vector<std::pair<SchemaId, Equation>> parse_schema_list(
    const std::vector<std::string>& specs);

}  // namespace meadowlab

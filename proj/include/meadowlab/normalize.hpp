#pragma once

#include "meadowlab/gaussian.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

/// Rewrites a closed term over the extended signature into the shape
///   l * inv(m) + (p * inv(q)) * i
/// where l, m, p, q are numerals (l and p wrapped in - when the component
/// is negative). The output evaluates to the same Gaussian rational as the
/// input and the map is idempotent on its own outputs.
///
/// Throws EvalError on open terms and length_error when a canonical
/// component is too large to spell out as a numeral.
Term normalize_closed(const Term& t);

/// The Gaussian rational a normalized term denotes (also the value used to
/// build it).
GaussianRational closed_value(const Term& t);

}  // namespace meadowlab

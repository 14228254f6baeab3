#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "meadowlab/eval.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

/// Raised when an exhaustive scan cannot be completed within its assignment
/// budget. Falsification found before the budget runs out is still reported.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr uint64_t kDefaultExhaustiveBudget = 10'000'000;

/// Outcome of checking one equation in one model: satisfied, or falsified
/// with a witness assignment that makes lhs != rhs.
template <class Element>
struct ModelVerdict {
  std::optional<std::map<std::string, Element>> counterexample;

  bool satisfied() const { return !counterexample.has_value(); }
  const std::map<std::string, Element>& witness() const { return *counterexample; }

  static ModelVerdict satisfied_verdict() { return {}; }
  static ModelVerdict falsified(std::map<std::string, Element> w) {
    return {std::move(w)};
  }
};

/// Exhaustive check of e over all assignments into Z/pZ, in lexicographic
/// order (variables sorted by name, values ascending), returning the least
/// counterexample. Scans at most `budget` assignments; if the space is
/// larger and no counterexample shows up in the first `budget`, throws
/// BudgetExceeded rather than certify satisfaction.
ModelVerdict<PrimeFieldElement> satisfies_fp(const Equation& e, uint64_t p,
                                             uint64_t budget = kDefaultExhaustiveBudget);

/// Sampled check in Q0: forced assignments over {0, 1, -1} first, then
/// `samples` pseudo-random rationals (numerators in [-1000, 1000],
/// denominators in [1, 1000]) drawn deterministically from the seed.
/// A satisfied verdict means "no counterexample found", not a proof.
ModelVerdict<Rational> sample_check_q0(const Equation& e, size_t samples,
                                       uint64_t seed);

/// Sampled check in Q0(i): forced assignments over {i, -i, 0, 1, -1} first,
/// then random Gaussian rationals with both components drawn as in Q0.
ModelVerdict<GaussianRational> sample_check_qi(const Equation& e, size_t samples,
                                               uint64_t seed);

}  // namespace meadowlab

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meadowlab/axioms.hpp"
#include "meadowlab/gaussian.hpp"
#include "meadowlab/model_check.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

struct NamedEquation {
  std::string name;
  Equation equation;
};

/// Verdict of the prime-field criterion for a candidate specification E:
/// either some zero-totalized prime field satisfies all of E (so Md + E
/// cannot pin down the totalized rationals), or no such prime exists below
/// the bound. The second outcome is evidence, never a proof: the criterion
/// quantifies over all primes.
struct SpecVerdict {
  enum class Kind : uint8_t { NotASpec, NoWitnessBelow };
  Kind kind;
  uint64_t witness_prime = 0;  // meaningful for NotASpec only
  uint64_t bound = 0;
};

struct EquationVerdict {
  std::string name;
  bool satisfied;
  std::map<std::string, uint64_t> counterexample;  // empty when satisfied
};

struct SpecCheckReport {
  SpecVerdict verdict;
  uint64_t decisive_prime = 0;  // prime the per-equation verdicts were taken at
  std::vector<EquationVerdict> per_equation;
};

/// Scans primes in ascending order up to prime_bound; returns NotASpec at
/// the first prime where every equation is satisfied (exhaustively), else
/// NoWitnessBelow. For NotASpec the per-equation verdicts are taken at the
/// witness; for NoWitnessBelow, at the last prime scanned.
SpecCheckReport check_spec_criterion(const std::vector<NamedEquation>& equations,
                                     uint64_t prime_bound,
                                     uint64_t budget = kDefaultExhaustiveBudget);

/// Smallest prime p <= prime_bound satisfying every one of H_0 .. H_n
/// exhaustively. Primes are skipped only on a concrete exhaustive
/// falsification of some member.
std::optional<uint64_t> h_family_witness(unsigned n, uint64_t prime_bound,
                                         uint64_t budget = kDefaultExhaustiveBudget);

struct PropositionReport {
  unsigned n = 0;
  bool prime_found = false;
  uint64_t prime = 0;
  uint64_t gap_value = 0;  // residue_gap(prime), > n+1 by construction
  bool all_satisfied = false;
  std::vector<EquationVerdict> per_equation;
};

/// Finds the smallest prime whose largest-residue gap exceeds n+1, then
/// verifies by exhaustion that it satisfies every H_m for m <= n.
PropositionReport proposition_check(unsigned n, uint64_t search_cap = 1000000);

/// (x^2 - 2) * (x^2 - 3) * (x^2 - 6), constants spelled as numerals.
Term example_poly_term();

/// Coefficients of the expansion over the integers, constant term first:
/// x^6 - 11x^4 + 36x^2 - 36. Checked once against the factored form at
/// seven sample points (a degree-6 polynomial is pinned by any seven).
std::array<long long, 7> example_poly_coeffs();

/// Least x in [0, p) that is a root of the example polynomial mod p.
/// Nonempty for every prime if the theory is right; an empty result is a
/// finding, not an error.
std::optional<uint64_t> example_poly_root_mod(uint64_t p);

/// True iff the expanded polynomial has no rational root (rational-root
/// theorem: the only candidates are +/- divisors of 36).
bool rational_root_check();

struct GaussianExampleReport {
  bool imaginary_square_ok = false;  // i^2 + 1 evaluates to exactly 0
  bool satisfied = false;            // no counterexample to f(x)*inv(f(x)) = 1
  size_t forced_points = 0;
  size_t samples = 0;
  std::optional<GaussianRational> counterexample;
};

/// Checks f(x)*inv(f(x)) = 1 over Gaussian rationals at a forced grid
/// (0, +/-1, +/-i, and the four unit diagonals) and `samples` random points,
/// and i^2 + 1 = 0 exactly.
GaussianExampleReport gaussian_example_check(size_t samples, uint64_t seed);

}  // namespace meadowlab

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace meadowlab {

/// The quadratic residues of a prime p: every n in [1, p) for which
/// x^2 = n (mod p) is soluble. Sorted ascending; (p-1)/2 entries for odd p.
struct ResidueSet {
  uint64_t modulus;
  std::vector<uint64_t> residues;

  bool contains(uint64_t n) const;
};

/// Euler's criterion for odd p, direct check for p = 2. Requires a prime
/// modulus and n not divisible by p (residues are defined for 0 < n < p).
bool is_qr(uint64_t n, uint64_t p);

/// Brute-force enumeration { x^2 mod p : 1 <= x <= p-1 }, the independent
/// route against which is_qr is tested.
ResidueSet residue_set(uint64_t p);

/// Distance from a prime to its largest quadratic residue; 0 for 0, 1, and
/// composites. Computed by a descending scan with Euler's criterion.
uint64_t residue_gap(uint64_t n);

struct ResidueGap {
  uint64_t n;
  uint64_t value;
};

/// residue_gap over an inclusive range, for table and b-file output.
std::vector<ResidueGap> residue_gap_range(uint64_t lo, uint64_t hi);

/// The prime p < bound maximizing residue_gap(p), smallest prime on ties.
std::pair<uint64_t, uint64_t> max_residue_gap_below(uint64_t bound);

/// Same sweep over the first `count` primes, the domain of the published
/// table for this sequence (its entries are indexed by prime, not by n).
std::pair<uint64_t, uint64_t> max_residue_gap_first_primes(uint64_t count);

/// Smallest prime p <= bound with p > max(set) for which every member is a
/// quadratic residue of p; nullopt when no prime below the bound qualifies.
std::optional<uint64_t> witness_prime_for_qr_set(const std::vector<uint64_t>& set,
                                                 uint64_t bound);

/// p mod m for m in {4, 8}; rejects p = 2 (the classification is for odd
/// primes).
uint64_t congruence_class(uint64_t p, uint64_t m);

}  // namespace meadowlab

#include "meadowlab/residues.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meadowlab/prime_field.hpp"

namespace meadowlab {

bool ResidueSet::contains(uint64_t n) const {
  return std::binary_search(residues.begin(), residues.end(), n);
}

bool is_qr(uint64_t n, uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("is_qr: modulus " + std::to_string(p) +
                                " is not prime");
  n %= p;
  if (n == 0)
    throw std::invalid_argument(
        "is_qr: n is divisible by p; residues are defined for 0 < n < p");
  if (p == 2) return true;  // 1 is the only class, and 1^2 = 1
  return powmod(n, (p - 1) / 2, p) == 1;
}

ResidueSet residue_set(uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("residue_set: modulus " + std::to_string(p) +
                                " is not prime");
  std::vector<bool> seen(p, false);
  for (uint64_t x = 1; x < p; ++x) seen[mulmod(x, x, p)] = true;
  ResidueSet out{p, {}};
  out.residues.reserve((p - 1) / 2 + 1);
  for (uint64_t n = 1; n < p; ++n)
    if (seen[n]) out.residues.push_back(n);
  return out;
}

uint64_t residue_gap(uint64_t n) {
  if (n <= 1 || !is_prime(n)) return 0;
  if (n == 2) return 1;  // residue set {1}
  for (uint64_t r = n - 1;; --r) {
    if (is_qr(r, n)) return n - r;
  }
}

std::vector<ResidueGap> residue_gap_range(uint64_t lo, uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("residue_gap_range: empty range");
  std::vector<ResidueGap> out;
  out.reserve(hi - lo + 1);
  for (uint64_t n = lo; n <= hi; ++n) out.push_back({n, residue_gap(n)});
  return out;
}

std::pair<uint64_t, uint64_t> max_residue_gap_below(uint64_t bound) {
  if (bound < 3)
    throw std::invalid_argument("max_residue_gap_below: bound must be >= 3");
  uint64_t best_prime = 2;
  uint64_t best_value = 1;
  for (uint64_t p : primes_below(bound)) {
    const uint64_t v = residue_gap(p);
    if (v > best_value) {
      best_value = v;
      best_prime = p;
    }
  }
  return {best_prime, best_value};
}

std::pair<uint64_t, uint64_t> max_residue_gap_first_primes(uint64_t count) {
  if (count < 1)
    throw std::invalid_argument("max_residue_gap_first_primes: count must be >= 1");
  // p_k < k(ln k + ln ln k) for k >= 6; sieve once, top up if the estimate
  // ever falls short.
  const double k = static_cast<double>(std::max<uint64_t>(count, 6));
  const uint64_t estimate =
      static_cast<uint64_t>(k * (std::log(k) + std::log(std::log(k)))) + 16;
  std::vector<uint64_t> primes = primes_below(estimate);
  while (primes.size() < count)
    primes.push_back(next_prime(primes.empty() ? 1 : primes.back()));

  uint64_t best_prime = 2;
  uint64_t best_value = 1;
  for (uint64_t idx = 0; idx < count; ++idx) {
    const uint64_t v = residue_gap(primes[idx]);
    if (v > best_value) {
      best_value = v;
      best_prime = primes[idx];
    }
  }
  return {best_prime, best_value};
}

std::optional<uint64_t> witness_prime_for_qr_set(const std::vector<uint64_t>& set,
                                                 uint64_t bound) {
  if (set.empty())
    throw std::invalid_argument("witness_prime_for_qr_set: empty set");
  uint64_t max_member = 0;
  for (uint64_t a : set) {
    if (a == 0)
      throw std::invalid_argument("witness_prime_for_qr_set: members must be >= 1");
    max_member = std::max(max_member, a);
  }
  for (uint64_t p = next_prime(max_member); p <= bound; p = next_prime(p)) {
    bool all = true;
    for (uint64_t a : set) {
      if (!is_qr(a, p)) {  // 0 < a < p since p > max(set)
        all = false;
        break;
      }
    }
    if (all) return p;
  }
  return std::nullopt;
}

uint64_t congruence_class(uint64_t p, uint64_t m) {
  if (m != 4 && m != 8)
    throw std::invalid_argument("congruence_class: modulus must be 4 or 8");
  if (p == 2 || p % 2 == 0)
    throw std::invalid_argument("congruence_class: p must be odd");
  return p % m;
}

}  // namespace meadowlab

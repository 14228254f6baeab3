#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace meadowlab {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin; the witness set {2,3,5,7,11,13,17} is complete
/// for n < 3.4e14, far beyond any bound used here. Larger inputs are refused.
bool is_prime(uint64_t n);

/// Primes strictly below bound, ascending.
std::vector<uint64_t> primes_below(uint64_t bound);

/// Smallest prime > n.
uint64_t next_prime(uint64_t n);

/// Totalized inverse in Z/pZ: 0 maps to 0, otherwise a^(p-2) mod p.
uint64_t fp_inv_raw(uint64_t a, uint64_t p);

/// Element of the zero-totalized prime field of order p. Construction
/// reduces the value and insists on a prime modulus.
class PrimeFieldElement {
 public:
  PrimeFieldElement(uint64_t value, uint64_t modulus);

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }

  friend PrimeFieldElement operator-(const PrimeFieldElement& a) {
    return PrimeFieldElement(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
  }
  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return !(a == b);
  }

 private:
  uint64_t value_;
  uint64_t modulus_;
};

PrimeFieldElement fp_inv(const PrimeFieldElement& a);

inline std::string to_string(const PrimeFieldElement& a) {
  return std::to_string(a.value());
}

}  // namespace meadowlab

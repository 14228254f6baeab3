#include "meadowlab/prime_field.hpp"

#include <stdexcept>

namespace meadowlab {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(uint64_t n) {
  constexpr uint64_t kDeterministicLimit = 340000000000000ULL;  // 3.4e14
  if (n >= kDeterministicLimit)
    throw std::domain_error("is_prime: input beyond the deterministic witness range");
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < r; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> primes_below(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> sieve(bound, true);
  sieve[0] = sieve[1] = false;
  for (uint64_t i = 2; i * i < bound; ++i) {
    if (!sieve[i]) continue;
    for (uint64_t j = i * i; j < bound; j += i) sieve[j] = false;
  }
  for (uint64_t i = 2; i < bound; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

uint64_t next_prime(uint64_t n) {
  uint64_t candidate = n + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

uint64_t fp_inv_raw(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  return powmod(a, p - 2, p);
}

namespace {

// Constructions and arithmetic revalidate the modulus; cache the last
// verdict so element-heavy loops stay cheap.
bool checked_prime(uint64_t p) {
  thread_local uint64_t last_prime = 0;
  if (p == last_prime) return true;
  if (!is_prime(p)) return false;
  last_prime = p;
  return true;
}

}  // namespace

PrimeFieldElement::PrimeFieldElement(uint64_t value, uint64_t modulus)
    : value_(value % (modulus ? modulus : 1)), modulus_(modulus) {
  if (!checked_prime(modulus))
    throw std::invalid_argument("PrimeFieldElement: modulus " +
                                std::to_string(modulus) + " is not prime");
}

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("PrimeFieldElement: modulus mismatch");
  uint64_t s = a.value_ + b.value_;
  if (s >= a.modulus_) s -= a.modulus_;
  return PrimeFieldElement(s, a.modulus_);
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("PrimeFieldElement: modulus mismatch");
  return PrimeFieldElement(mulmod(a.value_, b.value_, a.modulus_), a.modulus_);
}

PrimeFieldElement fp_inv(const PrimeFieldElement& a) {
  return PrimeFieldElement(fp_inv_raw(a.value(), a.modulus()), a.modulus());
}

}  // namespace meadowlab

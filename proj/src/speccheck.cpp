#include "meadowlab/speccheck.hpp"

#include <stdexcept>

#include "meadowlab/eval.hpp"
#include "meadowlab/prime_field.hpp"
#include "meadowlab/residues.hpp"

namespace meadowlab {

namespace {

EquationVerdict to_verdict(const std::string& name,
                           const ModelVerdict<PrimeFieldElement>& v) {
  EquationVerdict out{name, v.satisfied(), {}};
  if (!v.satisfied()) {
    for (const auto& [var_name, element] : v.witness())
      out.counterexample.emplace(var_name, element.value());
  }
  return out;
}

}  // namespace

SpecCheckReport check_spec_criterion(const std::vector<NamedEquation>& equations,
                                     uint64_t prime_bound, uint64_t budget) {
  if (equations.empty())
    throw std::invalid_argument("check_spec_criterion: empty equation set");

  SpecCheckReport report;
  report.verdict = {SpecVerdict::Kind::NoWitnessBelow, 0, prime_bound};

  for (uint64_t p : primes_below(prime_bound + 1)) {
    std::vector<EquationVerdict> verdicts;
    verdicts.reserve(equations.size());
    bool all_satisfied = true;
    for (const NamedEquation& ne : equations) {
      verdicts.push_back(to_verdict(ne.name, satisfies_fp(ne.equation, p, budget)));
      if (!verdicts.back().satisfied) {
        all_satisfied = false;
        break;  // p cannot be a witness; move on
      }
    }
    report.decisive_prime = p;
    report.per_equation = std::move(verdicts);
    if (all_satisfied) {
      report.verdict = {SpecVerdict::Kind::NotASpec, p, prime_bound};
      return report;
    }
  }
  return report;
}

std::optional<uint64_t> h_family_witness(unsigned n, uint64_t prime_bound,
                                         uint64_t budget) {
  std::vector<Equation> family;
  family.reserve(n + 1);
  for (unsigned m = 0; m <= n; ++m) family.push_back(h_n(m));

  auto check_all = [&](uint64_t p) -> bool {
    for (unsigned m = 0; m <= n; ++m)
      if (!satisfies_fp(family[m], p, budget).satisfied()) return false;
    return true;
  };

  for (uint64_t p : primes_below(prime_bound + 1)) {
    // H_m fails at p exactly when -(m+1) is a square mod p (including 0).
    // Use that to pick which member to try first; the exhaustive check
    // remains the sole decider either way.
    std::optional<unsigned> suspect;
    for (unsigned m = 0; m <= n; ++m) {
      const uint64_t c = (m + 1) % p;
      if (c == 0 || is_qr(p - c, p)) {
        suspect = m;
        break;
      }
    }
    if (suspect) {
      if (!satisfies_fp(family[*suspect], p, budget).satisfied()) continue;
      // The shortcut misjudged; fall through to the full scan.
      if (check_all(p)) return p;
    } else if (check_all(p)) {
      return p;
    }
  }
  return std::nullopt;
}

PropositionReport proposition_check(unsigned n, uint64_t search_cap) {
  PropositionReport report;
  report.n = n;
  for (uint64_t p : primes_below(search_cap + 1)) {
    const uint64_t gap = residue_gap(p);
    if (gap > static_cast<uint64_t>(n) + 1) {
      report.prime_found = true;
      report.prime = p;
      report.gap_value = gap;
      break;
    }
  }
  if (!report.prime_found) return report;

  report.all_satisfied = true;
  for (unsigned m = 0; m <= n; ++m) {
    const auto v = satisfies_fp(h_n(m), report.prime);
    report.per_equation.push_back(to_verdict("H:" + std::to_string(m), v));
    if (!v.satisfied()) report.all_satisfied = false;
  }
  return report;
}

Term example_poly_term() {
  const Term x = var("x");
  Term factor2 = sub(square(x), numeral(2));
  Term factor3 = sub(square(x), numeral(3));
  Term factor6 = sub(square(x), numeral(6));
  return mul(mul(std::move(factor2), std::move(factor3)), std::move(factor6));
}

namespace {

long long factored_at(long long t) {
  const long long s = t * t;
  return (s - 2) * (s - 3) * (s - 6);
}

std::array<long long, 7> expand_example_poly() {
  // Convolve (x^2-2)(x^2-3)(x^2-6) over the integers.
  std::vector<long long> acc{1};
  for (long long c : {-2LL, -3LL, -6LL}) {
    std::vector<long long> factor{c, 0, 1};
    std::vector<long long> next(acc.size() + 2, 0);
    for (size_t a = 0; a < acc.size(); ++a)
      for (size_t b = 0; b < factor.size(); ++b) next[a + b] += acc[a] * factor[b];
    acc = std::move(next);
  }
  std::array<long long, 7> out{};
  for (size_t k = 0; k < 7; ++k) out[k] = acc[k];
  // Seven agreement points pin a degree-6 polynomial.
  for (long long t = -3; t <= 3; ++t) {
    long long horner = 0;
    for (int k = 6; k >= 0; --k) horner = horner * t + out[k];
    if (horner != factored_at(t))
      throw std::logic_error("example polynomial expansion disagrees with factors");
  }
  return out;
}

}  // namespace

std::array<long long, 7> example_poly_coeffs() {
  static const std::array<long long, 7> coeffs = expand_example_poly();
  return coeffs;
}

std::optional<uint64_t> example_poly_root_mod(uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("example_poly_root_mod: modulus is not prime");
  const uint64_t t2 = 2 % p, t3 = 3 % p, t6 = 6 % p;
  for (uint64_t x = 0; x < p; ++x) {
    const uint64_t s = mulmod(x, x, p);
    if (s == t2 || s == t3 || s == t6) return x;
  }
  return std::nullopt;
}

bool rational_root_check() {
  const auto coeffs = example_poly_coeffs();
  // Monic with constant term -36: any rational root is an integer divisor
  // of 36.
  for (long long d : {1LL, 2LL, 3LL, 4LL, 6LL, 9LL, 12LL, 18LL, 36LL}) {
    for (long long candidate : {d, -d}) {
      long long value = 0;
      for (int k = 6; k >= 0; --k) value = value * candidate + coeffs[k];
      if (value == 0) return false;
    }
  }
  return true;
}

GaussianExampleReport gaussian_example_check(size_t samples, uint64_t seed) {
  GaussianExampleReport report;
  report.samples = samples;

  const QiModel qi;
  const Term i_squared_plus_one = add(mul(imaginary_unit(), imaginary_unit()), one());
  report.imaginary_square_ok = eval(qi, i_squared_plus_one, {}).is_zero();

  const Term poly = example_poly_term();
  const Equation eq = make_equation(mul(poly, inv(poly)), one());

  const Rational zero(0), one_(1), minus_one(-1);
  std::vector<GaussianRational> grid;
  for (const Rational& re : {zero, one_, minus_one})
    for (const Rational& im : {zero, one_, minus_one}) grid.emplace_back(re, im);
  report.forced_points = grid.size();

  report.satisfied = true;
  for (const GaussianRational& x : grid) {
    const Assignment<QiModel> env{{"x", x}};
    if (eval(qi, eq.lhs, env) != eval(qi, eq.rhs, env)) {
      report.satisfied = false;
      report.counterexample = x;
      return report;
    }
  }

  const auto verdict = sample_check_qi(eq, samples, seed);
  if (!verdict.satisfied()) {
    report.satisfied = false;
    report.counterexample = verdict.witness().at("x");
  }
  return report;
}

}  // namespace meadowlab

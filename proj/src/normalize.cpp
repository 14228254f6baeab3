#include "meadowlab/normalize.hpp"

#include <stdexcept>

#include "meadowlab/eval.hpp"

namespace meadowlab {

namespace {

constexpr unsigned long kMaxNumeral = 5000;

uint64_t numeral_size(const mpz_class& z, const char* which) {
  mpz_class a = abs(z);
  if (a > kMaxNumeral)
    throw std::length_error(std::string("normalize_closed: ") + which +
                            " component needs a numeral larger than " +
                            std::to_string(kMaxNumeral));
  return a.get_ui();
}

Term signed_numeral(const mpz_class& z, const char* which) {
  Term t = numeral(numeral_size(z, which));
  return z < 0 ? neg(std::move(t)) : t;
}

}  // namespace

GaussianRational closed_value(const Term& t) {
  if (!free_vars(t).empty())
    throw EvalError("normalize_closed: term has free variables");
  return eval(QiModel{}, t, {});
}

Term normalize_closed(const Term& t) {
  const GaussianRational value = closed_value(t);
  Term real = mul(signed_numeral(value.re.num(), "real"),
                  inv(numeral(numeral_size(value.re.den(), "real"))));
  Term imag = mul(mul(signed_numeral(value.im.num(), "imaginary"),
                      inv(numeral(numeral_size(value.im.den(), "imaginary")))),
                  imaginary_unit());
  return add(std::move(real), std::move(imag));
}

}  // namespace meadowlab

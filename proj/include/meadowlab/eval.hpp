#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "meadowlab/gaussian.hpp"
#include "meadowlab/prime_field.hpp"
#include "meadowlab/rational.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Zero-totalized rationals.
struct Q0Model {
  using Element = Rational;
  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element imaginary() const {
    throw EvalError("imaginary unit has no interpretation in Q0");
  }
  Element neg(const Element& a) const { return -a; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return rat_inv(a); }
};

/// Zero-totalized prime field of order p.
struct FpModel {
  uint64_t p;
  using Element = PrimeFieldElement;
  Element zero() const { return Element(0, p); }
  Element one() const { return Element(1 % p, p); }
  Element imaginary() const {
    throw EvalError("imaginary unit has no interpretation in a prime field");
  }
  Element neg(const Element& a) const { return -a; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return fp_inv(a); }
};

/// Zero-totalized Gaussian rationals.
struct QiModel {
  using Element = GaussianRational;
  Element zero() const { return {}; }
  Element one() const { return GaussianRational(1); }
  Element imaginary() const { return gauss_i(); }
  Element neg(const Element& a) const { return -a; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return gauss_inv(a); }
};

template <class Model>
using Assignment = std::map<std::string, typename Model::Element>;

/// Structural evaluation. Inverse is the model's totalized inverse, so
/// closed terms always evaluate; unbound variables raise EvalError.
template <class Model>
typename Model::Element eval(const Model& m, const Term& t,
                             const Assignment<Model>& env) {
  switch (t->kind) {
    case TermKind::Zero:
      return m.zero();
    case TermKind::One:
      return m.one();
    case TermKind::Imaginary:
      return m.imaginary();
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw EvalError("unbound variable '" + t->name + "'");
      return it->second;
    }
    case TermKind::Neg:
      return m.neg(eval(m, t->a, env));
    case TermKind::Inv:
      return m.inv(eval(m, t->a, env));
    case TermKind::Add:
      return m.add(eval(m, t->a, env), eval(m, t->b, env));
    case TermKind::Mul:
      return m.mul(eval(m, t->a, env), eval(m, t->b, env));
  }
  throw EvalError("malformed term");
}

}  // namespace meadowlab

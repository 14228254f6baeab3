#include "meadowlab/model_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace meadowlab {

namespace {

// Postfix program for fast repeated evaluation in Z/pZ. Constant subterms
// are folded to a single push; that changes nothing observable since
// evaluation is pure and the inverse is total.
struct Instr {
  enum class Op : uint8_t { PushConst, PushVar, Neg, Add, Mul, Inv } op;
  uint32_t index = 0;    // PushVar
  uint64_t value = 0;    // PushConst
};

struct FpProgram {
  std::vector<Instr> code;
  size_t stack_need = 1;
};

class FpEvaluator {
 public:
  explicit FpEvaluator(uint64_t p) : p_(p) {
    if (p <= kInvTableMax) {
      inv_table_.resize(p);
      if (p > 1) inv_table_[1 % p] = 1 % p;
      // inv[i] = -(p/i) * inv[p mod i]; inv[0] stays 0, the totalized value.
      for (uint64_t i = 2; i < p; ++i)
        inv_table_[i] = p - mulmod(p / i, inv_table_[p % i], p);
    }
  }

  uint64_t p() const { return p_; }

  uint64_t inv(uint64_t a) const {
    if (!inv_table_.empty()) return inv_table_[a];
    return fp_inv_raw(a, p_);
  }

  uint64_t run(const FpProgram& prog, const std::vector<uint64_t>& env,
               std::vector<uint64_t>& stack) const {
    stack.clear();
    for (const Instr& ins : prog.code) {
      switch (ins.op) {
        case Instr::Op::PushConst:
          stack.push_back(ins.value);
          break;
        case Instr::Op::PushVar:
          stack.push_back(env[ins.index]);
          break;
        case Instr::Op::Neg: {
          uint64_t& a = stack.back();
          a = a == 0 ? 0 : p_ - a;
          break;
        }
        case Instr::Op::Inv: {
          uint64_t& a = stack.back();
          a = inv(a);
          break;
        }
        case Instr::Op::Add: {
          const uint64_t b = stack.back();
          stack.pop_back();
          uint64_t& a = stack.back();
          a += b;
          if (a >= p_) a -= p_;
          break;
        }
        case Instr::Op::Mul: {
          const uint64_t b = stack.back();
          stack.pop_back();
          uint64_t& a = stack.back();
          a = mulmod(a, b, p_);
          break;
        }
      }
    }
    return stack.back();
  }

 private:
  static constexpr uint64_t kInvTableMax = 1u << 20;

  uint64_t p_;
  std::vector<uint64_t> inv_table_;
};

// Returns true if the subtree is closed (emitted as one PushConst).
bool compile_rec(const Term& t, const std::map<std::string, uint32_t>& var_index,
                 const FpEvaluator& ev, FpProgram& prog) {
  switch (t->kind) {
    case TermKind::Zero:
      prog.code.push_back({Instr::Op::PushConst, 0, 0});
      return true;
    case TermKind::One:
      prog.code.push_back({Instr::Op::PushConst, 0, 1 % ev.p()});
      return true;
    case TermKind::Imaginary:
      throw EvalError("imaginary unit has no interpretation in a prime field");
    case TermKind::Var: {
      auto it = var_index.find(t->name);
      if (it == var_index.end())
        throw EvalError("unbound variable '" + t->name + "'");
      prog.code.push_back({Instr::Op::PushVar, it->second, 0});
      return false;
    }
    case TermKind::Neg:
    case TermKind::Inv: {
      const size_t mark = prog.code.size();
      const bool closed = compile_rec(t->a, var_index, ev, prog);
      const auto op = t->kind == TermKind::Neg ? Instr::Op::Neg : Instr::Op::Inv;
      if (closed) {
        uint64_t v = prog.code[mark].value;
        v = op == Instr::Op::Neg ? (v == 0 ? 0 : ev.p() - v) : ev.inv(v);
        prog.code.resize(mark);
        prog.code.push_back({Instr::Op::PushConst, 0, v});
        return true;
      }
      prog.code.push_back({op, 0, 0});
      return false;
    }
    case TermKind::Add:
    case TermKind::Mul: {
      const size_t mark = prog.code.size();
      const bool lc = compile_rec(t->a, var_index, ev, prog);
      const bool rc = compile_rec(t->b, var_index, ev, prog);
      const auto op = t->kind == TermKind::Add ? Instr::Op::Add : Instr::Op::Mul;
      if (lc && rc && prog.code.size() == mark + 2) {
        const uint64_t a = prog.code[mark].value;
        const uint64_t b = prog.code[mark + 1].value;
        uint64_t v;
        if (op == Instr::Op::Add) {
          v = a + b;
          if (v >= ev.p()) v -= ev.p();
        } else {
          v = mulmod(a, b, ev.p());
        }
        prog.code.resize(mark);
        prog.code.push_back({Instr::Op::PushConst, 0, v});
        return true;
      }
      prog.code.push_back({op, 0, 0});
      return false;
    }
  }
  throw EvalError("malformed term");
}

FpProgram compile_fp(const Term& t, const std::map<std::string, uint32_t>& var_index,
                     const FpEvaluator& ev) {
  FpProgram prog;
  compile_rec(t, var_index, ev, prog);
  size_t depth = 0, max_depth = 0;
  for (const Instr& ins : prog.code) {
    if (ins.op == Instr::Op::PushConst || ins.op == Instr::Op::PushVar)
      ++depth;
    else if (ins.op == Instr::Op::Add || ins.op == Instr::Op::Mul)
      --depth;
    max_depth = std::max(max_depth, depth);
  }
  prog.stack_need = max_depth;
  return prog;
}

}  // namespace

ModelVerdict<PrimeFieldElement> satisfies_fp(const Equation& e, uint64_t p,
                                             uint64_t budget) {
  if (e.signature != Signature::Plain)
    throw EvalError("prime-field checks require a plain-signature equation");
  if (!is_prime(p))
    throw std::invalid_argument("satisfies_fp: modulus " + std::to_string(p) +
                                " is not prime");

  const std::set<std::string> var_set = free_vars(e);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  std::map<std::string, uint32_t> var_index;
  for (size_t k = 0; k < vars.size(); ++k)
    var_index[vars[k]] = static_cast<uint32_t>(k);

  const FpEvaluator ev(p);
  const FpProgram lhs = compile_fp(e.lhs, var_index, ev);
  const FpProgram rhs = compile_fp(e.rhs, var_index, ev);

  // True space size is p^k; saturate to "larger than any budget".
  uint64_t space = 1;
  for (size_t k = 0; k < vars.size(); ++k) {
    if (space > UINT64_MAX / p) {
      space = UINT64_MAX;
      break;
    }
    space *= p;
  }

  std::vector<uint64_t> env(vars.size(), 0);
  std::vector<uint64_t> stack;
  stack.reserve(std::max(lhs.stack_need, rhs.stack_need) + 1);

  uint64_t scanned = 0;
  while (true) {
    if (scanned == budget && space > budget)
      throw BudgetExceeded("satisfies_fp: " + std::to_string(vars.size()) +
                           " variables over p=" + std::to_string(p) +
                           " exceed the budget of " + std::to_string(budget) +
                           " assignments");
    if (ev.run(lhs, env, stack) != ev.run(rhs, env, stack)) {
      std::map<std::string, PrimeFieldElement> witness;
      for (size_t k = 0; k < vars.size(); ++k)
        witness.emplace(vars[k], PrimeFieldElement(env[k], p));
      return ModelVerdict<PrimeFieldElement>::falsified(std::move(witness));
    }
    ++scanned;
    // Odometer: last variable fastest, so assignments ascend lexicographically.
    size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++env[k] < p) break;
      env[k] = 0;
      if (k == 0) return ModelVerdict<PrimeFieldElement>::satisfied_verdict();
    }
    if (vars.empty()) return ModelVerdict<PrimeFieldElement>::satisfied_verdict();
  }
}

namespace {

// Deterministic cross-platform draw; mt19937_64 output is pinned by the
// standard, distributions are not, so map the raw stream by hand.
uint64_t draw(std::mt19937_64& rng, uint64_t span) { return rng() % span; }

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(draw(rng, 2001)) - 1000;
  const long den = static_cast<long>(draw(rng, 1000)) + 1;
  return Rational(mpz_class(num), mpz_class(den));
}

template <class Model>
ModelVerdict<typename Model::Element> sample_check_impl(
    const Model& model, const Equation& e,
    const std::vector<typename Model::Element>& forced_values, size_t samples,
    uint64_t seed,
    typename Model::Element (*random_element)(std::mt19937_64&)) {
  using Element = typename Model::Element;
  const std::set<std::string> var_set = free_vars(e);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  auto check_one = [&](const std::map<std::string, Element>& env)
      -> std::optional<std::map<std::string, Element>> {
    if (eval(model, e.lhs, env) != eval(model, e.rhs, env)) return env;
    return std::nullopt;
  };

  if (vars.empty()) {
    std::map<std::string, Element> env;
    if (auto w = check_one(env)) return ModelVerdict<Element>::falsified(*w);
    return ModelVerdict<Element>::satisfied_verdict();
  }

  // Forced assignments first: the full grid when small, diagonal otherwise.
  const double grid_size = std::pow(static_cast<double>(forced_values.size()),
                                    static_cast<double>(vars.size()));
  if (grid_size <= 4096.0) {
    std::vector<size_t> pick(vars.size(), 0);
    while (true) {
      std::map<std::string, Element> env;
      for (size_t k = 0; k < vars.size(); ++k)
        env.emplace(vars[k], forced_values[pick[k]]);
      if (auto w = check_one(env)) return ModelVerdict<Element>::falsified(*w);
      size_t k = vars.size();
      bool done = false;
      while (k > 0) {
        --k;
        if (++pick[k] < forced_values.size()) break;
        pick[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
  } else {
    for (const Element& v : forced_values) {
      std::map<std::string, Element> env;
      for (const std::string& name : vars) env.emplace(name, v);
      if (auto w = check_one(env)) return ModelVerdict<Element>::falsified(*w);
    }
  }

  std::mt19937_64 rng(seed);
  for (size_t s = 0; s < samples; ++s) {
    std::map<std::string, Element> env;
    for (const std::string& name : vars) env.emplace(name, random_element(rng));
    if (auto w = check_one(env)) return ModelVerdict<Element>::falsified(*w);
  }
  return ModelVerdict<Element>::satisfied_verdict();
}

}  // namespace

ModelVerdict<Rational> sample_check_q0(const Equation& e, size_t samples,
                                       uint64_t seed) {
  if (e.signature != Signature::Plain)
    throw EvalError("Q0 checks require a plain-signature equation");
  const std::vector<Rational> forced{Rational(0), Rational(1), Rational(-1)};
  return sample_check_impl(Q0Model{}, e, forced, samples, seed, random_rational);
}

ModelVerdict<GaussianRational> sample_check_qi(const Equation& e, size_t samples,
                                               uint64_t seed) {
  const std::vector<GaussianRational> forced{
      gauss_i(), -gauss_i(), GaussianRational(0), GaussianRational(1),
      GaussianRational(-1)};
  return sample_check_impl(
      QiModel{}, e, forced, samples, seed, +[](std::mt19937_64& rng) {
        Rational re = random_rational(rng);
        Rational im = random_rational(rng);
        return GaussianRational(std::move(re), std::move(im));
      });
}

}  // namespace meadowlab

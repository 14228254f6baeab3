#include "meadowlab/term.hpp"

#include <stdexcept>
#include <utility>

namespace meadowlab {

namespace {

Term make(TermKind kind, std::string name, Term a, Term b) {
  auto n = std::make_shared<TermNode>();
  n->kind = kind;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

const Term kZero = make(TermKind::Zero, {}, nullptr, nullptr);
const Term kOne = make(TermKind::One, {}, nullptr, nullptr);
const Term kImaginary = make(TermKind::Imaginary, {}, nullptr, nullptr);

}  // namespace

Term zero() { return kZero; }
Term one() { return kOne; }
Term imaginary_unit() { return kImaginary; }

bool is_valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "i" && name != "inv";
}

Term var(std::string name) {
  if (!is_valid_var_name(name))
    throw std::invalid_argument("invalid variable name: '" + name + "'");
  return make(TermKind::Var, std::move(name), nullptr, nullptr);
}

Term neg(Term t) { return make(TermKind::Neg, {}, std::move(t), nullptr); }
Term add(Term l, Term r) { return make(TermKind::Add, {}, std::move(l), std::move(r)); }
Term mul(Term l, Term r) { return make(TermKind::Mul, {}, std::move(l), std::move(r)); }
Term inv(Term t) { return make(TermKind::Inv, {}, std::move(t), nullptr); }
Term sub(Term l, Term r) { return add(std::move(l), neg(std::move(r))); }
Term square(Term t) { return mul(t, t); }

Term numeral(uint64_t n) {
  Term t = kZero;
  for (uint64_t k = 0; k < n; ++k) t = add(std::move(t), kOne);
  return t;
}

bool term_equal(const Term& s, const Term& t) {
  if (s == t) return true;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Imaginary:
      return true;
    case TermKind::Var:
      return s->name == t->name;
    case TermKind::Neg:
    case TermKind::Inv:
      return term_equal(s->a, t->a);
    case TermKind::Add:
    case TermKind::Mul:
      return term_equal(s->a, t->a) && term_equal(s->b, t->b);
  }
  return false;
}

bool contains_imaginary(const Term& t) {
  switch (t->kind) {
    case TermKind::Imaginary:
      return true;
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Var:
      return false;
    case TermKind::Neg:
    case TermKind::Inv:
      return contains_imaginary(t->a);
    case TermKind::Add:
    case TermKind::Mul:
      return contains_imaginary(t->a) || contains_imaginary(t->b);
  }
  return false;
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      out.insert(t->name);
      return;
    case TermKind::Neg:
    case TermKind::Inv:
      collect_vars(t->a, out);
      return;
    case TermKind::Add:
    case TermKind::Mul:
      collect_vars(t->a, out);
      collect_vars(t->b, out);
      return;
    default:
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = binding.find(t->name);
      return it == binding.end() ? t : it->second;
    }
    case TermKind::Neg:
    case TermKind::Inv: {
      Term a = substitute(t->a, binding);
      if (a == t->a) return t;
      return make(t->kind, {}, std::move(a), nullptr);
    }
    case TermKind::Add:
    case TermKind::Mul: {
      Term a = substitute(t->a, binding);
      Term b = substitute(t->b, binding);
      if (a == t->a && b == t->b) return t;
      return make(t->kind, {}, std::move(a), std::move(b));
    }
    default:
      return t;
  }
}

namespace {

int precedence(TermKind k) {
  switch (k) {
    case TermKind::Add: return 1;
    case TermKind::Mul: return 2;
    case TermKind::Neg: return 3;
    default: return 4;  // atoms and inv(...)
  }
}

void print_rec(const Term& t, std::string& out);

// Binary operands of equal precedence keep their parentheses so the tree
// shape survives a reparse.
void print_operand(const Term& child, int parent_prec, bool wrap_equal, std::string& out) {
  const int cp = precedence(child->kind);
  const bool wrap = wrap_equal ? cp <= parent_prec : cp < parent_prec;
  if (wrap) out += '(';
  print_rec(child, out);
  if (wrap) out += ')';
}

void print_rec(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Zero:
      out += '0';
      return;
    case TermKind::One:
      out += '1';
      return;
    case TermKind::Imaginary:
      out += 'i';
      return;
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Inv:
      out += "inv(";
      print_rec(t->a, out);
      out += ')';
      return;
    case TermKind::Neg:
      out += '-';
      print_operand(t->a, precedence(TermKind::Neg), false, out);
      return;
    case TermKind::Add:
      print_operand(t->a, 1, true, out);
      out += " + ";
      print_operand(t->b, 1, true, out);
      return;
    case TermKind::Mul:
      print_operand(t->a, 2, true, out);
      out += " * ";
      print_operand(t->b, 2, true, out);
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

Equation make_equation(Term lhs, Term rhs) {
  const bool ext = contains_imaginary(lhs) || contains_imaginary(rhs);
  return Equation{std::move(lhs), std::move(rhs),
                  ext ? Signature::Extended : Signature::Plain};
}

std::set<std::string> free_vars(const Equation& e) {
  std::set<std::string> out = free_vars(e.lhs);
  auto r = free_vars(e.rhs);
  out.insert(r.begin(), r.end());
  return out;
}

}  // namespace meadowlab

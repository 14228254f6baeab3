#include "meadowlab/axioms.hpp"

#include <stdexcept>

namespace meadowlab {

std::vector<Equation> md_axioms() {
  const Term x = var("x");
  const Term y = var("y");
  const Term z = var("z");
  std::vector<Equation> out;
  out.reserve(10);
  out.push_back(make_equation(add(add(x, y), z), add(x, add(y, z))));
  out.push_back(make_equation(add(x, y), add(y, x)));
  out.push_back(make_equation(add(x, zero()), x));
  out.push_back(make_equation(add(x, neg(x)), zero()));
  out.push_back(make_equation(mul(mul(x, y), z), mul(x, mul(y, z))));
  out.push_back(make_equation(mul(x, y), mul(y, x)));
  out.push_back(make_equation(mul(one(), x), x));
  out.push_back(make_equation(mul(x, add(y, z)), add(mul(x, y), mul(x, z))));
  out.push_back(make_equation(inv(inv(x)), x));
  out.push_back(make_equation(mul(x, mul(x, inv(x))), x));
  return out;
}

Equation md_axiom(unsigned index) {
  if (index < 1 || index > 10)
    throw std::invalid_argument("meadow axiom index must be in 1..10");
  return md_axioms()[index - 1];
}

namespace {

Equation totalized_unit(Term t) {
  // t * inv(t) = 1
  return make_equation(mul(t, inv(t)), one());
}

}  // namespace

Equation l_n(unsigned n) {
  if (n < 1) throw std::invalid_argument("l_n requires n >= 1");
  Term sum = one();
  for (unsigned k = 1; k <= n; ++k)
    sum = add(std::move(sum), square(var("x" + std::to_string(k))));
  return totalized_unit(std::move(sum));
}

Equation h_n(unsigned n) {
  Term sum = add(add(one(), numeral(n)), square(var("x")));
  return totalized_unit(std::move(sum));
}

Equation c_n(unsigned n) {
  return totalized_unit(add(one(), numeral(n)));
}

std::string schema_name(const SchemaId& id) {
  switch (id.family) {
    case SchemaId::Family::Md: return "Md:" + std::to_string(id.parameter);
    case SchemaId::Family::L: return "L:" + std::to_string(id.parameter);
    case SchemaId::Family::H: return "H:" + std::to_string(id.parameter);
    case SchemaId::Family::C: return "C:" + std::to_string(id.parameter);
  }
  return {};
}

Equation instantiate(const SchemaId& id) {
  switch (id.family) {
    case SchemaId::Family::Md: return md_axiom(id.parameter);
    case SchemaId::Family::L: return l_n(id.parameter);
    case SchemaId::Family::H: return h_n(id.parameter);
    case SchemaId::Family::C: return c_n(id.parameter);
  }
  throw std::invalid_argument("unknown schema family");
}

namespace {

unsigned parse_unsigned(const std::string& text, const std::string& whole) {
  if (text.empty() || text.size() > 7 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad schema parameter in '" + whole + "'");
  const unsigned long v = std::stoul(text);
  // Schema terms embed the numeral for the parameter; keep the tree depth
  // within what the recursive walkers handle.
  if (v > 5000)
    throw std::invalid_argument("schema parameter too large in '" + whole + "'");
  return static_cast<unsigned>(v);
}

}  // namespace

std::vector<std::pair<SchemaId, Equation>> parse_schema_list(
    const std::vector<std::string>& specs) {
  std::vector<std::pair<SchemaId, Equation>> out;
  for (const std::string& spec : specs) {
    if (spec == "Md") {
      for (unsigned k = 1; k <= 10; ++k) {
        SchemaId id{SchemaId::Family::Md, k};
        out.emplace_back(id, instantiate(id));
      }
      continue;
    }
    const size_t colon = spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("unknown schema '" + spec +
                                  "' (expected Md, Md:K, L:N, H:N, or C:N)");
    const std::string fam = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    SchemaId::Family family;
    if (fam == "Md") family = SchemaId::Family::Md;
    else if (fam == "L") family = SchemaId::Family::L;
    else if (fam == "H") family = SchemaId::Family::H;
    else if (fam == "C") family = SchemaId::Family::C;
    else throw std::invalid_argument("unknown schema family '" + fam + "'");

    unsigned lo, hi;
    const size_t dots = rest.find("..");
    if (dots != std::string::npos) {
      lo = parse_unsigned(rest.substr(0, dots), spec);
      hi = parse_unsigned(rest.substr(dots + 2), spec);
      if (hi < lo) throw std::invalid_argument("empty schema range '" + spec + "'");
    } else {
      lo = hi = parse_unsigned(rest, spec);
    }
    for (unsigned k = lo; k <= hi; ++k) {
      SchemaId id{family, k};
      out.emplace_back(id, instantiate(id));  // validates the parameter
    }
  }
  return out;
}

}  // namespace meadowlab

#pragma once

#include <random>
#include <string>
#include <vector>

#include "meadowlab/term.hpp"

namespace meadowlab::testutil {

struct TermGenOptions {
  bool allow_imaginary = false;
  std::vector<std::string> vars;  // empty => closed terms only
  int max_depth = 6;
};

/// Seeded structural generator over the (possibly extended) signature.
inline Term random_term(std::mt19937_64& rng, const TermGenOptions& opt,
                        int depth = 0) {
  const auto pick = [&rng](uint64_t n) { return rng() % n; };
  const bool leaf = depth >= opt.max_depth || pick(100) < 25;
  if (leaf) {
    const uint64_t choices =
        2 + (opt.vars.empty() ? 0 : 1) + (opt.allow_imaginary ? 1 : 0);
    switch (pick(choices)) {
      case 0:
        return zero();
      case 1:
        return one();
      case 2:
        if (!opt.vars.empty()) return var(opt.vars[pick(opt.vars.size())]);
        return imaginary_unit();
      default:
        return imaginary_unit();
    }
  }
  switch (pick(4)) {
    case 0:
      return neg(random_term(rng, opt, depth + 1));
    case 1:
      return inv(random_term(rng, opt, depth + 1));
    case 2:
      return add(random_term(rng, opt, depth + 1),
                 random_term(rng, opt, depth + 1));
    default:
      return mul(random_term(rng, opt, depth + 1),
                 random_term(rng, opt, depth + 1));
  }
}

}  // namespace meadowlab::testutil

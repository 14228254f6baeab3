#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meadowlab/axioms.hpp"
#include "meadowlab/eval.hpp"
#include "meadowlab/model_check.hpp"
#include "meadowlab/normalize.hpp"
#include "meadowlab/parser.hpp"
#include "meadowlab/report_json.hpp"
#include "meadowlab/residues.hpp"
#include "meadowlab/speccheck.hpp"

namespace {

using namespace meadowlab;
using nlohmann::json;

struct ModelFlag {
  enum class Kind : uint8_t { Q0, Fp, Qi } kind = Kind::Q0;
  uint64_t p = 0;
};

ModelFlag parse_model(const std::string& s) {
  if (s == "q0") return {ModelFlag::Kind::Q0, 0};
  if (s == "qi") return {ModelFlag::Kind::Qi, 0};
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--model", "fp:<p> needs a numeric modulus");
    const uint64_t p = std::stoull(digits);
    if (!is_prime(p))
      throw CLI::ValidationError("--model", "modulus " + digits + " is not prime");
    return {ModelFlag::Kind::Fp, p};
  }
  throw CLI::ValidationError("--model", "expected q0, qi, or fp:<p>");
}

Signature signature_of(const ModelFlag& m) {
  return m.kind == ModelFlag::Kind::Qi ? Signature::Extended : Signature::Plain;
}

std::vector<uint64_t> parse_uint_list(const std::string& csv) {
  std::vector<uint64_t> out;
  size_t start = 0;
  while (start <= csv.size()) {
    const size_t comma = csv.find(',', start);
    const std::string item =
        csv.substr(start, comma == std::string::npos ? csv.size() - start : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("expected a comma-separated list of naturals, got '" +
                                  csv + "'");
    out.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Model>
typename Model::Element eval_with_bindings(const Model& model, Signature sig,
                                           const std::string& term_text,
                                           const std::vector<std::string>& binds) {
  const Term t = parse_term(term_text, sig);
  Assignment<Model> env;
  for (const std::string& b : binds) {
    const size_t eq = b.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--bind expects var=<closed term>, got '" + b + "'");
    const std::string name = b.substr(0, eq);
    if (!is_valid_var_name(name))
      throw std::invalid_argument("--bind: '" + name + "' is not a variable name");
    // Binding values are closed terms of the model's signature.
    env.emplace(name, eval(model, parse_term(b.substr(eq + 1), sig), {}));
  }
  return eval(model, t, env);
}

template <class Element>
json counterexample_json(const std::map<std::string, Element>& witness) {
  json out = json::object();
  for (const auto& [name, value] : witness) out[name] = to_string(value);
  return out;
}

enum class Output : uint8_t { Text, Json, Bfile };

void emit(Output mode, const std::string& text, const json& doc) {
  if (mode == Output::Json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "meadowlab: exact evaluation and model checking for zero-totalized fields"};
  app.require_subcommand(1);

  std::string output_name = "text";
  app.add_option("--output", output_name, "Output format: text, json, or bfile")
      ->envname("MEADOWLAB_OUTPUT")
      ->check(CLI::IsMember({"text", "json", "bfile"}));

  std::string model_name = "q0";
  uint64_t bound = 10000;
  uint64_t samples = 1000;
  uint64_t seed = 42;
  uint64_t budget = kDefaultExhaustiveBudget;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_name, "Model: q0, qi, or fp:<p>")
        ->envname("MEADOWLAB_MODEL");
  };
  auto add_bound = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--bound", bound, what)
        ->envname("MEADOWLAB_BOUND")
        ->check(CLI::Range(uint64_t{2}, UINT64_MAX));
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--samples", samples, "Random samples for Q0/Q0(i) checks")
        ->envname("MEADOWLAB_SAMPLES")
        ->check(CLI::Range(uint64_t{1}, UINT64_MAX));
    cmd->add_option("--seed", seed, "PRNG seed")->envname("MEADOWLAB_SEED");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Exhaustive-scan assignment budget")
        ->envname("MEADOWLAB_BUDGET");
  };

  // eval
  std::string term_text;
  std::vector<std::string> binds;
  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate a term in a model");
  cmd_eval->add_option("term", term_text, "Term text")->required();
  add_model(cmd_eval);
  cmd_eval->add_option("--bind", binds, "Variable binding var=<closed term>");

  // check-model
  std::string equation_text;
  CLI::App* cmd_check =
      app.add_subcommand("check-model", "Check one equation in one model");
  cmd_check->add_option("equation", equation_text, "Equation text lhs = rhs")
      ->required();
  add_model(cmd_check);
  add_sampling(cmd_check);
  add_budget(cmd_check);

  // residues
  uint64_t modulus = 0;
  CLI::App* cmd_residues =
      app.add_subcommand("residues", "Quadratic residues of a prime");
  cmd_residues->add_option("p", modulus, "Prime modulus")->required();

  // f
  uint64_t range_lo = 0, range_hi = 0;
  bool have_hi = false;
  CLI::App* cmd_f = app.add_subcommand(
      "f", "Distance from a prime to its largest quadratic residue");
  cmd_f->add_option("lo", range_lo, "Range start")->required();
  CLI::Option* hi_opt = cmd_f->add_option("hi", range_hi, "Range end (default: lo)");
  hi_opt->each([&](const std::string&) { have_hi = true; });

  // maxf
  uint64_t maxf_bound = 0;
  bool maxf_count_primes = false;
  CLI::App* cmd_maxf =
      app.add_subcommand("maxf", "Maximum of f over primes below a bound");
  cmd_maxf->add_option("bound", maxf_bound, "Exclusive upper bound")->required();
  cmd_maxf->add_flag("--first-primes", maxf_count_primes,
                     "Treat the bound as a count: sweep the first N primes "
                     "(the published table's indexing)");

  // witness
  std::string witness_set;
  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "Smallest prime having every member of a set as a residue");
  cmd_witness->add_option("set", witness_set, "Comma-separated naturals, e.g. 1,2,3")
      ->required();
  add_bound(cmd_witness, "Inclusive prime search bound");

  // speccheck
  std::vector<std::string> schema_specs;
  CLI::App* cmd_speccheck = app.add_subcommand(
      "speccheck", "Prime-field criterion for a candidate specification");
  cmd_speccheck
      ->add_option("schemas", schema_specs, "Schema list: Md, Md:4, L:2, H:0..5, C:7")
      ->required();
  add_bound(cmd_speccheck, "Inclusive prime search bound");
  add_budget(cmd_speccheck);

  // hfamily
  unsigned family_n = 0;
  CLI::App* cmd_hfamily = app.add_subcommand(
      "hfamily", "Smallest prime satisfying all of H_0 .. H_n");
  cmd_hfamily->add_option("n", family_n, "Family size parameter")->required();
  add_bound(cmd_hfamily, "Inclusive prime search bound");
  add_budget(cmd_hfamily);

  // proposition
  unsigned prop_n = 0;
  CLI::App* cmd_prop = app.add_subcommand(
      "proposition",
      "Find a prime with residue gap > n+1 and verify H_0 .. H_n there");
  cmd_prop->add_option("n", prop_n, "Family size parameter")->required();
  add_bound(cmd_prop, "Inclusive prime search cap");

  // example
  CLI::App* cmd_example = app.add_subcommand(
      "example",
      "Verify the (x^2-2)(x^2-3)(x^2-6) example: no rational root, a root "
      "modulo every prime below the bound, residue cover by 2, 3, 6");
  add_bound(cmd_example, "Inclusive prime bound");

  // normalize
  std::string normalize_text;
  CLI::App* cmd_normalize = app.add_subcommand(
      "normalize", "Normal form of a closed term over the extended signature");
  cmd_normalize->add_option("term", normalize_text, "Closed term text")->required();

  // Let the global --output flag appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const Output mode = output_name == "json"    ? Output::Json
                      : output_name == "bfile" ? Output::Bfile
                                               : Output::Text;
  if (mode == Output::Bfile && !cmd_f->parsed()) {
    std::cerr << "error: --output bfile applies to the f subcommand only\n";
    return 1;
  }

  try {
    if (cmd_eval->parsed()) {
      const ModelFlag m = parse_model(model_name);
      std::string value;
      switch (m.kind) {
        case ModelFlag::Kind::Q0:
          value = to_string(
              eval_with_bindings(Q0Model{}, Signature::Plain, term_text, binds));
          break;
        case ModelFlag::Kind::Fp:
          value = to_string(
              eval_with_bindings(FpModel{m.p}, Signature::Plain, term_text, binds));
          break;
        case ModelFlag::Kind::Qi:
          value = to_string(
              eval_with_bindings(QiModel{}, Signature::Extended, term_text, binds));
          break;
      }
      emit(mode, value + "\n",
           json{{"model", model_name}, {"term", term_text}, {"value", value}});
      return 0;
    }

    if (cmd_check->parsed()) {
      const ModelFlag m = parse_model(model_name);
      const Equation eq = parse_equation(equation_text, signature_of(m));
      bool satisfied = false;
      json cx;
      std::string where;
      if (m.kind == ModelFlag::Kind::Fp) {
        const auto v = satisfies_fp(eq, m.p, budget);
        satisfied = v.satisfied();
        if (!satisfied) cx = counterexample_json(v.witness());
        where = "exhaustive over fp:" + std::to_string(m.p);
      } else if (m.kind == ModelFlag::Kind::Q0) {
        const auto v = sample_check_q0(eq, samples, seed);
        satisfied = v.satisfied();
        if (!satisfied) cx = counterexample_json(v.witness());
        where = std::to_string(samples) + " samples in q0";
      } else {
        const auto v = sample_check_qi(eq, samples, seed);
        satisfied = v.satisfied();
        if (!satisfied) cx = counterexample_json(v.witness());
        where = std::to_string(samples) + " samples in qi";
      }
      json doc{{"model", model_name},
               {"verdict", satisfied ? "Satisfied" : "Falsified"}};
      std::string text =
          (satisfied ? "Satisfied (" : "Falsified (") + where + ")\n";
      if (!satisfied) {
        doc["counterexample"] = cx;
        text += "counterexample: " + cx.dump() + "\n";
      }
      emit(mode, text, doc);
      return 0;
    }

    if (cmd_residues->parsed()) {
      const ResidueSet rs = residue_set(modulus);
      std::string line;
      for (uint64_t r : rs.residues) {
        if (!line.empty()) line += ' ';
        line += std::to_string(r);
      }
      emit(mode, line + "\n",
           json{{"modulus", rs.modulus}, {"residues", rs.residues}});
      return 0;
    }

    if (cmd_f->parsed()) {
      if (!have_hi) range_hi = range_lo;
      const auto rows = residue_gap_range(range_lo, range_hi);
      std::string text;
      json arr = json::array();
      for (const ResidueGap& row : rows) {
        text += std::to_string(row.n) + " " + std::to_string(row.value) + "\n";
        arr.push_back(json{{"n", row.n}, {"value", row.value}});
      }
      emit(mode, text, arr);  // text and b-file rows coincide: "n a(n)"
      return 0;
    }

    if (cmd_maxf->parsed()) {
      const auto [p, value] = maxf_count_primes
                                  ? max_residue_gap_first_primes(maxf_bound)
                                  : max_residue_gap_below(maxf_bound);
      emit(mode, std::to_string(p) + " " + std::to_string(value) + "\n",
           json{{"bound", maxf_bound},
                {"first_primes", maxf_count_primes},
                {"prime", p},
                {"value", value}});
      return 0;
    }

    if (cmd_witness->parsed()) {
      const auto members = parse_uint_list(witness_set);
      const auto p = witness_prime_for_qr_set(members, bound);
      json doc{{"set", members}, {"bound", bound}};
      doc["witness_prime"] = p ? json(*p) : json(nullptr);
      emit(mode,
           p ? std::to_string(*p) + "\n"
             : "none below " + std::to_string(bound) + "\n",
           doc);
      return 0;
    }

    if (cmd_speccheck->parsed()) {
      std::vector<NamedEquation> eqs;
      for (auto& [id, eq] : parse_schema_list(schema_specs))
        eqs.push_back({schema_name(id), eq});
      const SpecCheckReport report = check_spec_criterion(eqs, bound, budget);
      std::string text;
      if (report.verdict.kind == SpecVerdict::Kind::NotASpec)
        text = "NotASpec: witness prime " + std::to_string(report.verdict.witness_prime) +
               " satisfies every equation\n";
      else
        text = "NoWitnessBelow " + std::to_string(report.verdict.bound) +
               ": every prime scanned falsifies the set\n";
      for (const EquationVerdict& v : report.per_equation) {
        text += "  " + v.name + " at p=" + std::to_string(report.decisive_prime) +
                ": " + (v.satisfied ? "Satisfied" : "Falsified");
        if (!v.satisfied) {
          text += " at";
          for (const auto& [name, value] : v.counterexample)
            text += " " + name + "=" + std::to_string(value);
        }
        text += "\n";
      }
      emit(mode, text, to_json(report));
      return 0;
    }

    if (cmd_hfamily->parsed()) {
      const auto witness = h_family_witness(family_n, bound, budget);
      json doc{{"n", family_n}, {"bound", bound}};
      std::string text;
      if (witness) {
        doc["witness_prime"] = *witness;
        text = "witness prime " + std::to_string(*witness) + "\n";
        json per = json::array();
        for (unsigned m = 0; m <= family_n; ++m) {
          const auto v = satisfies_fp(h_n(m), *witness, budget);
          EquationVerdict ev{"H:" + std::to_string(m), v.satisfied(), {}};
          if (!v.satisfied())
            for (const auto& [name, el] : v.witness())
              ev.counterexample.emplace(name, el.value());
          per.push_back(to_json(ev));
          text += "  H:" + std::to_string(m) + ": " +
                  (ev.satisfied ? "Satisfied" : "Falsified") + "\n";
        }
        doc["per_equation"] = std::move(per);
      } else {
        doc["witness_prime"] = nullptr;
        text = "no witness prime <= " + std::to_string(bound) + "\n";
      }
      emit(mode, text, doc);
      return 0;
    }

    if (cmd_prop->parsed()) {
      const PropositionReport report = proposition_check(prop_n, bound);
      std::string text;
      if (!report.prime_found) {
        text = "no prime with residue gap > " + std::to_string(prop_n + 1) +
               " below " + std::to_string(bound) + "\n";
      } else {
        text = "prime " + std::to_string(report.prime) + " has residue gap " +
               std::to_string(report.gap_value) + " > " + std::to_string(prop_n + 1) +
               "\n";
        for (const EquationVerdict& v : report.per_equation)
          text += "  " + v.name + ": " + (v.satisfied ? "Satisfied" : "Falsified") +
                  "\n";
      }
      emit(mode, text, to_json(report));
      return report.prime_found && report.all_satisfied ? 0 : 1;
    }

    if (cmd_example->parsed()) {
      const bool no_rational_root = rational_root_check();
      uint64_t first_missing = 0;
      uint64_t worst_prime = 0, worst_root = 0;
      for (uint64_t p : primes_below(bound + 1)) {
        const auto root = example_poly_root_mod(p);
        if (!root) {
          first_missing = p;
          break;
        }
        if (*root >= worst_root) {
          worst_root = *root;
          worst_prime = p;
        }
      }
      uint64_t cover_failure = 0;
      for (uint64_t p : primes_below(bound + 1)) {
        if (p < 5) continue;  // 2, 3, 6 must be nonzero mod p
        if (!is_qr(2, p) && !is_qr(3, p) && !is_qr(6 % p, p)) {
          cover_failure = p;
          break;
        }
      }
      const bool ok = no_rational_root && first_missing == 0 && cover_failure == 0;
      std::string text;
      text += std::string("rational roots: ") + (no_rational_root ? "none" : "FOUND") +
              "\n";
      text += first_missing == 0
                  ? "roots modulo p: present for every prime <= " +
                        std::to_string(bound) + " (largest least-root " +
                        std::to_string(worst_root) + " at p=" +
                        std::to_string(worst_prime) + ")\n"
                  : "roots modulo p: MISSING at p=" + std::to_string(first_missing) +
                        "\n";
      text += cover_failure == 0
                  ? "residue cover: one of 2, 3, 6 is a residue of every odd prime "
                    "in [5, " + std::to_string(bound) + "]\n"
                  : "residue cover: FAILS at p=" + std::to_string(cover_failure) + "\n";
      json doc{{"bound", bound},
               {"no_rational_root", no_rational_root},
               {"root_mod_every_prime", first_missing == 0},
               {"residue_cover_holds", cover_failure == 0}};
      if (first_missing) doc["first_prime_without_root"] = first_missing;
      if (cover_failure) doc["first_cover_failure"] = cover_failure;
      emit(mode, text, doc);
      return ok ? 0 : 1;
    }

    if (cmd_normalize->parsed()) {
      const Term t = parse_term(normalize_text, Signature::Extended);
      const Term normal = normalize_closed(t);
      const GaussianRational value = closed_value(t);
      const std::string printed = print_term(normal);
      emit(mode, printed + "\n",
           json{{"input", normalize_text},
                {"normal_form", printed},
                {"re", to_string(value.re)},
                {"im", to_string(value.im)}});
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "meadowlab/report_json.hpp"

namespace meadowlab {

using nlohmann::json;

json to_json(const EquationVerdict& v) {
  json out{{"schema", v.name},
           {"verdict", v.satisfied ? "Satisfied" : "Falsified"}};
  if (!v.satisfied) {
    json cx = json::object();
    for (const auto& [name, value] : v.counterexample) cx[name] = value;
    out["counterexample"] = std::move(cx);
  }
  return out;
}

json to_json(const SpecCheckReport& r) {
  json out;
  out["verdict"] = r.verdict.kind == SpecVerdict::Kind::NotASpec
                       ? "NotASpec"
                       : "NoWitnessBelow";
  if (r.verdict.kind == SpecVerdict::Kind::NotASpec)
    out["witness_prime"] = r.verdict.witness_prime;
  out["bound"] = r.verdict.bound;
  out["decisive_prime"] = r.decisive_prime;
  json per = json::array();
  for (const EquationVerdict& v : r.per_equation) per.push_back(to_json(v));
  out["per_equation"] = std::move(per);
  return out;
}

json to_json(const PropositionReport& r) {
  json out{{"n", r.n}, {"prime_found", r.prime_found}};
  if (r.prime_found) {
    out["prime"] = r.prime;
    out["gap_value"] = r.gap_value;
    out["all_satisfied"] = r.all_satisfied;
    json per = json::array();
    for (const EquationVerdict& v : r.per_equation) per.push_back(to_json(v));
    out["per_equation"] = std::move(per);
  }
  return out;
}

json to_json(const GaussianExampleReport& r) {
  json out{{"imaginary_square_ok", r.imaginary_square_ok},
           {"satisfied", r.satisfied},
           {"forced_points", r.forced_points},
           {"samples", r.samples}};
  if (r.counterexample) out["counterexample"] = to_string(*r.counterexample);
  return out;
}

namespace {

bool is_unsigned_number(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0);
}

}  // namespace

std::optional<std::string> validate_spec_report(const json& doc) {
  if (!doc.is_object()) return "report must be an object";

  const auto verdict = doc.find("verdict");
  if (verdict == doc.end() || !verdict->is_string())
    return "missing string field 'verdict'";
  const std::string kind = verdict->get<std::string>();
  if (kind != "NotASpec" && kind != "NoWitnessBelow")
    return "'verdict' must be NotASpec or NoWitnessBelow";

  const bool has_witness = doc.contains("witness_prime");
  if (kind == "NotASpec") {
    if (!has_witness || !is_unsigned_number(doc["witness_prime"]))
      return "NotASpec requires an unsigned 'witness_prime'";
  } else if (has_witness) {
    return "NoWitnessBelow must not carry 'witness_prime'";
  }

  if (!doc.contains("bound") || !is_unsigned_number(doc["bound"]))
    return "missing unsigned field 'bound'";

  const auto per = doc.find("per_equation");
  if (per == doc.end() || !per->is_array())
    return "missing array field 'per_equation'";
  for (const json& entry : *per) {
    if (!entry.is_object()) return "per_equation entries must be objects";
    if (!entry.contains("schema") || !entry["schema"].is_string())
      return "per_equation entry missing string 'schema'";
    if (!entry.contains("verdict") || !entry["verdict"].is_string())
      return "per_equation entry missing string 'verdict'";
    const std::string v = entry["verdict"].get<std::string>();
    if (v != "Satisfied" && v != "Falsified")
      return "per_equation verdict must be Satisfied or Falsified";
    const bool has_cx = entry.contains("counterexample");
    if (v == "Falsified") {
      if (!has_cx || !entry["counterexample"].is_object())
        return "Falsified entry requires an object 'counterexample'";
      for (const auto& [key, value] : entry["counterexample"].items()) {
        (void)key;
        if (!is_unsigned_number(value))
          return "counterexample values must be unsigned integers";
      }
    } else if (has_cx) {
      return "Satisfied entry must not carry 'counterexample'";
    }
  }
  return std::nullopt;
}

}  // namespace meadowlab

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "meadowlab/speccheck.hpp"

namespace meadowlab {

nlohmann::json to_json(const EquationVerdict& v);
nlohmann::json to_json(const SpecCheckReport& r);
nlohmann::json to_json(const PropositionReport& r);
nlohmann::json to_json(const GaussianExampleReport& r);

/// Structural validation of the spec-check report shape:
///   { verdict:  "NotASpec" | "NoWitnessBelow",
///     witness_prime?: unsigned            (present iff NotASpec),
///     bound: unsigned,
///     per_equation: [ { schema: string,
///                       verdict: "Satisfied" | "Falsified",
///                       counterexample?: { var: unsigned, ... } } ] }
/// Returns an error description, or nullopt when the document conforms.
std::optional<std::string> validate_spec_report(const nlohmann::json& doc);

}  // namespace meadowlab

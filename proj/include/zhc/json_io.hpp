#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "zhc/checks.hpp"

namespace zhc {

/// Algebra from a JSON spec: {"size": N, "basis": [matrix...], "negative":
/// [...], "cartan": [...], "positive": [...], "simple_triples": [{"e","f","h"}]}
/// with matrix entries as rational strings "p/q" (plain integers accepted).
ReductiveLieAlgebra algebra_from_json(const nlohmann::json& spec, const std::string& name);

/// Module from a JSON spec: {"dimension": D, "actions": [matrix per basis index]}.
FiniteModule module_from_json(const ReductiveLieAlgebra& alg, const nlohmann::json& spec, const std::string& name);

/// Preset name or path to a JSON file.
ReductiveLieAlgebra load_algebra(const std::string& spec);
FiniteModule load_module(const ReductiveLieAlgebra& alg, const std::string& spec);

/// Element file: [{"monomial": {"<basis index>": exponent, ...},
///                 "vector": <module basis index>, "coeff": "p/q"}, ...].
BimoduleElement element_from_json(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const nlohmann::json& terms);
BimoduleElement load_element(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const std::string& path);

nlohmann::json report_to_json(const Report& report);
void write_report(const Report& report, const std::string& path);

}  // namespace zhc

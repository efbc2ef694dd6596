#pragma once

#include <string>
#include <vector>

#include "zhc/finite_module.hpp"

namespace zhc {

/// Built-in matrix realizations: "sl2", "sl3", "gl2", "sl2xsl2".
/// Throws std::invalid_argument on unknown names.
ReductiveLieAlgebra preset_algebra(const std::string& name);
bool is_preset_algebra(const std::string& name);

/// Built-in modules: "trivial", "natural", "adjoint", "symN" (N-th symmetric
/// power of the natural realization, e.g. "sym2", "sym4").
FiniteModule preset_module(const ReductiveLieAlgebra& alg, const std::string& name);
bool is_preset_module(const std::string& name);

/// Action matrices of the adjoint module (ad X_a in the algebra basis).
std::vector<MatQ> adjoint_actions(const ReductiveLieAlgebra& alg);
/// Action matrices of Sym^k of the defining matrix realization.
std::vector<MatQ> sym_power_actions(const ReductiveLieAlgebra& alg, int k);
/// Block-diagonal direct sum of two action sets.
std::vector<MatQ> direct_sum_actions(const std::vector<MatQ>& a, const std::vector<MatQ>& b);

}  // namespace zhc

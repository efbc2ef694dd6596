#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zhc/invariants.hpp"
#include "zhc/random_elements.hpp"

namespace zhc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // optional failure detail
};

struct Report {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<CheckResult> checks;
    std::map<std::string, std::vector<int>> dims;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string witness = "");
};

/// The hypergeometric evaluation behind xi on V^0 cap V_ij: for j = 0..j_max,
/// the truncated series equals Psi_ij / (s_i o Psi_ij), both as a symbolic
/// fraction identity and through the spin-j sl2 module.
Report check_gauss(int j_max);

/// Braid relations of the xi operators on random localized elements.
Report check_braid(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples);

/// xi_i^2 = id on weight zero; on general elements xi_i^2 equals
/// (H_i+1) s_hat_i^2(.) (H_i+1)^{-1}.
Report check_xi_square(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples);

/// Filtration-wise verification that gamma is injective with image Q:
/// dim M^g_{<=d} = dim Q_{<=d} for d = 0..degree, gamma has zero kernel, and
/// every gamma image passes both Q tests.
Report check_hc(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// Graded counterpart: restricted symmetric invariants coincide degree-wise
/// with the W-invariant + divisibility criterion space, plus the W-orbit
/// reduction of the divisibility conditions and the Broer condition analysis.
Report check_chevalley(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// hc_project is idempotent and strategy-independent on random elements.
Report check_projection(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples,
                        int degree);

/// The two Q-membership tests agree on random polynomial weight-zero elements
/// (raw random elements plus randomized combinations of a Q basis).
Report check_q_equivalence(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples,
                           int degree);

/// Randomized-strategy Harish-Chandra projection used as an independent oracle:
/// reduces an arbitrary word representation by randomly interleaving the
/// admissible rewrite rules instead of normal-ordering first.
ZElement hc_project_random_strategy(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m,
                                    Rng& rng);

}  // namespace zhc

#pragma once

#include "zhc/bimodule.hpp"

namespace zhc {

/// The Zhelobenko operator xi_i applied to 1 (x) v for the weight-basis vector
/// with the given index:
///
///   sum_{k>=0} (k! H_i(H_i-1)...(H_i-k+1))^{-1} (x) E_i^k F_i^k s_hat_i(v),
///
/// truncated at the first k with F_i^k s_hat_i(v) = 0.
ZElement xi_on_vector(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, int weight_index);

/// xi_i on a general element: z = sum Phi_a (x) v_a maps to
/// sum (s_i o Phi_a) xi_on_vector(i, a).
ZElement xi(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const ZElement& z);

/// xi_i(xi_i(z)), cross-checked against (H_i+1) s_hat_i^2(z) (H_i+1)^{-1};
/// throws std::logic_error if the two disagree.
ZElement xi_square(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const ZElement& z);

/// Weyl group action on the zero weight subspace: xi along the word,
/// rightmost letter first. Throws std::invalid_argument off weight zero.
ZElement weyl_act_on_Z0(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const WeylWord& w, const ZElement& z);

/// Q-membership as the fixed-point condition xi_i(z) = z for all i.
/// Requires z polynomial of weight zero.
bool in_Q_fixedpoint(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z);

/// Q-membership via the isotypic divisibility criterion: every coefficient of
/// the V^0 cap V_ij component is divisible by Psi_ij with an s_i o -invariant
/// quotient. Requires z polynomial of weight zero.
bool in_Q_prop4(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z);

}  // namespace zhc

#pragma once

#include <random>

#include "zhc/bimodule.hpp"

namespace zhc {

using Rng = std::mt19937_64;

/// Small random rational with numerator in [-4, 4] and denominator in {1, 2, 3}.
Rational random_rational(Rng& rng);

/// Random polynomial in nvars variables of total degree <= degree (a few terms).
TorusPolynomial random_polynomial(Rng& rng, int nvars, int degree);

/// Random fraction: random numerator over up to max_factors denominator
/// factors (H_alpha + k) with coroots from the algebra and k in [-2, 2].
TorusFraction random_fraction(Rng& rng, const ReductiveLieAlgebra& alg, int degree, int max_factors);

/// Random element of Z-bar; weight_zero_only restricts the support to V^0,
/// max_factors = 0 yields polynomial elements of Z.
ZElement random_z_element(Rng& rng, const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree,
                          int max_factors, bool weight_zero_only);

/// Random element of M = U(g) (x) V of PBW degree <= degree.
BimoduleElement random_bimodule_element(Rng& rng, const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

}  // namespace zhc

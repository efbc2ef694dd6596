#include "zhc/random_elements.hpp"

namespace zhc {

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

TorusPolynomial random_polynomial(Rng& rng, int nvars, int degree) {
    TorusPolynomial p(nvars);
    std::uniform_int_distribution<int> deg(0, degree);
    std::uniform_int_distribution<int> nterms(1, 4);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        const int d = deg(rng);
        Exponents e(nvars, 0);
        std::uniform_int_distribution<int> var(0, nvars - 1);
        for (int k = 0; k < d; ++k) ++e[var(rng)];
        p.add_term(e, random_rational(rng));
    }
    return p;
}

TorusFraction random_fraction(Rng& rng, const ReductiveLieAlgebra& alg, int degree, int max_factors) {
    const int nc = alg.cartan_dim();
    TorusPolynomial num = random_polynomial(rng, nc, degree);
    if (num.is_zero()) num = TorusPolynomial::constant(nc, Rational(1));
    std::vector<LinearShiftFactor> den;
    if (max_factors > 0) {
        std::uniform_int_distribution<int> count(0, max_factors);
        std::uniform_int_distribution<int> shift(-2, 2);
        std::uniform_int_distribution<size_t> pick(0, alg.denominator_coroots().size() - 1);
        const int n = count(rng);
        for (int k = 0; k < n; ++k)
            den.push_back(LinearShiftFactor{alg.denominator_coroots()[pick(rng)], shift(rng)});
    }
    return TorusFraction(std::move(num), std::move(den));
}

ZElement random_z_element(Rng& rng, const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree,
                          int max_factors, bool weight_zero_only) {
    std::vector<int> indices;
    if (weight_zero_only) indices = mod.zero_weight_indices();
    else
        for (int b = 0; b < mod.dimension(); ++b) indices.push_back(b);

    ZElement z;
    if (indices.empty()) return z;
    std::uniform_int_distribution<size_t> pick(0, indices.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) z.add(indices[pick(rng)], random_fraction(rng, alg, degree, max_factors));
    return z;
}

BimoduleElement random_bimodule_element(Rng& rng, const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    std::uniform_int_distribution<int> deg(0, degree);
    std::uniform_int_distribution<int> pos(0, alg.dim() - 1);
    std::uniform_int_distribution<int> vec(0, mod.dimension() - 1);
    std::uniform_int_distribution<int> nterms(1, 4);
    BimoduleElement m;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        PbwMonomial mon(alg.dim(), 0);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ++mon[pos(rng)];
        m.add(mon, vec(rng), random_rational(rng));
    }
    return m;
}

}  // namespace zhc

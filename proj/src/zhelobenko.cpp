#include "zhc/zhelobenko.hpp"

#include <stdexcept>

namespace zhc {

namespace {

bool vec_is_zero(const VecQ& v) {
    for (int k = 0; k < v.size(); ++k)
        if (!v(k).is_zero()) return false;
    return true;
}

void require_polynomial_weight_zero(const FiniteModule& mod, const ZElement& z, const char* who) {
    if (!z.is_polynomial()) throw std::invalid_argument(std::string(who) + ": element is not polynomial");
    if (!z_weight_zero(mod, z)) throw std::invalid_argument(std::string(who) + ": element is not of weight zero");
}

}  // namespace

ZElement xi_on_vector(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, int weight_index) {
    const int nc = alg.cartan_dim();
    const auto& coroot = alg.simple_coroot(i);
    const MatQ& e = mod.action(alg.triple(i).e);
    const MatQ& f = mod.action(alg.triple(i).f);

    const VecQ v = mod.weight_basis().col(weight_index);
    const VecQ w = mod.s_hat(i) * v;

    ZElement out;
    VecQ fk = w;  // F_i^k s_hat_i(v)
    for (int k = 0; !vec_is_zero(fk); ++k) {
        VecQ term = fk;
        for (int rep = 0; rep < k; ++rep) term = e * term;

        std::vector<LinearShiftFactor> den;
        for (int t = 0; t < k; ++t) den.push_back(LinearShiftFactor{coroot, -t});
        TorusFraction coeff(TorusPolynomial::constant(nc, Rational(1) / factorial(k)), std::move(den));

        const VecQ wcoords = mod.weight_basis_inverse() * term;
        for (int b = 0; b < mod.dimension(); ++b)
            if (!wcoords(b).is_zero()) out.add(b, wcoords(b) * coeff);

        fk = f * fk;
    }
    return out;
}

ZElement xi(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const ZElement& z) {
    ZElement out;
    for (const auto& [a, phi] : z.comps) {
        const TorusFraction twisted = alg.shifted_action(WeylWord{i}, phi);
        out = out + twisted * xi_on_vector(alg, mod, i, a);
    }
    return out;
}

ZElement xi_square(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const ZElement& z) {
    const ZElement lhs = xi(alg, mod, i, xi(alg, mod, i, z));

    const auto& coroot = alg.simple_coroot(i);
    const MatQ s2 = mod.s_hat_weight(i) * mod.s_hat_weight(i);
    ZElement rhs = z_apply_weight_matrix(s2, z);
    rhs = TorusFraction(TorusPolynomial::linear(coroot, Rational(1))) * rhs;
    rhs = z_right_multiply_shift_factor(mod, rhs, coroot, 1, -1);

    if (!(lhs == rhs))
        throw std::logic_error("xi_square: xi_i(xi_i(z)) disagrees with (H_i+1) s_hat_i^2(z) (H_i+1)^{-1}");
    return lhs;
}

ZElement weyl_act_on_Z0(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const WeylWord& w, const ZElement& z) {
    if (!z_weight_zero(mod, z)) throw std::invalid_argument("weyl_act_on_Z0: element is not of weight zero");
    ZElement out = z;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = xi(alg, mod, *it, out);
    return out;
}

bool in_Q_fixedpoint(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z) {
    require_polynomial_weight_zero(mod, z, "in_Q_fixedpoint");
    for (int i = 0; i < alg.rank(); ++i)
        if (!(xi(alg, mod, i, z) == z)) return false;
    return true;
}

bool in_Q_prop4(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z) {
    require_polynomial_weight_zero(mod, z, "in_Q_prop4");
    const int nc = alg.cartan_dim();
    const auto& zero_idx = mod.zero_weight_indices();
    const int nz = static_cast<int>(zero_idx.size());

    // Components of z over the zero-weight coordinates, as polynomials.
    std::vector<TorusPolynomial> phi(nz, TorusPolynomial(nc));
    for (const auto& [a, frac] : z.comps) {
        for (int p = 0; p < nz; ++p)
            if (zero_idx[p] == a) { phi[p] = frac.numerator(); break; }
    }

    for (int i = 0; i < alg.rank(); ++i) {
        for (const auto& zi : mod.zero_isotypics(i)) {
            const TorusPolynomial psi = alg.psi(i, zi.j);
            const MatQ coords_of_proj = zi.coords * zi.projector0;
            for (int b = 0; b < coords_of_proj.rows(); ++b) {
                TorusPolynomial theta(nc);
                for (int p = 0; p < nz; ++p) {
                    if (coords_of_proj(b, p).is_zero()) continue;
                    theta += coords_of_proj(b, p) * phi[p];
                }
                if (theta.is_zero()) continue;
                auto quotient = poly_divide_exact(theta, psi);
                if (!quotient) return false;
                if (!(alg.shifted_action(WeylWord{i}, *quotient) == *quotient)) return false;
            }
        }
    }
    return true;
}

}  // namespace zhc

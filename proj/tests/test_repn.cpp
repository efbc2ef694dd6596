#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "zhc/presets.hpp"

using namespace zhc;

namespace {

std::vector<Rational> weight_multiset(const FiniteModule& mod, int cartan_index) {
    std::vector<Rational> out;
    for (int k = 0; k < mod.dimension(); ++k) out.push_back(mod.weight(k)[cartan_index]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("weight decompositions of the sl2 presets") {
    const auto alg = preset_algebra("sl2");

    const auto adjoint = preset_module(alg, "adjoint");
    CHECK(weight_multiset(adjoint, 0) == std::vector<Rational>{Rational(-2), Rational(0), Rational(2)});
    CHECK(adjoint.zero_weight_indices().size() == 1);

    const auto natural = preset_module(alg, "natural");
    CHECK(weight_multiset(natural, 0) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(natural.zero_weight_indices().empty());
}

TEST_CASE("sl3 adjoint zero weight space is the Cartan") {
    const auto alg = preset_algebra("sl3");
    const auto adjoint = preset_module(alg, "adjoint");
    CHECK(adjoint.dimension() == 8);
    CHECK(adjoint.zero_weight_indices().size() == 2);
}

TEST_CASE("isotypic projectors") {
    const auto alg = preset_algebra("sl2");

    // The adjoint is irreducible of spin 1.
    const auto adjoint = preset_module(alg, "adjoint");
    REQUIRE(adjoint.isotypics(0).size() == 1);
    CHECK(adjoint.isotypics(0)[0].twice_j == 2);
    CHECK(adjoint.isotypics(0)[0].projector == MatQ(MatQ::Identity(3, 3)));
    CHECK(adjoint.isotypic_projector(0, 0) == MatQ(MatQ::Zero(3, 3)));

    // natural + trivial: the spin-1/2 projector picks the first block, the
    // spin-0 projector the second.
    const auto mixed = FiniteModule::build(
        alg, direct_sum_actions(alg.basis(), std::vector<MatQ>(alg.dim(), MatQ::Zero(1, 1))), "natural+trivial");
    MatQ p_half = MatQ::Zero(3, 3);
    p_half(0, 0) = p_half(1, 1) = Rational(1);
    MatQ p_zero = MatQ::Zero(3, 3);
    p_zero(2, 2) = Rational(1);
    CHECK(mixed.isotypic_projector(0, 1) == p_half);
    CHECK(mixed.isotypic_projector(0, 0) == p_zero);
    // The half-integer component misses the zero weight space.
    REQUIRE(mixed.zero_isotypics(0).size() == 1);
    CHECK(mixed.zero_isotypics(0)[0].j == 0);

    // sl3 adjoint under the alpha_1 sl2: spins 1, 1/2, 1/2, 0; the zero weight
    // space splits 1 + 1 between spins 1 and 0, with span(H_1) inside spin 1.
    const auto sl3 = preset_algebra("sl3");
    const auto ad8 = preset_module(sl3, "adjoint");
    std::vector<int> spins;
    for (const auto& iso : ad8.isotypics(0)) spins.push_back(iso.twice_j);
    std::sort(spins.begin(), spins.end());
    CHECK(spins == std::vector<int>{0, 1, 2});
    REQUIRE(ad8.zero_isotypics(0).size() == 2);
    for (const auto& zi : ad8.zero_isotypics(0)) CHECK(zi.basis.cols() == 1);
    // H_1 (algebra basis index 3) lies in the spin-1 part of the zero weight space.
    const VecQ h1_w = ad8.weight_basis_inverse() * VecQ(VecQ::Unit(8, 3));
    const MatQ proj1_w = ad8.isotypics(0)[0].twice_j == 2 ? ad8.isotypics(0)[0].projector_weight
                                                          : ad8.weight_basis_inverse() *
                                                                ad8.isotypic_projector(0, 2) * ad8.weight_basis();
    CHECK(MatQ(proj1_w * h1_w) == MatQ(h1_w));
}

TEST_CASE("projectors resolve the identity and commute with the sl2 action") {
    for (const char* aname : {"sl2", "sl3"}) {
        const auto alg = preset_algebra(aname);
        for (const char* mname : {"natural", "adjoint"}) {
            const auto mod = preset_module(alg, mname);
            for (int i = 0; i < alg.rank(); ++i) {
                MatQ sum = MatQ::Zero(mod.dimension(), mod.dimension());
                for (const auto& iso : mod.isotypics(i)) {
                    sum += iso.projector;
                    CHECK(MatQ(iso.projector * iso.projector) == iso.projector);
                    for (int x : {alg.triple(i).e, alg.triple(i).f, alg.triple(i).h})
                        CHECK(MatQ(iso.projector * mod.action(x)) == MatQ(mod.action(x) * iso.projector));
                    for (const auto& other : mod.isotypics(i)) {
                        if (other.twice_j == iso.twice_j) continue;
                        CHECK(MatQ(iso.projector * other.projector) == MatQ(MatQ::Zero(mod.dimension(), mod.dimension())));
                    }
                }
                CHECK(sum == MatQ(MatQ::Identity(mod.dimension(), mod.dimension())));
            }
        }
    }
}

TEST_CASE("reflection representative on modules") {
    const auto alg = preset_algebra("sl2");
    const auto adjoint = preset_module(alg, "adjoint");

    // v = H has zero weight in the spin-1 adjoint: s_hat v = -v.
    const VecQ h_std = VecQ::Unit(3, 1);
    CHECK(MatQ(adjoint.s_hat_on_vector(0, h_std)) == MatQ(-h_std));

    // Zero-weight vectors in spin-0 components are fixed.
    const auto trivial = preset_module(alg, "trivial");
    CHECK(trivial.s_hat(0) == MatQ(MatQ::Identity(1, 1)));

    // s_hat realizes s_i on weights.
    for (const char* aname : {"sl3", "sl2xsl2"}) {
        const auto a = preset_algebra(aname);
        const auto m = preset_module(a, "adjoint");
        for (int i = 0; i < a.rank(); ++i) {
            const MatQ& s = m.s_hat_weight(i);
            for (int col = 0; col < m.dimension(); ++col) {
                const auto expected = a.reflect_functional(i, m.weight(col));
                for (int row = 0; row < m.dimension(); ++row)
                    if (!s(row, col).is_zero()) CHECK(m.weight(row) == expected);
            }
        }
    }
}

TEST_CASE("E^k F^k scalar on zero-weight isotypic vectors") {
    CHECK(ek_fk_on_zero_weight(1, 1) == Rational(2));
    CHECK(ek_fk_on_zero_weight(7, 0) == Rational(1));
    CHECK(ek_fk_on_zero_weight(1, 2) == Rational(0));
    CHECK(ek_fk_on_zero_weight(2, 2) == Rational(24));  // 1*2*3*4

    // Matrix check: E^k F^k on V^0 cap V_ij acts by the scalar.
    for (int j = 0; j <= 4; ++j) {
        const auto alg = preset_algebra("sl2");
        const auto mod = preset_module(alg, "sym" + std::to_string(2 * j));
        REQUIRE(mod.zero_weight_indices().size() == 1);
        const VecQ v = mod.weight_basis().col(mod.zero_weight_indices()[0]);
        for (int k = 0; k <= j + 1; ++k) {
            VecQ w = v;
            for (int t = 0; t < k; ++t) w = mod.action(alg.triple(0).f) * w;
            for (int t = 0; t < k; ++t) w = mod.action(alg.triple(0).e) * w;
            CHECK(MatQ(w) == MatQ(ek_fk_on_zero_weight(j, k) * v));
        }
    }

    // And on the mixed-spin zero weight space of the sl3 adjoint.
    const auto sl3 = preset_algebra("sl3");
    const auto ad8 = preset_module(sl3, "adjoint");
    for (int i = 0; i < 2; ++i) {
        for (const auto& zi : ad8.zero_isotypics(i)) {
            const auto& zero = ad8.zero_weight_indices();
            for (int col = 0; col < zi.basis.cols(); ++col) {
                VecQ v_std = VecQ::Zero(8);
                for (int p = 0; p < static_cast<int>(zero.size()); ++p)
                    v_std += zi.basis(p, col) * ad8.weight_basis().col(zero[p]);
                for (int k = 0; k <= zi.j + 1; ++k) {
                    VecQ w = v_std;
                    for (int t = 0; t < k; ++t) w = ad8.action(sl3.triple(i).f) * w;
                    for (int t = 0; t < k; ++t) w = ad8.action(sl3.triple(i).e) * w;
                    CHECK(MatQ(w) == MatQ(ek_fk_on_zero_weight(zi.j, k) * v_std));
                }
            }
        }
    }
}

TEST_CASE("build_module rejects bad input") {
    const auto alg = preset_algebra("sl2");

    // Perturbed action matrices break the representation property.
    auto actions = adjoint_actions(alg);
    actions[0](0, 0) += Rational(1);
    CHECK_THROWS_WITH_AS(FiniteModule::build(alg, std::move(actions), "broken"),
                         doctest::Contains("representation property"), std::runtime_error);

    // A non-semisimple action of the gl2 center is not a weight module.
    const auto gl2 = preset_algebra("gl2");
    std::vector<MatQ> nilp(gl2.dim(), MatQ::Zero(2, 2));
    nilp[2](0, 1) = Rational(1);  // center acts by a Jordan block
    CHECK_THROWS_WITH_AS(FiniteModule::build(gl2, std::move(nilp), "jordan"), doctest::Contains("diagonalizable"),
                         std::runtime_error);
}

#include <doctest.h>

#include "oracles.hpp"
#include "zhc/checks.hpp"
#include "zhc/presets.hpp"

using namespace zhc;

namespace {

TorusFraction half_psi1(const ReductiveLieAlgebra& alg) {
    return TorusFraction(alg.psi(0, 1) * Rational(1, 2));
}

}  // namespace

TEST_CASE("xi on basis vectors of the sl2 adjoint") {
    const auto alg = preset_algebra("sl2");
    const auto mod = preset_module(alg, "adjoint");
    const int h_idx = mod.zero_weight_indices()[0];

    // xi(1 (x) H^) = (H+2)/(-H) (x) H^.
    const ZElement img = xi_on_vector(alg, mod, 0, h_idx);
    REQUIRE(img.comps.size() == 1);
    const TorusFraction& c = img.comps.at(h_idx);
    TorusPolynomial minus_h_minus_2(1);
    minus_h_minus_2.add_term({1}, Rational(-1));
    minus_h_minus_2.add_term({0}, Rational(-2));
    CHECK(c.numerator() == minus_h_minus_2);
    REQUIRE(c.denominator().size() == 1);
    CHECK(c.denominator()[0].shift == 0);
    CHECK_FALSE(img.is_polynomial());

    // Same value through xi on the ZElement 1 (x) H^.
    ZElement one_h;
    one_h.add(h_idx, TorusFraction::constant(1, Rational(1)));
    CHECK(xi(alg, mod, 0, one_h) == img);
}

TEST_CASE("xi fixes the projected invariant") {
    const auto alg = preset_algebra("sl2");
    const auto mod = preset_module(alg, "adjoint");
    const int h_idx = mod.zero_weight_indices()[0];

    // z = 1/2 (H+2) (x) H^ is a fixed point: s o (1/2(H+2)) = -H/2 and
    // (-H/2) * ((H+2)/(-H)) = 1/2 (H+2).
    ZElement z;
    z.add(h_idx, half_psi1(alg));
    CHECK(xi(alg, mod, 0, z) == z);
    CHECK(in_Q_fixedpoint(alg, mod, z));
    CHECK(in_Q_prop4(alg, mod, z));
}

TEST_CASE("xi on spin-0 vectors is the identity") {
    const auto alg = preset_algebra("sl2");
    const auto trivial = preset_module(alg, "trivial");
    ZElement one_v;
    one_v.add(0, TorusFraction::constant(1, Rational(1)));
    CHECK(xi(alg, trivial, 0, one_v) == one_v);
    CHECK(in_Q_fixedpoint(alg, trivial, one_v));

    // The spin-0 line of the sl3 adjoint zero weight space is fixed by xi_1.
    const auto sl3 = preset_algebra("sl3");
    const auto ad8 = preset_module(sl3, "adjoint");
    for (const auto& zi : ad8.zero_isotypics(0)) {
        if (zi.j != 0) continue;
        ZElement z;
        const auto& zero = ad8.zero_weight_indices();
        for (int p = 0; p < static_cast<int>(zero.size()); ++p)
            if (!zi.basis(p, 0).is_zero()) z.add(zero[p], TorusFraction::constant(2, zi.basis(p, 0)));
        CHECK(xi(sl3, ad8, 0, z) == z);
    }
}

TEST_CASE("closed form for higher spins") {
    // xi on the zero-weight vector of the spin-2 module: (H+2)(H+3)/(H(H-1)).
    const auto alg = preset_algebra("sl2");
    const auto mod = preset_module(alg, "sym4");
    const int idx = mod.zero_weight_indices()[0];
    const ZElement img = xi_on_vector(alg, mod, 0, idx);
    REQUIRE(img.comps.size() == 1);
    const TorusFraction& c = img.comps.at(idx);
    CHECK(c.numerator() == alg.psi(0, 2));
    REQUIRE(c.denominator().size() == 2);
    CHECK(c.denominator()[0].shift == -1);
    CHECK(c.denominator()[1].shift == 0);
}

TEST_CASE("xi squares") {
    const auto alg = preset_algebra("sl2");
    const auto adjoint = preset_module(alg, "adjoint");

    // Weight zero: xi^2 = id (and the conjugation cross-check runs inside).
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        const ZElement z = random_z_element(rng, alg, adjoint, 3, 0, true);
        CHECK(xi_square(alg, adjoint, 0, z) == z);
    }

    // Natural module, weight +1 vector: xi^2(1 (x) v+) = -(H+1)/H (x) v+.
    const auto natural = preset_module(alg, "natural");
    int plus_idx = -1;
    for (int k = 0; k < natural.dimension(); ++k)
        if (natural.weight(k)[0] == Rational(1)) plus_idx = k;
    REQUIRE(plus_idx >= 0);
    ZElement v_plus;
    v_plus.add(plus_idx, TorusFraction::constant(1, Rational(1)));
    const ZElement sq = xi_square(alg, natural, 0, v_plus);
    REQUIRE(sq.comps.size() == 1);
    const TorusFraction& c = sq.comps.at(plus_idx);
    TorusPolynomial minus_h_minus_1(1);
    minus_h_minus_1.add_term({1}, Rational(-1));
    minus_h_minus_1.add_term({0}, Rational(-1));
    CHECK(c.numerator() == minus_h_minus_1);
    REQUIRE(c.denominator().size() == 1);
    CHECK(c.denominator()[0].shift == 0);

    // Phi (x) v with s_hat^2 v = v and weight zero stays fixed under xi^2.
    const ZElement fixed = random_z_element(rng, alg, adjoint, 2, 1, true);
    CHECK(xi_square(alg, adjoint, 0, fixed) == fixed);
}

TEST_CASE("weyl action on the zero weight subspace") {
    const auto alg = preset_algebra("sl3");
    const auto mod = preset_module(alg, "adjoint");
    Rng rng(71);
    for (int t = 0; t < 6; ++t) {
        const ZElement z = random_z_element(rng, alg, mod, 2, 1, true);
        CHECK(weyl_act_on_Z0(alg, mod, {}, z) == z);
        CHECK(weyl_act_on_Z0(alg, mod, {0, 0}, z) == z);
        CHECK(weyl_act_on_Z0(alg, mod, {1, 1}, z) == z);
        // Both reduced words of the longest element agree.
        CHECK(weyl_act_on_Z0(alg, mod, {0, 1, 0}, z) == weyl_act_on_Z0(alg, mod, {1, 0, 1}, z));
    }
    const ZElement off = random_z_element(rng, alg, mod, 1, 0, false);
    if (!z_weight_zero(mod, off)) CHECK_THROWS_AS(weyl_act_on_Z0(alg, mod, {0}, off), std::invalid_argument);
}

TEST_CASE("membership tests and their guards") {
    const auto alg = preset_algebra("sl2");
    const auto mod = preset_module(alg, "adjoint");
    const int h_idx = mod.zero_weight_indices()[0];

    // 1 (x) H^ is not in Q (its xi image is not polynomial).
    ZElement one_h;
    one_h.add(h_idx, TorusFraction::constant(1, Rational(1)));
    CHECK_FALSE(in_Q_fixedpoint(alg, mod, one_h));
    CHECK_FALSE(in_Q_prop4(alg, mod, one_h));

    // H (x) H^ fails prop4: H is not divisible by H+2.
    ZElement h_h;
    h_h.add(h_idx, TorusFraction(TorusPolynomial::variable(1, 0)));
    CHECK_FALSE(in_Q_prop4(alg, mod, h_h));
    CHECK_FALSE(in_Q_fixedpoint(alg, mod, h_h));

    // Over a spin-0 zero weight space any s o -invariant coefficient passes.
    const auto trivial = preset_module(alg, "trivial");
    const TorusPolynomial h = TorusPolynomial::variable(1, 0);
    ZElement inv0;
    inv0.add(0, TorusFraction(h * (h + TorusPolynomial::constant(1, Rational(2)))));
    CHECK(in_Q_prop4(alg, trivial, inv0));
    CHECK(in_Q_fixedpoint(alg, trivial, inv0));

    // Guards: non-polynomial and nonzero-weight inputs are rejected.
    ZElement frac;
    frac.add(h_idx, TorusFraction(TorusPolynomial::constant(1, Rational(1)),
                                  {LinearShiftFactor{alg.simple_coroot(0), 0}}));
    CHECK_THROWS_AS(in_Q_fixedpoint(alg, mod, frac), std::invalid_argument);
    bool nonzero_found = false;
    for (int k = 0; k < mod.dimension() && !nonzero_found; ++k) {
        if (mod.weight(k)[0] != Rational(0)) {
            ZElement bad;
            bad.add(k, TorusFraction::constant(1, Rational(1)));
            CHECK_THROWS_AS(in_Q_prop4(alg, mod, bad), std::invalid_argument);
            nonzero_found = true;
        }
    }
    CHECK(nonzero_found);
}

TEST_CASE("twisted linearity") {
    const auto alg = preset_algebra("sl3");
    const auto mod = preset_module(alg, "adjoint");
    Rng rng(73);
    for (int t = 0; t < 8; ++t) {
        const ZElement z = random_z_element(rng, alg, mod, 2, 1, false);
        const TorusFraction phi = random_fraction(rng, alg, 2, 1);
        for (int i = 0; i < alg.rank(); ++i) {
            const ZElement lhs = xi(alg, mod, i, phi * z);
            const ZElement rhs = alg.shifted_action(WeylWord{i}, phi) * xi(alg, mod, i, z);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gauss identity suite") {
    const auto rep = check_gauss(5);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("braid relations") {
    const auto sl3 = preset_algebra("sl3");
    const auto rep3 = check_braid(sl3, preset_module(sl3, "adjoint"), 101, 6);
    for (const auto& c : rep3.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.pass);
    }
    const auto prod = preset_algebra("sl2xsl2");
    const auto rep22 = check_braid(prod, preset_module(prod, "adjoint"), 103, 6);
    for (const auto& c : rep22.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("the two Q criteria agree on random elements") {
    for (const char* name : {"sl2", "sl3"}) {
        const auto alg = preset_algebra(name);
        const auto mod = preset_module(alg, "adjoint");
        const auto rep = check_q_equivalence(alg, mod, 107, 30, 3);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.witness);
            CHECK(c.pass);
        }
        CHECK(rep.inputs.at("q_members_seen") != "0");
    }
}

#include <doctest.h>

#include "oracles.hpp"
#include "zhc/presets.hpp"
#include "zhc/random_elements.hpp"

using namespace zhc;

namespace {

PbwElement random_pbw(Rng& rng, const ReductiveLieAlgebra& alg, int degree) {
    std::uniform_int_distribution<int> deg(0, degree), pos(0, alg.dim() - 1), nterms(1, 3);
    PbwElement u;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        PbwMonomial mon(alg.dim(), 0);
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) ++mon[pos(rng)];
        u.add(mon, random_rational(rng));
    }
    return u;
}

}  // namespace

TEST_CASE("sl2 normal ordering: E F = FE + H") {
    const auto alg = preset_algebra("sl2");
    const PbwElement e = pbw_generator(alg, 2), f = pbw_generator(alg, 0), h = pbw_generator(alg, 1);

    PbwElement expected;
    expected.add(pbw_monomial_of_word(alg, {0, 2}), Rational(1));  // FE
    expected.add(pbw_monomial_of_word(alg, {1}), Rational(1));     // H
    const PbwElement ef = pbw_multiply(alg, e, f);
    CHECK(ef == expected);

    // Matrix oracle on a few modules: the product acts as the composite operator.
    for (const char* mname : {"natural", "adjoint", "sym3"}) {
        const auto mod = preset_module(alg, mname);
        CHECK(test::operator_on_module(alg, mod, ef) ==
              MatQ(test::operator_on_module(alg, mod, e) * test::operator_on_module(alg, mod, f)));
    }

    // H then E is already normal ordered; E then H picks up -2E.
    const PbwElement he = pbw_multiply(alg, h, e);
    PbwElement he_expected;
    he_expected.add(pbw_monomial_of_word(alg, {1, 2}), Rational(1));
    CHECK(he == he_expected);
    const PbwElement eh = pbw_multiply(alg, e, h);
    PbwElement eh_expected = he_expected;
    eh_expected.add(pbw_monomial_of_word(alg, {2}), Rational(-2));
    CHECK(eh == eh_expected);

    // Unit.
    Rng rng(5);
    const PbwElement u = random_pbw(rng, alg, 3);
    CHECK(pbw_multiply(alg, pbw_one(alg), u) == u);
}

TEST_CASE("multiplication agrees with the module operator oracle") {
    for (const char* name : {"sl2", "sl3", "gl2"}) {
        const auto alg = preset_algebra(name);
        const auto natural = preset_module(alg, "natural");
        const auto adjoint = preset_module(alg, "adjoint");
        Rng rng(29);
        for (int t = 0; t < 12; ++t) {
            const PbwElement a = random_pbw(rng, alg, 2), b = random_pbw(rng, alg, 2);
            const PbwElement ab = pbw_multiply(alg, a, b);
            for (const auto* mod : {&natural, &adjoint}) {
                CHECK(test::operator_on_module(alg, *mod, ab) ==
                      MatQ(test::operator_on_module(alg, *mod, a) * test::operator_on_module(alg, *mod, b)));
            }
        }
    }
}

TEST_CASE("multiplication is associative") {
    const auto alg = preset_algebra("sl3");
    Rng rng(31);
    for (int t = 0; t < 8; ++t) {
        const PbwElement a = random_pbw(rng, alg, 2), b = random_pbw(rng, alg, 2), c = random_pbw(rng, alg, 2);
        CHECK(pbw_multiply(alg, pbw_multiply(alg, a, b), c) == pbw_multiply(alg, a, pbw_multiply(alg, b, c)));
    }
}

TEST_CASE("ad acts by commutators and is a derivation") {
    const auto alg = preset_algebra("sl2");
    const PbwElement f = pbw_generator(alg, 0), h = pbw_generator(alg, 1);

    // ad E (F) = H.
    CHECK(ad_action(alg, 2, f) == h);
    // ad H (1) = 0.
    CHECK(ad_action(alg, 1, pbw_one(alg)).is_zero());

    // ad E (F^2) by the Leibniz oracle: (ad E F) F + F (ad E F) = HF + FH = 2FH - 2F.
    const PbwElement f2 = pbw_multiply(alg, f, f);
    PbwElement expected;
    expected.add_scaled(pbw_multiply(alg, ad_action(alg, 2, f), f), Rational(1));
    expected.add_scaled(pbw_multiply(alg, f, ad_action(alg, 2, f)), Rational(1));
    CHECK(ad_action(alg, 2, f2) == expected);

    // Frozen value: 2FH - 2F.
    PbwElement frozen;
    frozen.add(pbw_monomial_of_word(alg, {0, 1}), Rational(2));
    frozen.add(pbw_monomial_of_word(alg, {0}), Rational(-2));
    CHECK(ad_action(alg, 2, f2) == frozen);

    // Derivation property on random pairs.
    const auto sl3 = preset_algebra("sl3");
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        const PbwElement a = random_pbw(rng, sl3, 2), b = random_pbw(rng, sl3, 2);
        std::uniform_int_distribution<int> x(0, sl3.dim() - 1);
        const int gen = x(rng);
        PbwElement lhs = ad_action(sl3, gen, pbw_multiply(sl3, a, b));
        PbwElement rhs;
        rhs.add_scaled(pbw_multiply(sl3, ad_action(sl3, gen, a), b), Rational(1));
        rhs.add_scaled(pbw_multiply(sl3, a, ad_action(sl3, gen, b)), Rational(1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reflection representatives act as matrix conjugation on generators") {
    for (const char* name : {"sl2", "sl3", "gl2", "sl2xsl2"}) {
        const auto alg = preset_algebra(name);
        for (int i = 0; i < alg.rank(); ++i) {
            const MatQ s = test::defining_s_hat(alg, i);
            const MatQ s_inv = inverse(s);
            for (int a = 0; a < alg.dim(); ++a) {
                // Expand S X_a S^{-1} in the basis via the algebra's own solve.
                const MatQ conj = s * alg.basis()[a] * s_inv;
                PbwElement expected;
                {
                    MatQ flat(alg.matrix_size() * alg.matrix_size(), alg.dim());
                    for (int b = 0; b < alg.dim(); ++b) {
                        int k = 0;
                        for (int col = 0; col < alg.matrix_size(); ++col)
                            for (int row = 0; row < alg.matrix_size(); ++row) flat(k++, b) = alg.basis()[b](row, col);
                    }
                    VecQ target(alg.matrix_size() * alg.matrix_size());
                    int k = 0;
                    for (int col = 0; col < alg.matrix_size(); ++col)
                        for (int row = 0; row < alg.matrix_size(); ++row) target(k++) = conj(row, col);
                    const VecQ coeffs = left_inverse(flat) * target;
                    for (int b = 0; b < alg.dim(); ++b)
                        if (!coeffs(b).is_zero()) expected.add_scaled(pbw_generator(alg, b), coeffs(b));
                }
                CHECK(s_hat_adjoint(alg, i, pbw_generator(alg, a)) == expected);
            }
        }
    }
}

TEST_CASE("sl2 reflection representative on generators") {
    const auto alg = preset_algebra("sl2");
    // Ad(s_hat): H -> -H, E -> -F, 1 -> 1.
    PbwElement minus_h, minus_f;
    minus_h.add(pbw_monomial_of_word(alg, {1}), Rational(-1));
    minus_f.add(pbw_monomial_of_word(alg, {0}), Rational(-1));
    CHECK(s_hat_adjoint(alg, 0, pbw_generator(alg, 1)) == minus_h);
    CHECK(s_hat_adjoint(alg, 0, pbw_generator(alg, 2)) == minus_f);
    CHECK(s_hat_adjoint(alg, 0, pbw_one(alg)) == pbw_one(alg));
}

TEST_CASE("reflection representatives are algebra automorphisms and braid") {
    const auto alg = preset_algebra("sl3");
    Rng rng(41);
    for (int t = 0; t < 8; ++t) {
        const PbwElement a = random_pbw(rng, alg, 2), b = random_pbw(rng, alg, 1);
        for (int i = 0; i < alg.rank(); ++i) {
            CHECK(s_hat_adjoint(alg, i, pbw_multiply(alg, a, b)) ==
                  pbw_multiply(alg, s_hat_adjoint(alg, i, a), s_hat_adjoint(alg, i, b)));
        }
        // Degree is preserved.
        CHECK(pbw_degree(s_hat_adjoint(alg, 0, a)) == pbw_degree(a));
    }

    // Braid relation as operators on U(sl3), filtration degree <= 3.
    for (int t = 0; t < 6; ++t) {
        const PbwElement u = random_pbw(rng, alg, 3);
        const PbwElement lhs = s_hat_adjoint(alg, 0, s_hat_adjoint(alg, 1, s_hat_adjoint(alg, 0, u)));
        const PbwElement rhs = s_hat_adjoint(alg, 1, s_hat_adjoint(alg, 0, s_hat_adjoint(alg, 1, u)));
        CHECK(lhs == rhs);
    }

    // The Cartan part maps to itself, realizing the plain reflection.
    for (int i = 0; i < alg.rank(); ++i) {
        for (int c = 0; c < alg.cartan_dim(); ++c) {
            std::vector<Rational> coords(alg.cartan_dim(), Rational(0));
            coords[c] = Rational(1);
            const auto reflected = alg.reflect_cartan(i, coords);
            PbwElement expected;
            for (int d = 0; d < alg.cartan_dim(); ++d)
                if (!reflected[d].is_zero()) expected.add_scaled(pbw_generator(alg, alg.cartan_part()[d]), reflected[d]);
            CHECK(s_hat_adjoint(alg, i, pbw_generator(alg, alg.cartan_part()[c])) == expected);
        }
    }
}

TEST_CASE("monomial weights") {
    const auto alg = preset_algebra("sl2");
    // F^2 has weight -4 on H.
    CHECK(monomial_weight(alg, pbw_monomial_of_word(alg, {0, 0})) == std::vector<Rational>{Rational(-4)});
    // H^3 has weight 0.
    CHECK(monomial_weight(alg, pbw_monomial_of_word(alg, {1, 1, 1})) == std::vector<Rational>{Rational(0)});
    // FE has weight 0.
    CHECK(monomial_weight(alg, pbw_monomial_of_word(alg, {0, 2})) == std::vector<Rational>{Rational(0)});
}

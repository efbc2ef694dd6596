#include <doctest.h>

#include "oracles.hpp"
#include "zhc/fraction.hpp"
#include "zhc/random_elements.hpp"

using namespace zhc;

namespace {

TorusPolynomial h_poly(int var = 0, int nvars = 1) { return TorusPolynomial::variable(nvars, var); }

TorusPolynomial h_plus(long k) {
    return h_poly() + TorusPolynomial::constant(1, Rational(k));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK((Rational(7, 2) / Rational(7)) == Rational(1, 2));
    CHECK(Rational(5, -10).denominator() == 2);
    CHECK(Rational(5, -10).numerator() == -1);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::parse("-22/7").str() == "-22/7");
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("polynomial arithmetic") {
    // (H+1)(H-1) = H^2 - 1
    const TorusPolynomial prod = h_plus(1) * h_plus(-1);
    TorusPolynomial expected(1);
    expected.add_term({2}, Rational(1));
    expected.add_term({0}, Rational(-1));
    CHECK(prod == expected);

    // p + 0 = p
    const TorusPolynomial p = h_plus(3) * h_plus(3);
    CHECK(p + TorusPolynomial(1) == p);

    // (H1+H2)^2 = H1^2 + 2 H1 H2 + H2^2
    const TorusPolynomial s = TorusPolynomial::variable(2, 0) + TorusPolynomial::variable(2, 1);
    TorusPolynomial sq(2);
    sq.add_term({2, 0}, Rational(1));
    sq.add_term({1, 1}, Rational(2));
    sq.add_term({0, 2}, Rational(1));
    CHECK(s * s == sq);

    CHECK_THROWS_AS(h_poly() + TorusPolynomial::variable(2, 0), std::invalid_argument);
}

TEST_CASE("exact division") {
    // (H^2 + 2H) / H = H + 2
    const TorusPolynomial p = h_poly() * h_plus(2);
    auto q = poly_divide_exact(p, h_poly());
    REQUIRE(q.has_value());
    CHECK(*q == h_plus(2));

    CHECK_FALSE(poly_divide_exact(h_plus(1), h_poly()).has_value());

    // (H+2)(H+3) divided by Psi_{i,2} = (H+2)(H+3) is 1.
    const TorusPolynomial psi2 = h_plus(2) * h_plus(3);
    auto unit = poly_divide_exact(h_plus(2) * h_plus(3), psi2);
    REQUIRE(unit.has_value());
    CHECK(*unit == TorusPolynomial::constant(1, Rational(1)));

    CHECK_THROWS_AS(poly_divide_exact(h_poly(), TorusPolynomial(1)), std::domain_error);
}

TEST_CASE("division round-trip on random polynomials") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int nvars = 1 + static_cast<int>(trial % 3);
        const TorusPolynomial p = random_polynomial(rng, nvars, 3);
        TorusPolynomial q = random_polynomial(rng, nvars, 2);
        if (q.is_zero()) q = TorusPolynomial::constant(nvars, Rational(1));
        auto back = poly_divide_exact(p * q, q);
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
}

TEST_CASE("fraction normalization and arithmetic") {
    const std::vector<Rational> coroot{Rational(1)};

    // H(H+2) / {H} -> H+2
    TorusFraction f(h_poly() * h_plus(2), {LinearShiftFactor{coroot, 0}});
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == h_plus(2));

    // 1/{H} + 1/{H} = 2/{H}
    const TorusFraction inv_h(TorusPolynomial::constant(1, Rational(1)), {LinearShiftFactor{coroot, 0}});
    const TorusFraction two_inv_h(TorusPolynomial::constant(1, Rational(2)), {LinearShiftFactor{coroot, 0}});
    CHECK(inv_h + inv_h == two_inv_h);

    // ((H+2)/{H}) * (H/{H+2}) = 1
    const TorusFraction a(h_plus(2), {LinearShiftFactor{coroot, 0}});
    const TorusFraction b(h_poly(), {LinearShiftFactor{coroot, 2}});
    CHECK(a * b == TorusFraction::constant(1, Rational(1)));

    // Sign canonicalization: 1/(-H-2) = -1/(H+2).
    const TorusFraction c(TorusPolynomial::constant(1, Rational(1)),
                          {LinearShiftFactor{{Rational(-1)}, -2}});
    CHECK(c.numerator() == TorusPolynomial::constant(1, Rational(-1)));
    CHECK(c.denominator().size() == 1);
    CHECK(c.denominator()[0].shift == 2);
}

TEST_CASE("fraction inversion by linear factors") {
    const std::vector<std::vector<Rational>> coroots{{Rational(1)}};
    // (H)(H-1)(H+3) inverts cleanly.
    const TorusFraction f(h_poly() * h_plus(-1) * h_plus(3) * Rational(2));
    const TorusFraction inv = invert_fraction(f, coroots);
    CHECK(f * inv == TorusFraction::constant(1, Rational(1)));

    // H^2 + 1 is not a product of shift factors.
    TorusPolynomial bad(1);
    bad.add_term({2}, Rational(1));
    bad.add_term({0}, Rational(1));
    CHECK_THROWS_AS(invert_fraction(TorusFraction(bad), coroots), std::domain_error);
    // 2H + 3 has a root at a non-integer shift.
    CHECK_THROWS_AS(invert_fraction(TorusFraction(h_poly() * Rational(2) + TorusPolynomial::constant(1, Rational(3))), coroots),
                    std::domain_error);
    CHECK_THROWS_AS(invert_fraction(TorusFraction(TorusPolynomial(1)), coroots), std::domain_error);
}

TEST_CASE("fraction arithmetic is confluent across association orders") {
    const std::vector<std::vector<Rational>> coroots{{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                                                     {Rational(1), Rational(1)}};
    Rng rng(11);
    auto random_frac = [&](Rng& r) {
        TorusPolynomial num = random_polynomial(r, 2, 2);
        if (num.is_zero()) num = TorusPolynomial::constant(2, Rational(1));
        std::uniform_int_distribution<int> nfac(0, 2), shift(-2, 2);
        std::uniform_int_distribution<size_t> pick(0, coroots.size() - 1);
        std::vector<LinearShiftFactor> den;
        const int n = nfac(r);
        for (int k = 0; k < n; ++k) den.push_back(LinearShiftFactor{coroots[pick(r)], shift(r)});
        return TorusFraction(std::move(num), std::move(den));
    };
    for (int trial = 0; trial < 40; ++trial) {
        const TorusFraction a = random_frac(rng), b = random_frac(rng), c = random_frac(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("kernel basis") {
    MatQ id = MatQ::Identity(2, 2);
    CHECK(kernel_basis(id).empty());

    MatQ zero = MatQ::Zero(2, 2);
    CHECK(kernel_basis(zero).size() == 2);

    MatQ m(2, 2);
    m << Rational(1), Rational(1), Rational(2), Rational(2);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0) * Rational(-1) == basis[0](1));
}

TEST_CASE("kernel vectors annihilate and count columns minus rank") {
    Rng rng(23);
    std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3), sparsity(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        MatQ m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = sparsity(rng) == 0 ? Rational(entry(rng)) : Rational(0);
        const auto basis = kernel_basis(m);
        for (const auto& v : basis) CHECK(MatQ(m * v) == MatQ(MatQ::Zero(rows, 1)));
        CHECK(static_cast<int>(basis.size()) == cols - test::bareiss_rank(m));
    }
}

TEST_CASE("characteristic polynomial and rational roots") {
    MatQ m(2, 2);
    m << Rational(2), Rational(0), Rational(0), Rational(3);
    const auto cp = char_poly(m);  // (t-2)(t-3) = 6 - 5t + t^2
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Rational(6));
    CHECK(cp[1] == Rational(-5));
    CHECK(cp[2] == Rational(1));
    const auto roots = rational_roots(cp);
    REQUIRE(roots.size() == 2);

    // Roots with denominators: (2t-1)(t+4).
    const auto r2 = rational_roots({Rational(-4), Rational(7), Rational(2)});
    REQUIRE(r2.size() == 2);
    bool found_half = false;
    for (const auto& [v, mult] : r2)
        if (v == Rational(1, 2)) found_half = true;
    CHECK(found_half);
}

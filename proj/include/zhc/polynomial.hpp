#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhc/linalg.hpp"
#include "zhc/rational.hpp"

namespace zhc {

/// Exponent vector of a commutative monomial in the Cartan coordinates.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial in the coordinates H_1..H_n of a fixed
/// Cartan basis, rational coefficients. Zero coefficients are never stored.
class TorusPolynomial {
  public:
    TorusPolynomial() : nvars_(0) {}
    explicit TorusPolynomial(int nvars) : nvars_(nvars) {}

    static TorusPolynomial constant(int nvars, const Rational& c);
    static TorusPolynomial variable(int nvars, int index);
    /// The linear polynomial <coeffs, x> + shift.
    static TorusPolynomial linear(const std::vector<Rational>& coeffs, const Rational& shift);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int degree() const;  // total degree; -1 for the zero polynomial

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    TorusPolynomial& operator+=(const TorusPolynomial& o);
    TorusPolynomial& operator-=(const TorusPolynomial& o);
    TorusPolynomial& operator*=(const Rational& c);
    friend TorusPolynomial operator+(TorusPolynomial a, const TorusPolynomial& b) { return a += b; }
    friend TorusPolynomial operator-(TorusPolynomial a, const TorusPolynomial& b) { return a -= b; }
    friend TorusPolynomial operator*(const TorusPolynomial& a, const TorusPolynomial& b);
    friend TorusPolynomial operator*(TorusPolynomial a, const Rational& c) { return a *= c; }
    friend TorusPolynomial operator*(const Rational& c, TorusPolynomial a) { return a *= c; }
    TorusPolynomial operator-() const;

    friend bool operator==(const TorusPolynomial& a, const TorusPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Substitute x_i -> sub[i] simultaneously.
    TorusPolynomial substitute(const std::vector<TorusPolynomial>& sub) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    void check_compatible(const TorusPolynomial& o) const;

    int nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Quotient p/q when q divides p exactly, std::nullopt otherwise.
/// Throws std::domain_error when q = 0.
std::optional<TorusPolynomial> poly_divide_exact(const TorusPolynomial& p, const TorusPolynomial& q);

std::ostream& operator<<(std::ostream& os, const TorusPolynomial& p);

}  // namespace zhc

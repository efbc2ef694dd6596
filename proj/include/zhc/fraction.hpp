#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zhc/polynomial.hpp"

namespace zhc {

/// One linear denominator factor <coroot, x> + shift, sign-canonicalized so
/// that the first nonzero coroot coordinate is positive.
struct LinearShiftFactor {
    std::vector<Rational> coroot;
    long shift = 0;

    /// Canonicalizes the sign; the returned int (+1/-1) is the scalar that the
    /// surrounding fraction must absorb.
    static std::pair<LinearShiftFactor, int> make(std::vector<Rational> coroot, long shift);

    TorusPolynomial poly(int nvars) const;

    friend bool operator==(const LinearShiftFactor& a, const LinearShiftFactor& b) {
        return a.shift == b.shift && a.coroot == b.coroot;
    }
    friend bool operator<(const LinearShiftFactor& a, const LinearShiftFactor& b) {
        if (a.coroot != b.coroot) return a.coroot < b.coroot;
        return a.shift < b.shift;
    }
};

/// Element of the localization of the polynomial algebra at the linear shift
/// factors: numerator / product of factors, kept normalized (no denominator
/// factor divides the numerator; denominator sorted; signs canonical).
class TorusFraction {
  public:
    TorusFraction() = default;
    explicit TorusFraction(TorusPolynomial numerator) : num_(std::move(numerator)) {}
    TorusFraction(TorusPolynomial numerator, std::vector<LinearShiftFactor> denominator);

    static TorusFraction constant(int nvars, const Rational& c) {
        return TorusFraction(TorusPolynomial::constant(nvars, c));
    }

    const TorusPolynomial& numerator() const { return num_; }
    const std::vector<LinearShiftFactor>& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    int nvars() const { return num_.nvars(); }

    TorusFraction& operator+=(const TorusFraction& o);
    TorusFraction& operator-=(const TorusFraction& o);
    friend TorusFraction operator+(TorusFraction a, const TorusFraction& b) { return a += b; }
    friend TorusFraction operator-(TorusFraction a, const TorusFraction& b) { return a -= b; }
    friend TorusFraction operator*(const TorusFraction& a, const TorusFraction& b);
    friend TorusFraction operator*(const Rational& c, const TorusFraction& a);
    TorusFraction operator-() const;

    friend bool operator==(const TorusFraction& a, const TorusFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::vector<std::string>& var_names = {}) const;

  private:
    void normalize();

    TorusPolynomial num_;
    std::vector<LinearShiftFactor> den_;  // sorted multiset
};

/// 1/f for f whose numerator is a nonzero constant times a product of linear
/// shift factors over the given candidate coroots. Throws std::domain_error
/// when the numerator does not factor that way.
TorusFraction invert_fraction(const TorusFraction& f, const std::vector<std::vector<Rational>>& candidate_coroots);

std::ostream& operator<<(std::ostream& os, const TorusFraction& f);

}  // namespace zhc

#include "zhc/fraction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhc {

std::pair<LinearShiftFactor, int> LinearShiftFactor::make(std::vector<Rational> coroot, long shift) {
    int lead = 0;
    for (const Rational& c : coroot) {
        if (!c.is_zero()) { lead = c.sign(); break; }
    }
    if (lead == 0) throw std::invalid_argument("LinearShiftFactor: zero coroot");
    if (lead < 0) {
        for (Rational& c : coroot) c = -c;
        shift = -shift;
    }
    return {LinearShiftFactor{std::move(coroot), shift}, lead < 0 ? -1 : 1};
}

TorusPolynomial LinearShiftFactor::poly(int nvars) const {
    if (static_cast<int>(coroot.size()) != nvars)
        throw std::invalid_argument("LinearShiftFactor: arity mismatch");
    return TorusPolynomial::linear(coroot, Rational(shift));
}

TorusFraction::TorusFraction(TorusPolynomial numerator, std::vector<LinearShiftFactor> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    Rational sign(1);
    for (auto& f : den_) {
        auto [canon, s] = LinearShiftFactor::make(f.coroot, f.shift);
        f = canon;
        if (s < 0) sign = -sign;
    }
    num_ *= sign;
    normalize();
}

void TorusFraction::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end());
    for (size_t i = 0; i < den_.size();) {
        auto q = poly_divide_exact(num_, den_[i].poly(num_.nvars()));
        if (q) {
            num_ = std::move(*q);
            den_.erase(den_.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
}

namespace {

// Difference multiset a \ b (per-factor multiplicities), assuming both sorted.
std::vector<LinearShiftFactor> multiset_diff(const std::vector<LinearShiftFactor>& a,
                                             const std::vector<LinearShiftFactor>& b) {
    std::vector<LinearShiftFactor> out;
    size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && b[j] < a[i]) { ++j; continue; }
        if (j < b.size() && a[i] == b[j]) { ++i; ++j; continue; }
        out.push_back(a[i]);
        ++i;
    }
    return out;
}

std::vector<LinearShiftFactor> multiset_union_max(const std::vector<LinearShiftFactor>& a,
                                                  const std::vector<LinearShiftFactor>& b) {
    std::vector<LinearShiftFactor> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i]) out.push_back(b[j++]);
        else { out.push_back(a[i]); ++i; ++j; }
    }
    return out;
}

TorusPolynomial product_poly(int nvars, const std::vector<LinearShiftFactor>& fs) {
    TorusPolynomial p = TorusPolynomial::constant(nvars, Rational(1));
    for (const auto& f : fs) p = p * f.poly(nvars);
    return p;
}

}  // namespace

TorusFraction& TorusFraction::operator+=(const TorusFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (num_.nvars() != o.num_.nvars())
        throw std::invalid_argument("TorusFraction: variable-count mismatch");
    const int nv = num_.nvars();
    const auto common = multiset_union_max(den_, o.den_);
    TorusPolynomial n = num_ * product_poly(nv, multiset_diff(common, den_));
    n += o.num_ * product_poly(nv, multiset_diff(common, o.den_));
    num_ = std::move(n);
    den_ = common;
    normalize();
    return *this;
}

TorusFraction& TorusFraction::operator-=(const TorusFraction& o) { return *this += -o; }

TorusFraction TorusFraction::operator-() const {
    TorusFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

TorusFraction operator*(const TorusFraction& a, const TorusFraction& b) {
    TorusFraction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    r.normalize();
    return r;
}

TorusFraction operator*(const Rational& c, const TorusFraction& a) {
    TorusFraction r = a;
    r.num_ *= c;
    if (c.is_zero()) r.den_.clear();
    return r;
}

TorusFraction invert_fraction(const TorusFraction& f, const std::vector<std::vector<Rational>>& candidate_coroots) {
    if (f.is_zero()) throw std::domain_error("invert_fraction: zero element");
    const int nv = f.nvars();

    // Factor the numerator into linear shift factors over candidate coroots.
    TorusPolynomial residue = f.numerator();
    std::vector<LinearShiftFactor> extracted;
    for (const auto& raw : candidate_coroots) {
        auto [canon, sign] = LinearShiftFactor::make(raw, 0);
        (void)sign;
        const std::vector<Rational>& v = canon.coroot;
        // Restrict to the line p0 + t*w with <v,w> = 1; roots locate candidate shifts.
        Rational vv(0);
        for (const Rational& c : v) vv += c * c;
        std::vector<Rational> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / vv;

        bool more = true;
        while (more && !residue.is_constant()) {
            more = false;
            for (int attempt = 0; attempt < 32 && !residue.is_constant(); ++attempt) {
                std::vector<Rational> p0(v.size(), Rational(0));
                Rational v_dot_p0(0);
                if (attempt > 0) {
                    Rational step(1);
                    for (size_t i = 0; i < v.size(); ++i) {
                        p0[i] = Rational(attempt) * step;
                        step *= Rational(7);
                        v_dot_p0 += v[i] * p0[i];
                    }
                }
                // Univariate restriction u(t) = residue(p0 + t w).
                std::vector<Rational> u;
                {
                    int d = residue.degree();
                    u.assign(static_cast<size_t>(d) + 1, Rational(0));
                    for (const auto& [e, c] : residue.terms()) {
                        // Expand prod_i (p0_i + t w_i)^{e_i} into u.
                        std::vector<Rational> term{c};
                        for (size_t i = 0; i < w.size(); ++i) {
                            for (int k = 0; k < e[i]; ++k) {
                                std::vector<Rational> next(term.size() + 1, Rational(0));
                                for (size_t m = 0; m < term.size(); ++m) {
                                    next[m] += term[m] * p0[i];
                                    next[m + 1] += term[m] * w[i];
                                }
                                term = std::move(next);
                            }
                        }
                        for (size_t m = 0; m < term.size(); ++m) u[m] += term[m];
                    }
                    while (!u.empty() && u.back().is_zero()) u.pop_back();
                }
                if (u.empty()) continue;  // degenerate line, move the offset

                bool extracted_here = false;
                for (const auto& [root, mult] : rational_roots(u)) {
                    (void)mult;
                    const Rational k_rat = -(root + v_dot_p0);
                    if (!k_rat.is_integer()) continue;
                    const long k = k_rat.to_long();
                    auto [factor, s] = LinearShiftFactor::make(v, k);
                    (void)s;
                    while (true) {
                        auto q = poly_divide_exact(residue, factor.poly(nv));
                        if (!q) break;
                        residue = std::move(*q);
                        extracted.push_back(factor);
                        extracted_here = true;
                    }
                }
                if (extracted_here) { more = true; break; }
                if (attempt > 0) break;  // non-degenerate line found, no roots for this coroot
            }
        }
    }
    if (!residue.is_constant())
        throw std::domain_error("invert_fraction: element is not a product of linear shift factors");
    const Rational c = residue.constant_term();

    // 1 / (c * prod extracted / prod den) = (prod den / c) / prod extracted.
    TorusPolynomial new_num = TorusPolynomial::constant(nv, Rational(1) / c);
    for (const auto& d : f.denominator()) new_num = new_num * d.poly(nv);
    return TorusFraction(std::move(new_num), std::move(extracted));
}

std::string TorusFraction::str(const std::vector<std::string>& var_names) const {
    if (den_.empty()) return num_.str(var_names);
    std::ostringstream os;
    os << "(" << num_.str(var_names) << ")/(";
    for (size_t i = 0; i < den_.size(); ++i) {
        if (i) os << "*";
        os << "(" << den_[i].poly(num_.nvars()).str(var_names) << ")";
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TorusFraction& f) { return os << f.str(); }

}  // namespace zhc

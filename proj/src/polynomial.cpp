#include "zhc/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zhc {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

TorusPolynomial TorusPolynomial::constant(int nvars, const Rational& c) {
    TorusPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

TorusPolynomial TorusPolynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("TorusPolynomial::variable: index out of range");
    TorusPolynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

TorusPolynomial TorusPolynomial::linear(const std::vector<Rational>& coeffs, const Rational& shift) {
    TorusPolynomial p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    p.add_term(Exponents(coeffs.size(), 0), shift);
    return p;
}

bool TorusPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational TorusPolynomial::constant_term() const { return coeff(Exponents(nvars_, 0)); }

int TorusPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rational TorusPolynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TorusPolynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("TorusPolynomial: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TorusPolynomial::check_compatible(const TorusPolynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("TorusPolynomial: variable-count mismatch (" + std::to_string(nvars_) + " vs " +
                                    std::to_string(o.nvars_) + ")");
}

TorusPolynomial& TorusPolynomial::operator+=(const TorusPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TorusPolynomial& TorusPolynomial::operator-=(const TorusPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TorusPolynomial& TorusPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

TorusPolynomial operator*(const TorusPolynomial& a, const TorusPolynomial& b) {
    a.check_compatible(b);
    TorusPolynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

TorusPolynomial TorusPolynomial::operator-() const {
    TorusPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Rational TorusPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("TorusPolynomial::evaluate: arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

TorusPolynomial TorusPolynomial::substitute(const std::vector<TorusPolynomial>& sub) const {
    if (static_cast<int>(sub.size()) != nvars_) throw std::invalid_argument("TorusPolynomial::substitute: arity mismatch");
    const int out_vars = sub.empty() ? 0 : sub[0].nvars();
    TorusPolynomial acc(out_vars);
    for (const auto& [e, c] : terms_) {
        TorusPolynomial t = TorusPolynomial::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * sub[i];
        acc += t;
    }
    return acc;
}

std::optional<TorusPolynomial> poly_divide_exact(const TorusPolynomial& p, const TorusPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("poly_divide_exact: division by the zero polynomial");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("poly_divide_exact: variable-count mismatch");

    // Single-divisor division w.r.t. lex order: the remainder is zero iff q | p.
    TorusPolynomial rem = p;
    TorusPolynomial quot(p.nvars());
    const auto& q_lead = *q.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& r_lead = *rem.terms().rbegin();
        Exponents diff(r_lead.first.size());
        bool divisible = true;
        for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] = r_lead.first[i] - q_lead.first[i];
            if (diff[i] < 0) { divisible = false; break; }
        }
        if (!divisible) return std::nullopt;
        TorusPolynomial t(p.nvars());
        t.add_term(diff, r_lead.second / q_lead.second);
        rem -= t * q;
        quot += t;
    }
    return quot;
}

std::string TorusPolynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != Rational(1) || total_degree(e) == 0) {
            os << a.str();
            printed_coeff = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) os << "*";
            if (i < static_cast<int>(var_names.size()))
                os << var_names[i];
            else
                os << "H" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TorusPolynomial& p) { return os << p.str(); }

}  // namespace zhc

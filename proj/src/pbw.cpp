#include "zhc/pbw.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zhc {

void PbwElement::add(const PbwMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void PbwElement::add_scaled(const PbwElement& o, const Rational& c) {
    for (const auto& [m, v] : o.terms) add(m, v * c);
}

int pbw_basis_at(const ReductiveLieAlgebra& alg, int position) {
    const auto& neg = alg.negative_part();
    const auto& car = alg.cartan_part();
    const auto& pos = alg.positive_part();
    if (position < static_cast<int>(neg.size())) return neg[position];
    position -= static_cast<int>(neg.size());
    if (position < static_cast<int>(car.size())) return car[position];
    position -= static_cast<int>(car.size());
    return pos.at(position);
}

int pbw_position(const ReductiveLieAlgebra& alg, int basis_index) {
    const auto& neg = alg.negative_part();
    const auto& car = alg.cartan_part();
    const auto& pos = alg.positive_part();
    for (size_t i = 0; i < neg.size(); ++i)
        if (neg[i] == basis_index) return static_cast<int>(i);
    for (size_t i = 0; i < car.size(); ++i)
        if (car[i] == basis_index) return static_cast<int>(neg.size() + i);
    for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i] == basis_index) return static_cast<int>(neg.size() + car.size() + i);
    throw std::invalid_argument("pbw_position: unknown basis index");
}

PbwElement pbw_one(const ReductiveLieAlgebra& alg) {
    PbwElement u;
    u.add(PbwMonomial(alg.dim(), 0), Rational(1));
    return u;
}

PbwElement pbw_generator(const ReductiveLieAlgebra& alg, int basis_index) {
    PbwElement u;
    PbwMonomial m(alg.dim(), 0);
    m[pbw_position(alg, basis_index)] = 1;
    u.add(m, Rational(1));
    return u;
}

PbwMonomial pbw_monomial_of_word(const ReductiveLieAlgebra& alg, const std::vector<int>& sorted_word) {
    PbwMonomial m(alg.dim(), 0);
    for (int b : sorted_word) ++m[pbw_position(alg, b)];
    return m;
}

std::vector<int> pbw_word_of_monomial(const ReductiveLieAlgebra& alg, const PbwMonomial& m) {
    std::vector<int> w;
    for (int p = 0; p < static_cast<int>(m.size()); ++p)
        for (int k = 0; k < m[p]; ++k) w.push_back(pbw_basis_at(alg, p));
    return w;
}

int pbw_degree(const PbwMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

int pbw_degree(const PbwElement& u) {
    int d = u.is_zero() ? -1 : 0;
    for (const auto& [m, c] : u.terms) d = std::max(d, pbw_degree(m));
    return d;
}

PbwElement pbw_normal_order_word(const ReductiveLieAlgebra& alg, const std::vector<int>& word, const Rational& coeff) {
    PbwElement result;
    if (coeff.is_zero()) return result;

    std::vector<std::pair<std::vector<int>, Rational>> work{{word, coeff}};
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();

        int t = -1;
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (pbw_position(alg, w[k]) > pbw_position(alg, w[k + 1])) { t = static_cast<int>(k); break; }
        }
        if (t < 0) {
            result.add(pbw_monomial_of_word(alg, w), c);
            continue;
        }

        std::vector<int> swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        work.emplace_back(std::move(swapped), c);

        for (const auto& [k, sc] : alg.bracket(w[t], w[t + 1])) {
            std::vector<int> contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(), w.begin() + t);
            contracted.push_back(k);
            contracted.insert(contracted.end(), w.begin() + t + 2, w.end());
            work.emplace_back(std::move(contracted), c * sc);
        }
    }
    return result;
}

PbwElement pbw_multiply(const ReductiveLieAlgebra& alg, const PbwElement& a, const PbwElement& b) {
    PbwElement result;
    for (const auto& [ma, ca] : a.terms) {
        const auto wa = pbw_word_of_monomial(alg, ma);
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> w = wa;
            const auto wb = pbw_word_of_monomial(alg, mb);
            w.insert(w.end(), wb.begin(), wb.end());
            result.add_scaled(pbw_normal_order_word(alg, w, ca * cb), Rational(1));
        }
    }
    return result;
}

PbwElement ad_action(const ReductiveLieAlgebra& alg, int basis_index, const PbwElement& u) {
    PbwElement result;
    for (const auto& [m, c] : u.terms) {
        auto w = pbw_word_of_monomial(alg, m);
        std::vector<int> left{basis_index};
        left.insert(left.end(), w.begin(), w.end());
        result.add_scaled(pbw_normal_order_word(alg, left, c), Rational(1));
        w.push_back(basis_index);
        result.add_scaled(pbw_normal_order_word(alg, w, c), Rational(-1));
    }
    return result;
}

namespace {

// exp(sign * ad X) u; finite because ad X is locally nilpotent on U(g).
PbwElement exp_ad(const ReductiveLieAlgebra& alg, int basis_index, int sign, const PbwElement& u) {
    PbwElement acc = u;
    PbwElement term = u;
    for (int k = 1; ; ++k) {
        PbwElement next;
        next.add_scaled(ad_action(alg, basis_index, term), Rational(sign, k));
        term = std::move(next);
        if (term.is_zero()) break;
        acc.add_scaled(term, Rational(1));
        if (k > 256) throw std::logic_error("exp_ad: series did not terminate");
    }
    return acc;
}

}  // namespace

PbwElement s_hat_adjoint(const ReductiveLieAlgebra& alg, int i, const PbwElement& u) {
    const auto& t = alg.triple(i);
    PbwElement out = exp_ad(alg, t.e, +1, u);
    out = exp_ad(alg, t.f, -1, out);
    return exp_ad(alg, t.e, +1, out);
}

std::vector<Rational> monomial_weight(const ReductiveLieAlgebra& alg, const PbwMonomial& m) {
    std::vector<Rational> weight(alg.cartan_dim(), Rational(0));
    for (int p = 0; p < static_cast<int>(m.size()); ++p) {
        if (m[p] == 0) continue;
        const auto w = alg.weight_of_basis(pbw_basis_at(alg, p));
        for (int c = 0; c < alg.cartan_dim(); ++c) weight[c] += Rational(m[p]) * w[c];
    }
    return weight;
}

std::string pbw_str(const ReductiveLieAlgebra& alg, const PbwElement& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int p = 0; p < static_cast<int>(m.size()); ++p) {
            if (m[p] == 0) continue;
            os << "*X" << pbw_basis_at(alg, p);
            if (m[p] > 1) os << "^" << m[p];
        }
    }
    return os.str();
}

}  // namespace zhc

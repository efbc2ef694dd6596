#include "zhc/bimodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhc {

void BimoduleElement::add(const PbwMonomial& m, int vec, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, vec);
    auto [it, inserted] = terms.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void BimoduleElement::add_scaled(const BimoduleElement& o, const Rational& c) {
    for (const auto& [key, v] : o.terms) add(key.first, key.second, v * c);
}

int BimoduleElement::degree() const {
    int d = -1;
    for (const auto& [key, v] : terms) d = std::max(d, pbw_degree(key.first));
    return d;
}

BimoduleElement tensor(const PbwElement& u, int vec) {
    BimoduleElement m;
    for (const auto& [mon, c] : u.terms) m.add(mon, vec, c);
    return m;
}

BimoduleElement left_act(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int basis_index,
                         const BimoduleElement& m) {
    (void)mod;
    BimoduleElement out;
    for (const auto& [key, c] : m.terms) {
        std::vector<int> word{basis_index};
        const auto tail = pbw_word_of_monomial(alg, key.first);
        word.insert(word.end(), tail.begin(), tail.end());
        const PbwElement prod = pbw_normal_order_word(alg, word, c);
        for (const auto& [mon, v] : prod.terms) out.add(mon, key.second, v);
    }
    return out;
}

BimoduleElement right_act(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m,
                          int basis_index) {
    BimoduleElement out;
    const MatQ& act = mod.action(basis_index);
    for (const auto& [key, c] : m.terms) {
        auto word = pbw_word_of_monomial(alg, key.first);
        word.push_back(basis_index);
        const PbwElement prod = pbw_normal_order_word(alg, word, c);
        for (const auto& [mon, v] : prod.terms) out.add(mon, key.second, v);
        // - u (x) X v
        for (int row = 0; row < mod.dimension(); ++row) {
            const Rational a = act(row, key.second);
            if (!a.is_zero()) out.add(key.first, row, -c * a);
        }
    }
    return out;
}

BimoduleElement ad_diag(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int basis_index,
                        const BimoduleElement& m) {
    BimoduleElement out = left_act(alg, mod, basis_index, m);
    out.add_scaled(right_act(alg, mod, m, basis_index), Rational(-1));
    return out;
}

bool is_g_invariant(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m) {
    for (int i = 0; i < alg.rank(); ++i) {
        if (!ad_diag(alg, mod, alg.triple(i).e, m).is_zero()) return false;
        if (!ad_diag(alg, mod, alg.triple(i).f, m).is_zero()) return false;
    }
    for (int c : alg.cartan_part())
        if (!ad_diag(alg, mod, c, m).is_zero()) return false;
    return true;
}

bool ZElement::is_polynomial() const {
    return std::all_of(comps.begin(), comps.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

void ZElement::add(int weight_index, const TorusFraction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = comps.emplace(weight_index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) comps.erase(it);
    }
}

void ZElement::add_scaled(const ZElement& o, const Rational& c) {
    for (const auto& [k, v] : o.comps) add(k, c * v);
}

ZElement operator*(const TorusFraction& c, const ZElement& z) {
    ZElement out;
    for (const auto& [k, v] : z.comps) out.add(k, c * v);
    return out;
}

ZElement z_from_weight_coords(int nvars, const VecQ& coords) {
    ZElement z;
    for (int k = 0; k < coords.size(); ++k)
        if (!coords(k).is_zero()) z.add(k, TorusFraction::constant(nvars, coords(k)));
    return z;
}

bool z_weight_zero(const FiniteModule& mod, const ZElement& z) {
    for (const auto& [k, v] : z.comps) {
        for (const Rational& w : mod.weight(k))
            if (!w.is_zero()) return false;
    }
    return true;
}

ZElement z_apply_weight_matrix(const MatQ& m, const ZElement& z) {
    ZElement out;
    for (const auto& [a, coeff] : z.comps) {
        for (int b = 0; b < m.rows(); ++b) {
            const Rational& entry = m(b, a);
            if (!entry.is_zero()) out.add(b, entry * coeff);
        }
    }
    return out;
}

ZElement z_right_multiply_shift_factor(const FiniteModule& mod, const ZElement& z, const std::vector<Rational>& coroot,
                                       long k, int sign) {
    const int nc = mod.algebra().cartan_dim();
    ZElement out;
    for (const auto& [b, coeff] : z.comps) {
        const Rational l = -pair_functional(mod.weight(b), coroot);
        if (!l.is_integer()) throw std::logic_error("z_right_multiply_shift_factor: non-integer weight pairing");
        const long shifted = k + l.to_long();
        if (sign > 0) {
            out.add(b, coeff * TorusFraction(TorusPolynomial::linear(coroot, Rational(shifted))));
        } else {
            auto [factor, s] = LinearShiftFactor::make(coroot, shifted);
            TorusFraction inv(TorusPolynomial::constant(nc, Rational(s)), {factor});
            out.add(b, coeff * inv);
        }
    }
    return out;
}

int z_degree(const ZElement& z) {
    int d = -1;
    for (const auto& [k, v] : z.comps) d = std::max(d, v.numerator().degree());
    return d;
}

ZElement hc_project(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m) {
    const int nc = alg.cartan_dim();
    const int nneg = static_cast<int>(alg.negative_part().size());
    ZElement out;
    for (const auto& [key, c] : m.terms) {
        const auto& [mon, vec] = key;
        bool killed = false;
        for (int p = 0; p < nneg; ++p)
            if (mon[p] != 0) { killed = true; break; }
        if (killed) continue;

        Exponents cartan_exp(nc);
        for (int cidx = 0; cidx < nc; ++cidx) cartan_exp[cidx] = mon[nneg + cidx];

        // Rightmost positive generator acts on v first.
        VecQ v = VecQ::Zero(mod.dimension());
        v(vec) = Rational(1);
        for (int p = static_cast<int>(mon.size()) - 1; p >= nneg + nc; --p) {
            const MatQ& act = mod.action(pbw_basis_at(alg, p));
            for (int rep = 0; rep < mon[p]; ++rep) v = act * v;
        }

        TorusPolynomial poly(nc);
        poly.add_term(cartan_exp, c);
        const VecQ wcoords = mod.weight_basis_inverse() * v;
        for (int b = 0; b < mod.dimension(); ++b)
            if (!wcoords(b).is_zero()) out.add(b, TorusFraction(poly * wcoords(b)));
    }
    return out;
}

BimoduleElement z_to_bimodule(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z) {
    if (!z.is_polynomial()) throw std::invalid_argument("z_to_bimodule: element has denominators");
    const int nneg = static_cast<int>(alg.negative_part().size());
    const int nc = alg.cartan_dim();
    BimoduleElement out;
    for (const auto& [b, frac] : z.comps) {
        const VecQ std_coords = mod.weight_basis().col(b);
        for (const auto& [e, c] : frac.numerator().terms()) {
            PbwMonomial mon(alg.dim(), 0);
            for (int cidx = 0; cidx < nc; ++cidx) mon[nneg + cidx] = e[cidx];
            for (int row = 0; row < mod.dimension(); ++row)
                if (!std_coords(row).is_zero()) out.add(mon, row, c * std_coords(row));
        }
    }
    return out;
}

std::string z_str(const FiniteModule& mod, const ZElement& z) {
    (void)mod;
    if (z.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : z.comps) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ") (x) v" << k;
    }
    return os.str();
}

}  // namespace zhc

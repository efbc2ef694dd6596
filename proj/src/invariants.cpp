#include "zhc/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhc {

void SymElement::add(const Exponents& e, int vec, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::make_pair(e, vec), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Exponents cur(nvars, 0);
    // Recursive enumeration, lexicographic in the exponent vector.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Exponents> monomials_up_to(int nvars, int degree) {
    std::vector<Exponents> out;
    for (int d = 0; d <= degree; ++d) {
        auto block = monomials_of_degree(nvars, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

namespace {

bool weight_is_zero(const std::vector<Rational>& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<Rational> add_weights(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Re-express a BimoduleElement with the V side in weight coordinates.
std::map<std::pair<PbwMonomial, int>, Rational> to_weight_coords(const FiniteModule& mod, const BimoduleElement& m) {
    std::map<std::pair<PbwMonomial, int>, Rational> out;
    const MatQ& binv = mod.weight_basis_inverse();
    for (const auto& [key, c] : m.terms) {
        for (int b = 0; b < mod.dimension(); ++b) {
            const Rational v = binv(b, key.second) * c;
            if (v.is_zero()) continue;
            auto k = std::make_pair(key.first, b);
            auto [it, inserted] = out.emplace(std::move(k), v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<BimoduleElement> invariants_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    if (degree < 0) throw std::invalid_argument("invariants_upto: negative degree");
    using Key = std::pair<PbwMonomial, int>;

    // Columns: weight-zero pairs (PBW monomial, weight-basis index).
    std::vector<Key> columns;
    std::map<Key, int> column_of;
    for (const auto& mon : monomials_up_to(alg.dim(), degree)) {
        const auto mw = monomial_weight(alg, mon);
        for (int b = 0; b < mod.dimension(); ++b) {
            if (!weight_is_zero(add_weights(mw, mod.weight(b)))) continue;
            column_of.emplace(Key{mon, b}, static_cast<int>(columns.size()));
            columns.push_back(Key{mon, b});
        }
    }
    if (columns.empty()) return {};

    // Rows: image pairs of ad E_i / ad F_i per generator, discovered lazily.
    std::vector<int> generators;
    for (int i = 0; i < alg.rank(); ++i) {
        generators.push_back(alg.triple(i).e);
        generators.push_back(alg.triple(i).f);
    }

    std::vector<std::map<int, Rational>> rows;  // sparse rows over columns
    std::map<std::pair<int, Key>, int> row_of;  // (generator slot, image pair) -> row
    for (size_t g = 0; g < generators.size(); ++g) {
        const int x = generators[g];
        for (size_t col = 0; col < columns.size(); ++col) {
            // Basis element: monomial (x) weight vector expanded in std coordinates.
            BimoduleElement elem;
            const VecQ std_coords = mod.weight_basis().col(columns[col].second);
            for (int row = 0; row < mod.dimension(); ++row)
                if (!std_coords(row).is_zero()) elem.add(columns[col].first, row, std_coords(row));

            const auto image = to_weight_coords(mod, ad_diag(alg, mod, x, elem));
            for (const auto& [key, c] : image) {
                auto rk = std::make_pair(static_cast<int>(g), key);
                auto it = row_of.find(rk);
                if (it == row_of.end()) {
                    it = row_of.emplace(rk, static_cast<int>(rows.size())).first;
                    rows.emplace_back();
                }
                rows[it->second][static_cast<int>(col)] = c;
            }
        }
    }

    MatQ system = MatQ::Zero(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) system(static_cast<int>(r), c) = v;

    std::vector<BimoduleElement> basis;
    for (const VecQ& k : kernel_basis(system)) {
        BimoduleElement elem;
        for (size_t col = 0; col < columns.size(); ++col) {
            if (k(static_cast<int>(col)).is_zero()) continue;
            const VecQ std_coords = mod.weight_basis().col(columns[col].second);
            for (int row = 0; row < mod.dimension(); ++row)
                if (!std_coords(row).is_zero()) elem.add(columns[col].first, row, k(static_cast<int>(col)) * std_coords(row));
        }
        basis.push_back(std::move(elem));
    }
    return basis;
}

ZElement gamma(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m) {
    if (!is_g_invariant(alg, mod, m)) throw std::invalid_argument("gamma: element is not g-invariant");
    ZElement image = hc_project(alg, mod, m);
    if (!in_Q_fixedpoint(alg, mod, image) || !in_Q_prop4(alg, mod, image))
        throw std::logic_error("gamma: image of an invariant fails a Q-membership test");
    return image;
}

std::vector<ZElement> q_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    if (degree < 0) throw std::invalid_argument("q_upto: negative degree");
    const int nc = alg.cartan_dim();
    const auto& zero_idx = mod.zero_weight_indices();
    const int nz = static_cast<int>(zero_idx.size());
    if (nz == 0) return {};

    const auto mons = monomials_up_to(nc, degree);
    const int nm = static_cast<int>(mons.size());
    std::map<Exponents, int> mon_of;
    for (int m = 0; m < nm; ++m) mon_of.emplace(mons[m], m);

    // Unknowns x_{p,m}: coefficient of monomial m in the p-th zero-weight slot.
    auto column = [&](int p, int m) { return p * nm + m; };
    const int ncols = nz * nm;

    std::vector<std::map<int, Rational>> rows;
    for (int i = 0; i < alg.rank(); ++i) {
        for (const auto& zi : mod.zero_isotypics(i)) {
            const TorusPolynomial psi = alg.psi(i, zi.j);
            const TorusPolynomial psi_ref = alg.shifted_action(WeylWord{i}, psi);

            // T(H^m) = (s_i o H^m) Psi - H^m (s_i o Psi), per monomial.
            std::vector<TorusPolynomial> t_of_mon;
            t_of_mon.reserve(mons.size());
            for (const auto& m : mons) {
                TorusPolynomial hm(nc);
                hm.add_term(m, Rational(1));
                t_of_mon.push_back(alg.shifted_action(WeylWord{i}, hm) * psi - hm * psi_ref);
            }

            const MatQ coords_of_proj = zi.coords * zi.projector0;
            for (int b = 0; b < coords_of_proj.rows(); ++b) {
                // theta_b = sum_p coords_of_proj(b,p) * Phi_p; T(theta_b) = 0.
                std::map<Exponents, std::map<int, Rational>> eq;  // result monomial -> row
                for (int p = 0; p < nz; ++p) {
                    const Rational& w = coords_of_proj(b, p);
                    if (w.is_zero()) continue;
                    for (int m = 0; m < nm; ++m)
                        for (const auto& [e, c] : t_of_mon[m].terms()) eq[e][column(p, m)] += w * c;
                }
                for (auto& [e, row] : eq) {
                    for (auto it = row.begin(); it != row.end();) {
                        if (it->second.is_zero()) it = row.erase(it);
                        else ++it;
                    }
                    if (!row.empty()) rows.push_back(std::move(row));
                }
            }
        }
    }

    MatQ system = MatQ::Zero(static_cast<int>(rows.size()), ncols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) system(static_cast<int>(r), c) = v;

    std::vector<ZElement> basis;
    for (const VecQ& k : kernel_basis(system)) {
        ZElement z;
        for (int p = 0; p < nz; ++p) {
            TorusPolynomial phi(nc);
            for (int m = 0; m < nm; ++m)
                if (!k(column(p, m)).is_zero()) phi.add_term(mons[m], k(column(p, m)));
            if (!phi.is_zero()) z.add(zero_idx[p], TorusFraction(std::move(phi)));
        }
        basis.push_back(std::move(z));
    }
    return basis;
}

std::vector<SymElement> sym_invariants_homogeneous(const ReductiveLieAlgebra& alg, const FiniteModule& mod,
                                                   int degree) {
    const int n = alg.dim();
    using Key = std::pair<Exponents, int>;

    std::vector<Key> columns;
    std::map<Key, int> column_of;
    for (const auto& mon : monomials_of_degree(n, degree)) {
        std::vector<Rational> mw(alg.cartan_dim(), Rational(0));
        for (int a = 0; a < n; ++a) {
            if (mon[a] == 0) continue;
            const auto w = alg.weight_of_basis(a);
            for (int c = 0; c < alg.cartan_dim(); ++c) mw[c] += Rational(mon[a]) * w[c];
        }
        for (int b = 0; b < mod.dimension(); ++b) {
            if (!weight_is_zero(add_weights(mw, mod.weight(b)))) continue;
            column_of.emplace(Key{mon, b}, static_cast<int>(columns.size()));
            columns.push_back(Key{mon, b});
        }
    }
    if (columns.empty()) return {};

    std::vector<int> generators;
    for (int i = 0; i < alg.rank(); ++i) {
        generators.push_back(alg.triple(i).e);
        generators.push_back(alg.triple(i).f);
    }

    std::vector<std::map<int, Rational>> rows;
    std::map<std::pair<int, Key>, int> row_of;
    auto emit = [&](int g, const Key& key, int col, const Rational& c) {
        if (c.is_zero()) return;
        auto rk = std::make_pair(g, key);
        auto it = row_of.find(rk);
        if (it == row_of.end()) {
            it = row_of.emplace(rk, static_cast<int>(rows.size())).first;
            rows.emplace_back();
        }
        auto& row = rows[it->second];
        auto [rit, inserted] = row.emplace(col, c);
        if (!inserted) {
            rit->second += c;
            if (rit->second.is_zero()) row.erase(rit);
        }
    };

    for (size_t g = 0; g < generators.size(); ++g) {
        const int x = generators[g];
        const MatQ act_w = mod.weight_basis_inverse() * mod.action(x) * mod.weight_basis();
        for (size_t col = 0; col < columns.size(); ++col) {
            const auto& [mon, b] = columns[col];
            // Derivation on the polynomial part: replace one factor X_a by [X, X_a].
            for (int a = 0; a < n; ++a) {
                if (mon[a] == 0) continue;
                for (const auto& [k, c] : alg.bracket(x, a)) {
                    Exponents e = mon;
                    --e[a];
                    ++e[k];
                    emit(static_cast<int>(g), Key{e, b}, static_cast<int>(col), Rational(mon[a]) * c);
                }
            }
            // Action on the V side.
            for (int b2 = 0; b2 < mod.dimension(); ++b2)
                emit(static_cast<int>(g), Key{mon, b2}, static_cast<int>(col), act_w(b2, b));
        }
    }

    MatQ system = MatQ::Zero(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) system(static_cast<int>(r), c) = v;

    std::vector<SymElement> basis;
    for (const VecQ& k : kernel_basis(system)) {
        SymElement f;
        for (size_t col = 0; col < columns.size(); ++col)
            if (!k(static_cast<int>(col)).is_zero()) f.add(columns[col].first, columns[col].second, k(static_cast<int>(col)));
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<SymElement> sym_invariants_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    std::vector<SymElement> out;
    for (int d = 0; d <= degree; ++d) {
        auto block = sym_invariants_homogeneous(alg, mod, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

GradedZ restrict_to_t(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const SymElement& f) {
    (void)mod;
    const int nc = alg.cartan_dim();
    const auto& cartan = alg.cartan_part();
    GradedZ out;
    for (const auto& [key, c] : f.terms) {
        const auto& [mon, b] = key;
        Exponents ce(nc, 0);
        bool keep = true;
        for (int a = 0; a < static_cast<int>(mon.size()) && keep; ++a) {
            if (mon[a] == 0) continue;
            auto it = std::find(cartan.begin(), cartan.end(), a);
            if (it == cartan.end()) keep = false;
            else ce[it - cartan.begin()] = mon[a];
        }
        if (!keep) continue;
        auto [mit, inserted] = out.emplace(b, TorusPolynomial(nc));
        (void)inserted;
        mit->second.add_term(ce, c);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

GradedZ graded_reflect(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const GradedZ& f) {
    GradedZ out;
    const MatQ& s = mod.s_hat_weight(i);
    for (const auto& [a, poly] : f) {
        const TorusPolynomial moved = alg.plain_weyl_action(WeylWord{i}, poly);
        for (int b = 0; b < s.rows(); ++b) {
            if (s(b, a).is_zero()) continue;
            auto [it, inserted] = out.emplace(b, TorusPolynomial(alg.cartan_dim()));
            (void)inserted;
            it->second += s(b, a) * moved;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

bool satisfies_chevalley_criterion(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const GradedZ& f,
                                   const std::vector<int>& simple_indices) {
    // Support must be in V^0.
    const auto& zero_idx = mod.zero_weight_indices();
    for (const auto& [a, poly] : f)
        if (std::find(zero_idx.begin(), zero_idx.end(), a) == zero_idx.end()) return false;

    for (int i = 0; i < alg.rank(); ++i)
        if (!(graded_reflect(alg, mod, i, f) == f)) return false;

    const int nc = alg.cartan_dim();
    const int nz = static_cast<int>(zero_idx.size());
    std::vector<TorusPolynomial> phi(nz, TorusPolynomial(nc));
    for (const auto& [a, poly] : f) {
        for (int p = 0; p < nz; ++p)
            if (zero_idx[p] == a) { phi[p] = poly; break; }
    }
    for (int i : simple_indices) {
        for (const auto& zi : mod.zero_isotypics(i)) {
            if (zi.j == 0) continue;
            TorusPolynomial hij = TorusPolynomial::constant(nc, Rational(1));
            for (int rep = 0; rep < zi.j; ++rep)
                hij = hij * TorusPolynomial::variable(nc, alg.simple_coroot_position(i));
            const MatQ coords_of_proj = zi.coords * zi.projector0;
            for (int b = 0; b < coords_of_proj.rows(); ++b) {
                TorusPolynomial theta(nc);
                for (int p = 0; p < nz; ++p)
                    if (!coords_of_proj(b, p).is_zero()) theta += coords_of_proj(b, p) * phi[p];
                if (theta.is_zero()) continue;
                if (!poly_divide_exact(theta, hij)) return false;
            }
        }
    }
    return true;
}

namespace {

// Linear solve for W-invariance [+ divisibility] over homogeneous degree-d
// coefficients on S(t) (x) V^0.
std::vector<GradedZ> criterion_kernel(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree,
                                      const std::vector<int>& divis_indices, bool with_divisibility) {
    const int nc = alg.cartan_dim();
    const auto& zero_idx = mod.zero_weight_indices();
    const int nz = static_cast<int>(zero_idx.size());
    if (nz == 0) return {};

    const auto mons = monomials_of_degree(nc, degree);
    const int nm = static_cast<int>(mons.size());
    std::map<Exponents, int> mon_of;
    for (int m = 0; m < nm; ++m) mon_of.emplace(mons[m], m);
    auto column = [&](int p, int m) { return p * nm + m; };

    std::vector<std::map<int, Rational>> rows;
    auto add_entry = [](std::map<int, Rational>& row, int col, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = row.emplace(col, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
        }
    };

    // W-invariance: s_i(F) - F = 0, rows indexed by (target slot, target monomial).
    for (int i = 0; i < alg.rank(); ++i) {
        const MatQ& s = mod.s_hat_weight(i);
        std::vector<TorusPolynomial> moved;
        moved.reserve(mons.size());
        for (const auto& m : mons) {
            TorusPolynomial hm(nc);
            hm.add_term(m, Rational(1));
            moved.push_back(alg.plain_weyl_action(WeylWord{i}, hm));
        }
        std::map<std::pair<int, int>, std::map<int, Rational>> eq;  // (q, m') -> row
        for (int p = 0; p < nz; ++p) {
            for (int q = 0; q < nz; ++q) {
                const Rational& entry = s(zero_idx[q], zero_idx[p]);
                if (entry.is_zero()) continue;
                for (int m = 0; m < nm; ++m)
                    for (const auto& [e, c] : moved[m].terms()) add_entry(eq[{q, mon_of.at(e)}], column(p, m), entry * c);
            }
        }
        for (int p = 0; p < nz; ++p)
            for (int m = 0; m < nm; ++m) add_entry(eq[{p, m}], column(p, m), Rational(-1));
        for (auto& [key, row] : eq)
            if (!row.empty()) rows.push_back(std::move(row));
    }

    // Divisibility of the V^0 cap V_ij component by H_i^j: since H_i is the
    // coordinate variable at the coroot position, this kills every coefficient
    // of a monomial with exponent < j there.
    if (with_divisibility) {
        for (int i : divis_indices) {
            const int pos = alg.simple_coroot_position(i);
            for (const auto& zi : mod.zero_isotypics(i)) {
                if (zi.j == 0) continue;
                const MatQ coords_of_proj = zi.coords * zi.projector0;
                for (int b = 0; b < coords_of_proj.rows(); ++b) {
                    for (int m = 0; m < nm; ++m) {
                        if (mons[m][pos] >= zi.j) continue;
                        std::map<int, Rational> row;
                        for (int p = 0; p < nz; ++p) add_entry(row, column(p, m), coords_of_proj(b, p));
                        if (!row.empty()) rows.push_back(std::move(row));
                    }
                }
            }
        }
    }

    MatQ system = MatQ::Zero(static_cast<int>(rows.size()), nz * nm);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) system(static_cast<int>(r), c) = v;

    std::vector<GradedZ> basis;
    for (const VecQ& k : kernel_basis(system)) {
        GradedZ f;
        for (int p = 0; p < nz; ++p) {
            TorusPolynomial phi(nc);
            for (int m = 0; m < nm; ++m)
                if (!k(column(p, m)).is_zero()) phi.add_term(mons[m], k(column(p, m)));
            if (!phi.is_zero()) f.emplace(zero_idx[p], std::move(phi));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

}  // namespace

std::vector<GradedZ> chevalley_criterion_space(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree,
                                               const std::vector<int>& simple_indices) {
    return criterion_kernel(alg, mod, degree, simple_indices, true);
}

std::vector<GradedZ> w_invariants_homogeneous(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    return criterion_kernel(alg, mod, degree, {}, false);
}

bool broer_condition(const ReductiveLieAlgebra& alg, const FiniteModule& mod) {
    for (int a = 0; a < alg.dim(); ++a) {
        if (alg.is_cartan_index(a)) continue;
        auto doubled = alg.root_of(a);
        for (Rational& x : doubled) x *= Rational(2);
        for (int b = 0; b < mod.dimension(); ++b)
            if (mod.weight(b) == doubled) return false;
    }
    return true;
}

namespace {

MatQ graded_coeff_matrix(const std::vector<GradedZ>& elems, const GradedZ* extra) {
    // Collect all (slot, monomial) coordinates present.
    std::map<std::pair<int, Exponents>, int> coord_of;
    auto scan = [&](const GradedZ& f) {
        for (const auto& [a, poly] : f)
            for (const auto& [e, c] : poly.terms()) coord_of.emplace(std::make_pair(a, e), 0);
    };
    for (const auto& f : elems) scan(f);
    if (extra) scan(*extra);
    int next = 0;
    for (auto& [k, v] : coord_of) v = next++;

    MatQ m = MatQ::Zero(next, static_cast<int>(elems.size()) + (extra ? 1 : 0));
    auto fill = [&](const GradedZ& f, int col) {
        for (const auto& [a, poly] : f)
            for (const auto& [e, c] : poly.terms()) m(coord_of.at({a, e}), col) = c;
    };
    for (size_t i = 0; i < elems.size(); ++i) fill(elems[i], static_cast<int>(i));
    if (extra) fill(*extra, static_cast<int>(elems.size()));
    return m;
}

}  // namespace

int graded_span_rank(const std::vector<GradedZ>& elems) {
    if (elems.empty()) return 0;
    return matrix_rank(graded_coeff_matrix(elems, nullptr));
}

bool graded_in_span(const std::vector<GradedZ>& span, const GradedZ& f) {
    const MatQ with = graded_coeff_matrix(span, &f);
    const MatQ without = with.leftCols(with.cols() - 1);
    return matrix_rank(with) == matrix_rank(without);
}

std::string graded_str(const FiniteModule& mod, const GradedZ& f) {
    (void)mod;
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, poly] : f) {
        if (!first) os << " + ";
        first = false;
        os << "(" << poly.str() << ") (x) v" << a;
    }
    return os.str();
}

}  // namespace zhc

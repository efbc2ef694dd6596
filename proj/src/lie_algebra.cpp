#include "zhc/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zhc {

Rational pair_functional(const std::vector<Rational>& functional, const std::vector<Rational>& coords) {
    if (functional.size() != coords.size()) throw std::invalid_argument("pair_functional: arity mismatch");
    Rational acc(0);
    for (size_t i = 0; i < functional.size(); ++i) acc += functional[i] * coords[i];
    return acc;
}

namespace {

VecQ flatten(const MatQ& m) {
    VecQ v(m.size());
    int k = 0;
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
    return v;
}

std::string describe_pair(int a, int b) {
    std::ostringstream os;
    os << "[X_" << a << ", X_" << b << "]";
    return os.str();
}

}  // namespace

ReductiveLieAlgebra ReductiveLieAlgebra::build(std::vector<MatQ> basis, std::vector<int> negative_part,
                                               std::vector<int> cartan_part, std::vector<int> positive_part,
                                               std::vector<SimpleTriple> simple_triples, std::string name) {
    ReductiveLieAlgebra g;
    g.name_ = std::move(name);
    g.basis_ = std::move(basis);
    g.negative_ = std::move(negative_part);
    g.cartan_ = std::move(cartan_part);
    g.positive_ = std::move(positive_part);
    g.triples_ = std::move(simple_triples);

    const int n = g.dim();
    if (n == 0) throw std::runtime_error("build_algebra: empty basis");
    const auto rows = g.basis_[0].rows();
    for (const MatQ& m : g.basis_)
        if (m.rows() != rows || m.cols() != rows)
            throw std::runtime_error("build_algebra: basis matrices must be square and of equal size");

    std::vector<bool> seen(n, false);
    for (const auto* part : {&g.negative_, &g.cartan_, &g.positive_})
        for (int a : *part) {
            if (a < 0 || a >= n || seen[a]) throw std::runtime_error("build_algebra: triangular partition is not a partition");
            seen[a] = true;
        }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::runtime_error("build_algebra: triangular partition misses basis indices");

    // Structure constants by exact solves against the flattened basis.
    MatQ flat(rows * rows, n);
    for (int a = 0; a < n; ++a) flat.col(a) = flatten(g.basis_[a]);
    if (matrix_rank(flat) != n) throw std::runtime_error("build_algebra: basis matrices are linearly dependent");
    const MatQ solve = left_inverse(flat);

    g.brackets_.assign(static_cast<size_t>(n) * n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const MatQ comm = g.basis_[a] * g.basis_[b] - g.basis_[b] * g.basis_[a];
            const VecQ target = flatten(comm);
            const VecQ coeffs = solve * target;
            if (flat * coeffs != target)
                throw std::runtime_error("build_algebra: bracket " + describe_pair(a, b) + " escapes the span");
            auto& entry = g.brackets_[static_cast<size_t>(a) * n + b];
            for (int k = 0; k < n; ++k)
                if (!coeffs(k).is_zero()) entry.emplace_back(k, coeffs(k));
        }
    }

    for (int c1 : g.cartan_)
        for (int c2 : g.cartan_)
            if (!g.bracket(c1, c2).empty())
                throw std::runtime_error("build_algebra: Cartan part is not abelian at " + describe_pair(c1, c2));

    g.derive_root_data();
    return g;
}

void ReductiveLieAlgebra::derive_root_data() {
    const int n = dim();
    const int nc = cartan_dim();
    const int r = rank();

    // Roots: every non-Cartan basis vector must be a simultaneous ad-eigenvector
    // of the Cartan part.
    root_of_basis_.assign(n, -1);
    roots_.clear();
    for (int a = 0; a < n; ++a) {
        if (std::find(cartan_.begin(), cartan_.end(), a) != cartan_.end()) continue;
        std::vector<Rational> root(nc, Rational(0));
        for (int c = 0; c < nc; ++c) {
            for (const auto& [k, coeff] : bracket(cartan_[c], a)) {
                if (k != a)
                    throw std::runtime_error("build_algebra: basis vector X_" + std::to_string(a) +
                                             " is not a root vector for the Cartan part");
                root[c] = coeff;
            }
        }
        if (std::all_of(root.begin(), root.end(), [](const Rational& x) { return x.is_zero(); }))
            throw std::runtime_error("build_algebra: non-Cartan basis vector X_" + std::to_string(a) + " has zero root");
        root_of_basis_[a] = static_cast<int>(roots_.size());
        roots_.push_back(std::move(root));
    }

    // The negative roots must be exactly the negated positive roots.
    {
        std::multiset<std::vector<Rational>> pos, neg;
        for (int a : positive_) pos.insert(root_of(a));
        for (int a : negative_) {
            auto m = root_of(a);
            for (Rational& x : m) x = -x;
            neg.insert(std::move(m));
        }
        if (pos != neg)
            throw std::runtime_error("build_algebra: negative part roots are not the negatives of the positive roots");
        if (std::set<std::vector<Rational>>(pos.begin(), pos.end()).size() != pos.size())
            throw std::runtime_error("build_algebra: repeated root (root spaces must be one-dimensional)");
    }

    // Simple triples.
    simple_h_pos_.assign(r, -1);
    simple_coroot_coords_.assign(r, {});
    for (int i = 0; i < r; ++i) {
        const auto& t = triples_[i];
        if (std::find(positive_.begin(), positive_.end(), t.e) == positive_.end())
            throw std::runtime_error("build_algebra: E_" + std::to_string(i + 1) + " is not in the positive part");
        if (std::find(negative_.begin(), negative_.end(), t.f) == negative_.end())
            throw std::runtime_error("build_algebra: F_" + std::to_string(i + 1) + " is not in the negative part");
        auto hpos = std::find(cartan_.begin(), cartan_.end(), t.h);
        if (hpos == cartan_.end())
            throw std::runtime_error("build_algebra: H_" + std::to_string(i + 1) + " is not in the Cartan part");
        simple_h_pos_[i] = static_cast<int>(hpos - cartan_.begin());
        std::vector<Rational> coords(nc, Rational(0));
        coords[simple_h_pos_[i]] = Rational(1);
        simple_coroot_coords_[i] = std::move(coords);

        const auto& ef = bracket(t.e, t.f);
        if (ef.size() != 1 || ef[0].first != t.h || ef[0].second != Rational(1))
            throw std::runtime_error("build_algebra: " + describe_pair(t.e, t.f) + " != H_" + std::to_string(i + 1));
        if (pair_functional(root_of(t.e), simple_coroot_coords_[i]) != Rational(2))
            throw std::runtime_error("build_algebra: alpha_" + std::to_string(i + 1) + "(H_" + std::to_string(i + 1) +
                                     ") != 2");
    }

    // Coroots H_alpha = 2 t_alpha / alpha(t_alpha) with t_alpha = [X_alpha, X_-alpha].
    coroots_.assign(roots_.size(), {});
    for (int a = 0; a < n; ++a) {
        if (root_of_basis_[a] < 0) continue;
        const auto& alpha = root_of(a);
        std::vector<Rational> minus = alpha;
        for (Rational& x : minus) x = -x;
        int b = -1;
        for (int cand = 0; cand < n; ++cand)
            if (root_of_basis_[cand] >= 0 && root_of(cand) == minus) { b = cand; break; }
        if (b < 0) throw std::runtime_error("build_algebra: missing opposite root vector");

        std::vector<Rational> t_alpha(nc, Rational(0));
        for (const auto& [k, coeff] : bracket(a, b)) {
            auto pos = std::find(cartan_.begin(), cartan_.end(), k);
            if (pos == cartan_.end())
                throw std::runtime_error("build_algebra: " + describe_pair(a, b) + " is not in the Cartan part");
            t_alpha[pos - cartan_.begin()] = coeff;
        }
        const Rational norm = pair_functional(alpha, t_alpha);
        if (norm.is_zero())
            throw std::runtime_error("build_algebra: alpha([X_alpha, X_-alpha]) = 0; realization is degenerate");
        std::vector<Rational> coroot(nc);
        for (int c = 0; c < nc; ++c) coroot[c] = Rational(2) * t_alpha[c] / norm;
        coroots_[root_of_basis_[a]] = std::move(coroot);
    }

    // Denominator coroots, sign-canonical and deduplicated.
    {
        std::set<std::vector<Rational>> seen;
        for (const auto& coroot : coroots_) {
            auto [canon, s] = LinearShiftFactor::make(coroot, 0);
            (void)s;
            if (seen.insert(canon.coroot).second) denominator_coroots_.push_back(canon.coroot);
        }
    }

    // rho = half sum of positive roots, as values on the Cartan basis.
    rho_values_.assign(nc, Rational(0));
    for (int a : positive_) {
        const auto& alpha = root_of(a);
        for (int c = 0; c < nc; ++c) rho_values_[c] += alpha[c] / Rational(2);
    }
    for (int i = 0; i < r; ++i)
        if (pair_functional(rho_values_, simple_coroot_coords_[i]) != Rational(1))
            throw std::runtime_error("build_algebra: rho(H_" + std::to_string(i + 1) + ") != 1");

    // Per-generator substitutions for the two Weyl actions.
    shifted_subs_.assign(r, {});
    plain_subs_.assign(r, {});
    for (int i = 0; i < r; ++i) {
        const auto& alpha = simple_root(i);
        const int p = simple_h_pos_[i];
        for (bool shifted : {false, true}) {
            std::vector<TorusPolynomial> sub;
            for (int c = 0; c < nc; ++c) {
                // x_c - alpha_i(T_c) * (x_p + [shifted]).
                TorusPolynomial s = TorusPolynomial::variable(nc, c);
                TorusPolynomial lam = TorusPolynomial::variable(nc, p);
                if (shifted) lam += TorusPolynomial::constant(nc, Rational(1));
                s -= alpha[c] * lam;
                sub.push_back(std::move(s));
            }
            (shifted ? shifted_subs_ : plain_subs_)[i] = std::move(sub);
        }
    }

    // Braid orders m_ij from the reflection matrices on the Cartan subalgebra.
    braid_orders_.assign(static_cast<size_t>(r) * r, 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            MatQ sij = MatQ::Identity(nc, nc);
            auto apply = [&](int idx, const MatQ& m) {
                MatQ out = m;
                for (int col = 0; col < nc; ++col) {
                    std::vector<Rational> v(nc);
                    for (int row = 0; row < nc; ++row) v[row] = m(row, col);
                    auto rv = reflect_cartan(idx, v);
                    for (int row = 0; row < nc; ++row) out(row, col) = rv[row];
                }
                return out;
            };
            sij = apply(i, apply(j, sij));
            MatQ acc = sij;
            int order = 1;
            while (acc != MatQ::Identity(nc, nc)) {
                acc = (sij * acc).eval();
                if (++order > 12) throw std::runtime_error("build_algebra: braid order exceeds 12");
            }
            braid_orders_[static_cast<size_t>(i) * r + j] = order;
        }
    }
}

const std::vector<Rational>& ReductiveLieAlgebra::root_of(int basis_index) const {
    const int m = root_of_basis_.at(basis_index);
    if (m < 0) throw std::invalid_argument("root_of: Cartan basis vector has no root");
    return roots_[m];
}

std::vector<Rational> ReductiveLieAlgebra::weight_of_basis(int basis_index) const {
    if (root_of_basis_.at(basis_index) < 0) return std::vector<Rational>(cartan_dim(), Rational(0));
    return root_of(basis_index);
}

std::vector<std::vector<Rational>> ReductiveLieAlgebra::all_roots() const { return roots_; }

const std::vector<Rational>& ReductiveLieAlgebra::coroot_of(int basis_index) const {
    const int m = root_of_basis_.at(basis_index);
    if (m < 0) throw std::invalid_argument("coroot_of: Cartan basis vector has no root");
    return coroots_[m];
}

std::vector<Rational> ReductiveLieAlgebra::reflect_cartan(int i, const std::vector<Rational>& coords) const {
    const Rational val = pair_functional(simple_root(i), coords);
    std::vector<Rational> out = coords;
    for (int c = 0; c < cartan_dim(); ++c) out[c] -= val * simple_coroot_coords_[i][c];
    return out;
}

std::vector<Rational> ReductiveLieAlgebra::reflect_functional(int i, const std::vector<Rational>& functional) const {
    const Rational val = functional.at(simple_h_pos_[i]);
    const auto& alpha = simple_root(i);
    std::vector<Rational> out = functional;
    for (int c = 0; c < cartan_dim(); ++c) out[c] -= val * alpha[c];
    return out;
}

const std::vector<TorusPolynomial>& ReductiveLieAlgebra::substitution(int i, bool shifted) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("Weyl action: simple index out of range");
    return shifted ? shifted_subs_[i] : plain_subs_[i];
}

TorusPolynomial ReductiveLieAlgebra::shifted_action(const WeylWord& w, const TorusPolynomial& p) const {
    TorusPolynomial out = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = out.substitute(substitution(*it, true));
    return out;
}

TorusPolynomial ReductiveLieAlgebra::plain_weyl_action(const WeylWord& w, const TorusPolynomial& p) const {
    TorusPolynomial out = p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = out.substitute(substitution(*it, false));
    return out;
}

TorusFraction ReductiveLieAlgebra::shifted_action(const WeylWord& w, const TorusFraction& f) const {
    TorusFraction out = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int i = *it;
        TorusPolynomial num = out.numerator().substitute(substitution(i, true));
        std::vector<LinearShiftFactor> den;
        den.reserve(out.denominator().size());
        for (const auto& factor : out.denominator()) {
            // s_i o (H_alpha + k) = H_{s_i alpha} + k + rho(s_i H_alpha) - rho(H_alpha).
            auto image = reflect_cartan(i, factor.coroot);
            const Rational delta = pair_functional(rho_values_, image) - pair_functional(rho_values_, factor.coroot);
            if (!delta.is_integer())
                throw std::logic_error("shifted_action: non-integer rho shift on a denominator factor");
            den.push_back(LinearShiftFactor{std::move(image), factor.shift + delta.to_long()});
        }
        out = TorusFraction(std::move(num), std::move(den));
    }
    return out;
}

TorusPolynomial ReductiveLieAlgebra::psi(int i, int j) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("psi: simple index out of range");
    if (j < 0) throw std::invalid_argument("psi: negative j");
    const int nc = cartan_dim();
    TorusPolynomial out = TorusPolynomial::constant(nc, Rational(1));
    const TorusPolynomial hi = TorusPolynomial::variable(nc, simple_h_pos_[i]);
    for (int m = 2; m <= j + 1; ++m) out = out * (hi + TorusPolynomial::constant(nc, Rational(m)));
    return out;
}

std::vector<WeylWord> ReductiveLieAlgebra::weyl_group_enumeration(size_t bound) const {
    const int nc = cartan_dim();
    const int r = rank();
    std::vector<MatQ> gens;
    for (int i = 0; i < r; ++i) {
        MatQ s(nc, nc);
        for (int col = 0; col < nc; ++col) {
            std::vector<Rational> v(nc, Rational(0));
            v[col] = Rational(1);
            auto rv = reflect_cartan(i, v);
            for (int row = 0; row < nc; ++row) s(row, col) = rv[row];
        }
        gens.push_back(std::move(s));
    }

    auto key = [nc](const MatQ& m) {
        std::vector<Rational> k;
        k.reserve(static_cast<size_t>(nc) * nc);
        for (int j = 0; j < nc; ++j)
            for (int i = 0; i < nc; ++i) k.push_back(m(i, j));
        return k;
    };

    std::map<std::vector<Rational>, WeylWord> found;
    std::queue<std::pair<MatQ, WeylWord>> queue;
    MatQ id = MatQ::Identity(nc, nc);
    found.emplace(key(id), WeylWord{});
    queue.emplace(std::move(id), WeylWord{});
    std::vector<WeylWord> out{WeylWord{}};

    while (!queue.empty()) {
        auto [m, word] = queue.front();
        queue.pop();
        for (int i = 0; i < r; ++i) {
            MatQ next = m * gens[i];
            auto k = key(next);
            if (found.count(k)) continue;
            WeylWord next_word = word;
            next_word.push_back(i);
            found.emplace(std::move(k), next_word);
            out.push_back(next_word);
            if (out.size() > bound)
                throw std::runtime_error("weyl_group_enumeration: |W| exceeds the bound " + std::to_string(bound));
            queue.emplace(std::move(next), std::move(next_word));
        }
    }
    return out;
}

std::vector<std::vector<int>> ReductiveLieAlgebra::simple_root_orbit_classes() const {
    // Saturate the set of simple roots under all simple reflections, then
    // group the simple indices by the orbit their root landed in.
    std::vector<std::set<std::vector<Rational>>> orbits;
    for (int i = 0; i < rank(); ++i) {
        const auto& alpha = simple_root(i);
        bool placed = false;
        for (auto& orbit : orbits)
            if (orbit.count(alpha)) { placed = true; break; }
        if (placed) continue;
        std::set<std::vector<Rational>> orbit{alpha};
        std::queue<std::vector<Rational>> work;
        work.push(alpha);
        while (!work.empty()) {
            auto mu = work.front();
            work.pop();
            for (int j = 0; j < rank(); ++j) {
                auto img = reflect_functional(j, mu);
                if (orbit.insert(img).second) work.push(std::move(img));
            }
        }
        orbits.push_back(std::move(orbit));
    }
    std::vector<std::vector<int>> classes(orbits.size());
    for (int i = 0; i < rank(); ++i)
        for (size_t o = 0; o < orbits.size(); ++o)
            if (orbits[o].count(simple_root(i))) { classes[o].push_back(i); break; }
    std::vector<std::vector<int>> nonempty;
    for (auto& c : classes)
        if (!c.empty()) nonempty.push_back(std::move(c));
    return nonempty;
}

}  // namespace zhc

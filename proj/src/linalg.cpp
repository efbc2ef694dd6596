#include "zhc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhc {

std::vector<int> rref_in_place(MatQ& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rational inv_pivot = Rational(1) / m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) *= inv_pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<VecQ> kernel_basis(const MatQ& m) {
    MatQ red = m;
    const std::vector<int> pivots = rref_in_place(red);
    const int cols = static_cast<int>(m.cols());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<VecQ> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v = VecQ::Zero(cols);
        v(f) = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -red(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank(const MatQ& m) {
    MatQ red = m;
    return static_cast<int>(rref_in_place(red).size());
}

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = static_cast<int>(m.rows());
    MatQ aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = MatQ::Identity(n, n);
    const std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw std::invalid_argument("inverse: matrix is singular");
    return aug.rightCols(n);
}

MatQ column_space_basis(const MatQ& m) {
    MatQ red = m;
    const std::vector<int> pivots = rref_in_place(red);
    MatQ basis(m.rows(), static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k) basis.col(static_cast<int>(k)) = m.col(pivots[k]);
    return basis;
}

MatQ left_inverse(const MatQ& m) {
    const int n = static_cast<int>(m.cols());
    MatQ aug(m.rows(), n + static_cast<int>(m.rows()));
    aug.leftCols(n) = m;
    aug.rightCols(m.rows()) = MatQ::Identity(m.rows(), m.rows());
    const std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        throw std::invalid_argument("left_inverse: matrix does not have full column rank");
    return aug.block(0, n, n, m.rows());
}

bool in_column_span(const MatQ& basis, const VecQ& v) {
    MatQ aug(basis.rows(), basis.cols() + 1);
    aug.leftCols(basis.cols()) = basis;
    aug.col(basis.cols()) = v;
    return matrix_rank(aug) == matrix_rank(basis);
}

std::vector<Rational> char_poly(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const int n = static_cast<int>(m.rows());
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[n] = Rational(1);
    MatQ mk = MatQ::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        MatQ shifted = mk;
        for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        mk = m * shifted;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = -tr / Rational(k);
    }
    return c;
}

namespace {

// Divisors of |n| > 0 not exceeding the cap, by trial division.
std::vector<mpz_class> divisors_up_to(const mpz_class& n_in, const mpz_class& cap) {
    mpz_class n = ::abs(n_in);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d <= cap; ++d) {
        if (d * d > n) break;
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n && n / d <= cap) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Fujiwara root bound for an integer-coefficient polynomial (ascending):
// every complex root has |z| <= 2 max_k |a_{n-k}/a_n|^{1/k}.
mpz_class fujiwara_bound(const std::vector<mpz_class>& ic) {
    const size_t n = ic.size() - 1;
    mpz_class bound(1);
    const mpz_class lead = ::abs(ic[n]);
    for (size_t k = 1; k <= n; ++k) {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), mpz_class(::abs(ic[n - k])).get_mpz_t(), lead.get_mpz_t());
        mpz_class root;
        mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
        root += 1;
        if (root > bound) bound = root;
    }
    return 2 * bound;
}

// Evaluate a degree-ascending coefficient list at a rational point.
Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (t - root); assumes the root is exact.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry(0);
    for (size_t k = coeffs.size(); k-- > 1;) {
        carry = coeffs[k] + carry * root;
        q[k - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& coeffs) {
    std::vector<Rational> p = coeffs;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.size() <= 1) return {};

    std::vector<std::pair<Rational, int>> roots;
    auto add_root = [&roots](const Rational& r) {
        for (auto& [v, m] : roots) {
            if (v == r) { ++m; return; }
        }
        roots.emplace_back(r, 1);
    };

    while (p.size() > 1) {
        // Strip t^k.
        if (p.front().is_zero()) {
            add_root(Rational(0));
            p.erase(p.begin());
            continue;
        }
        // Clear denominators, then apply the rational root theorem with the
        // Fujiwara bound pruning the numerator candidates: p/q a root forces
        // q | leading, p | constant and |p| <= bound * q.
        mpz_class lcm_den(1);
        for (const Rational& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> ic;
        ic.reserve(p.size());
        for (const Rational& c : p) ic.push_back(c.numerator() * (lcm_den / c.denominator()));
        const mpz_class bound = fujiwara_bound(ic);

        bool found = false;
        for (const mpz_class& den : divisors_up_to(ic.back(), ::abs(ic.back()))) {
            for (const mpz_class& num : divisors_up_to(ic.front(), bound * den)) {
                for (int s : {1, -1}) {
                    Rational cand(mpq_class(s * num, den));
                    if (eval_poly(p, cand).is_zero()) {
                        add_root(cand);
                        p = deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;  // remaining factor has no rational roots
    }
    return roots;
}

namespace {

bool all_zero(const MatQ& m) {
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace

MatQ exp_nilpotent(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exp_nilpotent: matrix not square");
    const int n = static_cast<int>(m.rows());
    MatQ acc = MatQ::Identity(n, n);
    MatQ term = MatQ::Identity(n, n);
    for (int k = 1; k <= n + 1; ++k) {
        term = (m * term).eval();
        term *= Rational(1, k);
        if (all_zero(term)) return acc;
        acc += term;
    }
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace zhc

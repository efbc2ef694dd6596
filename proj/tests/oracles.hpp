#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <gmpxx.h>

#include <vector>

#include "zhc/finite_module.hpp"
#include "zhc/pbw.hpp"

namespace zhc::test {

/// Rank over Q by fraction-free Bareiss elimination on the integer matrix
/// obtained by clearing denominators row by row. Independent of rref_in_place.
inline int bareiss_rank(const MatQ& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// The operator by which a PBW element acts on a module: each normal-ordered
/// word acts as the left-to-right product of its action matrices. Used as a
/// faithful-enough oracle for identities in U(g) at desk scale.
inline MatQ operator_on_module(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const PbwElement& u) {
    MatQ acc = MatQ::Zero(mod.dimension(), mod.dimension());
    for (const auto& [mon, c] : u.terms) {
        MatQ word = MatQ::Identity(mod.dimension(), mod.dimension());
        for (int p = 0; p < static_cast<int>(mon.size()); ++p)
            for (int rep = 0; rep < mon[p]; ++rep) word = (word * mod.action(pbw_basis_at(alg, p))).eval();
        acc += c * word;
    }
    return acc;
}

/// Reflection representative in the defining matrix realization:
/// exp(E_i) exp(-F_i) exp(E_i) as a matrix of the ambient space.
inline MatQ defining_s_hat(const ReductiveLieAlgebra& alg, int i) {
    const MatQ& e = alg.basis()[alg.triple(i).e];
    const MatQ& f = alg.basis()[alg.triple(i).f];
    return exp_nilpotent(e) * exp_nilpotent(MatQ(-f)) * exp_nilpotent(e);
}

}  // namespace zhc::test

#pragma once

#include <Eigen/Core>

#include <vector>

#include "zhc/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<zhc::Rational> : GenericNumTraits<zhc::Rational> {
    typedef zhc::Rational Real;
    typedef zhc::Rational NonInteger;
    typedef zhc::Rational Nested;
    static inline Real epsilon() { return zhc::Rational(0); }
    static inline Real dummy_precision() { return zhc::Rational(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

}  // namespace Eigen

namespace zhc {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(MatQ& m);

/// Basis of the right null space { x : m x = 0 }, exact Gaussian elimination.
std::vector<VecQ> kernel_basis(const MatQ& m);

int matrix_rank(const MatQ& m);

/// Exact inverse; throws std::invalid_argument if singular.
MatQ inverse(const MatQ& m);

/// Column-space basis (as a matrix whose columns are the basis).
MatQ column_space_basis(const MatQ& m);

/// Left inverse L with L*m = I for a matrix of full column rank.
MatQ left_inverse(const MatQ& m);

/// Does v lie in the column span of basis?
bool in_column_span(const MatQ& basis, const VecQ& v);

/// Coefficients of the characteristic polynomial det(tI - m), degree-ascending
/// (c[0] + c[1] t + ... + c[n] t^n, with c[n] = 1). Faddeev-LeVerrier.
std::vector<Rational> char_poly(const MatQ& m);

/// All rational roots of a rational-coefficient polynomial (coefficients
/// degree-ascending), each listed once with its multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& coeffs);

/// exp(m) for a nilpotent matrix; throws if the series does not terminate.
MatQ exp_nilpotent(const MatQ& m);

}  // namespace zhc

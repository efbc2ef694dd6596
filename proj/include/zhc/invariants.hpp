#pragma once

#include <map>

#include "zhc/bimodule.hpp"
#include "zhc/zhelobenko.hpp"

namespace zhc {

/// Element of S(g) (x) V: commutative monomial over all basis coordinates,
/// V side in weight-basis coordinates.
struct SymElement {
    std::map<std::pair<Exponents, int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Exponents& e, int vec, const Rational& c);

    friend bool operator==(const SymElement& a, const SymElement& b) { return a.terms == b.terms; }
};

/// Element of S(t) (x) V in weight coordinates (the graded shadow of Z).
using GradedZ = std::map<int, TorusPolynomial>;

/// All commutative exponent vectors with the given total degree / up to it.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);
std::vector<Exponents> monomials_up_to(int nvars, int degree);

/// Basis of M^g in PBW filtration degree <= degree: exact kernel of the
/// stacked ad_diag matrices for the generators E_i, F_i on the zero-weight
/// block (the Cartan conditions cut out exactly that block).
std::vector<BimoduleElement> invariants_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// Harish-Chandra image of an invariant: hc_project, with the invariance
/// precondition checked and the image asserted to lie in Q (both tests).
ZElement gamma(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m);

/// Basis of Q with polynomial coefficients of degree <= degree, solved from
/// the denominator-cleared fixed-point conditions
/// (s_i o Theta) Psi_ij = Theta (s_i o Psi_ij) on each V^0 cap V_ij block.
std::vector<ZElement> q_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// Basis of (S(g) (x) V)^g, homogeneous of the given degree / filtered.
std::vector<SymElement> sym_invariants_homogeneous(const ReductiveLieAlgebra& alg, const FiniteModule& mod,
                                                   int degree);
std::vector<SymElement> sym_invariants_upto(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// Set all non-Cartan coordinates to zero: S(g) (x) V -> S(t) (x) V.
GradedZ restrict_to_t(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const SymElement& f);

/// Plain Weyl reflection s_i on S(t) (x) V^0 (weight coordinates).
GradedZ graded_reflect(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int i, const GradedZ& f);

/// Is f W-invariant and, for each listed simple index i and every spin j,
/// the V^0 cap V_ij component divisible by H_i^j?
bool satisfies_chevalley_criterion(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const GradedZ& f,
                                   const std::vector<int>& simple_indices);

/// Basis of the homogeneous degree-d criterion space: W-invariant elements of
/// S(t) (x) V^0 whose V^0 cap V_ij components are divisible by H_i^j, with the
/// divisibility imposed for the given simple indices.
std::vector<GradedZ> chevalley_criterion_space(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree,
                                               const std::vector<int>& simple_indices);

/// Basis of the homogeneous degree-d W-invariants of S(t) (x) V^0.
std::vector<GradedZ> w_invariants_homogeneous(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree);

/// Does 2 alpha avoid the weights of V for every root alpha?
bool broer_condition(const ReductiveLieAlgebra& alg, const FiniteModule& mod);

/// Rank of a list of graded elements (dimension of their span in degree-d
/// coefficient space).
int graded_span_rank(const std::vector<GradedZ>& elems);

/// Is f in the span of the given elements?
bool graded_in_span(const std::vector<GradedZ>& span, const GradedZ& f);

std::string graded_str(const FiniteModule& mod, const GradedZ& f);

}  // namespace zhc

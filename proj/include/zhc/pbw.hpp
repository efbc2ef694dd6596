#pragma once

#include <map>
#include <string>
#include <vector>

#include "zhc/lie_algebra.hpp"

namespace zhc {

/// Exponent vector over the algebra basis in PBW position order: all negative
/// generators first, then Cartan, then positive, each block in basis order.
using PbwMonomial = std::vector<int>;

/// Element of U(g) as a rational combination of normal-ordered monomials.
struct PbwElement {
    std::map<PbwMonomial, Rational> terms;  // no zero coefficients

    bool is_zero() const { return terms.empty(); }
    void add(const PbwMonomial& m, const Rational& c);
    void add_scaled(const PbwElement& o, const Rational& c);

    friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms == b.terms; }
};

/// Basis index sitting at a PBW position.
int pbw_basis_at(const ReductiveLieAlgebra& alg, int position);
/// PBW position of a basis index.
int pbw_position(const ReductiveLieAlgebra& alg, int basis_index);

PbwElement pbw_one(const ReductiveLieAlgebra& alg);
PbwElement pbw_generator(const ReductiveLieAlgebra& alg, int basis_index);
PbwMonomial pbw_monomial_of_word(const ReductiveLieAlgebra& alg, const std::vector<int>& sorted_word);
/// The monomial's generators as a word of basis indices in PBW order.
std::vector<int> pbw_word_of_monomial(const ReductiveLieAlgebra& alg, const PbwMonomial& m);

int pbw_degree(const PbwMonomial& m);
int pbw_degree(const PbwElement& u);

/// Normal-orders an arbitrary word of basis indices: repeatedly rewrites the
/// leftmost out-of-order adjacent pair XY -> YX + [X,Y], expanding [X,Y] via
/// the structure constants. Terminates because each rewrite lowers
/// (degree, inversion count) lexicographically.
PbwElement pbw_normal_order_word(const ReductiveLieAlgebra& alg, const std::vector<int>& word, const Rational& coeff);

PbwElement pbw_multiply(const ReductiveLieAlgebra& alg, const PbwElement& a, const PbwElement& b);

/// (ad X) u = X u - u X.
PbwElement ad_action(const ReductiveLieAlgebra& alg, int basis_index, const PbwElement& u);

/// Ad of the reflection representative: exp(ad E_i) exp(-ad F_i) exp(ad E_i).
PbwElement s_hat_adjoint(const ReductiveLieAlgebra& alg, int i, const PbwElement& u);

/// Sum of the generators' root weights, as values on the Cartan basis.
std::vector<Rational> monomial_weight(const ReductiveLieAlgebra& alg, const PbwMonomial& m);

std::string pbw_str(const ReductiveLieAlgebra& alg, const PbwElement& u);

}  // namespace zhc

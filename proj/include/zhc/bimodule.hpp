#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zhc/finite_module.hpp"
#include "zhc/fraction.hpp"
#include "zhc/pbw.hpp"

namespace zhc {

/// Element of M = U(g) (x) V: sparse map (PBW monomial, module basis index) -> coefficient.
/// The module index refers to the module's standard (action matrix) coordinates.
struct BimoduleElement {
    std::map<std::pair<PbwMonomial, int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const PbwMonomial& m, int vec, const Rational& c);
    void add_scaled(const BimoduleElement& o, const Rational& c);
    int degree() const;  // PBW filtration degree, -1 for zero

    friend bool operator==(const BimoduleElement& a, const BimoduleElement& b) { return a.terms == b.terms; }
};

BimoduleElement tensor(const PbwElement& u, int vec);

/// Left action X (u (x) v) = X u (x) v.
BimoduleElement left_act(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int basis_index,
                         const BimoduleElement& m);
/// Right action (u (x) v) X = u X (x) v - u (x) X v.
BimoduleElement right_act(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m,
                          int basis_index);
/// Diagonal (adjoint) action X m - m X.
BimoduleElement ad_diag(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int basis_index,
                        const BimoduleElement& m);

/// True iff ad X kills m for X in the generating set {E_i, F_i} + Cartan basis.
bool is_g_invariant(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m);

/// Element of Z-bar = localized U(t) (x) V in weight-basis coordinates:
/// at most one TorusFraction per weight-basis index, none zero.
struct ZElement {
    std::map<int, TorusFraction> comps;

    bool is_zero() const { return comps.empty(); }
    /// True when every stored coefficient has an empty denominator.
    bool is_polynomial() const;
    void add(int weight_index, const TorusFraction& c);
    void add_scaled(const ZElement& o, const Rational& c);

    friend bool operator==(const ZElement& a, const ZElement& b) { return a.comps == b.comps; }
    friend ZElement operator+(ZElement a, const ZElement& b) {
        a.add_scaled(b, Rational(1));
        return a;
    }
    friend ZElement operator-(ZElement a, const ZElement& b) {
        a.add_scaled(b, Rational(-1));
        return a;
    }
};

/// Left multiplication by a fraction.
ZElement operator*(const TorusFraction& c, const ZElement& z);

/// 1 (x) v for a vector in weight coordinates; nvars is the Cartan dimension.
ZElement z_from_weight_coords(int nvars, const VecQ& coords);
/// Is every contributing weight-basis vector of weight zero?
bool z_weight_zero(const FiniteModule& mod, const ZElement& z);
/// Apply a matrix (in weight coordinates) to the V side.
ZElement z_apply_weight_matrix(const MatQ& m, const ZElement& z);
/// Right multiplication by (H_alpha + k)^(sign): uses the weight shift rule
/// m (H_alpha + k)^{-1} = (H_alpha + k + l)^{-1} m on weight components.
ZElement z_right_multiply_shift_factor(const FiniteModule& mod, const ZElement& z, const std::vector<Rational>& coroot,
                                       long k, int sign);

/// Maximal numerator degree over the components (-1 for zero).
int z_degree(const ZElement& z);

/// The Harish-Chandra projection of m onto U(t) (x) V along n^- M + M n.
/// Per normal-ordered monomial F^a H^b E^c (x) v: terms with a != 0 are
/// dropped, and the positive tail acts on v (rightmost generator first),
/// leaving H^b (x) (X_{p_1} ... X_{p_c} v). Output in weight coordinates.
ZElement hc_project(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m);

/// Re-embed a polynomial ZElement as an element of U(t) (x) V inside M.
BimoduleElement z_to_bimodule(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const ZElement& z);

std::string z_str(const FiniteModule& mod, const ZElement& z);

}  // namespace zhc

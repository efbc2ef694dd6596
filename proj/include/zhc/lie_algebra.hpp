#pragma once

#include <string>
#include <vector>

#include "zhc/fraction.hpp"
#include "zhc/linalg.hpp"
#include "zhc/polynomial.hpp"

namespace zhc {

/// Basis indices of one sl2-triple (E_i, F_i, H_i).
struct SimpleTriple {
    int e = -1;
    int f = -1;
    int h = -1;
};

/// A word in the simple reflections, 0-based indices; empty = identity.
using WeylWord = std::vector<int>;

/// Value of a functional (given by its values on the Cartan basis) on an
/// element of the Cartan subalgebra (given by coordinates in that basis).
Rational pair_functional(const std::vector<Rational>& functional, const std::vector<Rational>& coords);

/// A reductive Lie algebra presented by a matrix realization: an ordered basis
/// of square rational matrices closed under commutators, partitioned into
/// negative nilradical, Cartan and positive nilradical, with one sl2-triple
/// per simple root.
///
/// All root data (roots, coroots, rho, braid orders) is derived from honest
/// matrix commutators at build time; build() verifies every structural
/// invariant and throws std::runtime_error naming the offending commutator.
class ReductiveLieAlgebra {
  public:
    static ReductiveLieAlgebra build(std::vector<MatQ> basis, std::vector<int> negative_part,
                                     std::vector<int> cartan_part, std::vector<int> positive_part,
                                     std::vector<SimpleTriple> simple_triples, std::string name = "");

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int rank() const { return static_cast<int>(triples_.size()); }
    int cartan_dim() const { return static_cast<int>(cartan_.size()); }
    int matrix_size() const { return static_cast<int>(basis_.empty() ? 0 : basis_[0].rows()); }

    const std::vector<MatQ>& basis() const { return basis_; }
    const std::vector<int>& negative_part() const { return negative_; }
    const std::vector<int>& cartan_part() const { return cartan_; }
    const std::vector<int>& positive_part() const { return positive_; }
    const SimpleTriple& triple(int i) const { return triples_.at(i); }

    /// [X_a, X_b] as a sparse list of (basis index, coefficient).
    const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
        return brackets_[static_cast<size_t>(a) * basis_.size() + b];
    }

    bool is_cartan_index(int a) const { return root_of_basis_[a] < 0; }
    /// Root functional of a non-Cartan basis vector (values on the Cartan basis).
    const std::vector<Rational>& root_of(int basis_index) const;
    /// Zero functional for Cartan indices, the root functional otherwise.
    std::vector<Rational> weight_of_basis(int basis_index) const;

    int num_positive_roots() const { return static_cast<int>(positive_.size()); }
    /// All roots: the functional of every non-Cartan basis vector.
    std::vector<std::vector<Rational>> all_roots() const;
    /// Coroot H_alpha (coordinates in the Cartan basis) of the root attached
    /// to a non-Cartan basis vector.
    const std::vector<Rational>& coroot_of(int basis_index) const;
    /// Deduplicated sign-canonical coroots; these generate the denominator set.
    const std::vector<std::vector<Rational>>& denominator_coroots() const { return denominator_coroots_; }

    const std::vector<Rational>& simple_root(int i) const { return root_of(triples_[i].e); }
    /// Coordinates of H_i in the Cartan basis (a unit vector).
    const std::vector<Rational>& simple_coroot(int i) const { return simple_coroot_coords_[i]; }
    /// Position of H_i within the Cartan basis.
    int simple_coroot_position(int i) const { return simple_h_pos_[i]; }
    /// Cartan pairing a_ij = alpha_j(H_i).
    Rational cartan_pairing(int i, int j) const { return pair_functional(simple_root(j), simple_coroot(i)); }
    /// rho(T_c) for each Cartan basis element T_c.
    const std::vector<Rational>& rho_values() const { return rho_values_; }
    /// Order m_ij of s_i s_j in W.
    int braid_order(int i, int j) const { return braid_orders_[static_cast<size_t>(i) * rank() + j]; }

    /// Reflection s_i on the Cartan subalgebra: v -> v - alpha_i(v) H_i.
    std::vector<Rational> reflect_cartan(int i, const std::vector<Rational>& coords) const;
    /// Reflection s_i on functionals: mu -> mu - mu(H_i) alpha_i.
    std::vector<Rational> reflect_functional(int i, const std::vector<Rational>& functional) const;

    /// Shifted Weyl action (w o Phi)(lambda) = Phi(w^-1 o lambda), applied
    /// generator by generator along the word (rightmost letter first).
    TorusPolynomial shifted_action(const WeylWord& w, const TorusPolynomial& p) const;
    TorusFraction shifted_action(const WeylWord& w, const TorusFraction& f) const;
    /// Plain Weyl action (rho = 0).
    TorusPolynomial plain_weyl_action(const WeylWord& w, const TorusPolynomial& p) const;

    /// Psi_ij = (H_i + 2)(H_i + 3)...(H_i + j + 1); Psi_i0 = 1.
    TorusPolynomial psi(int i, int j) const;

    /// One reduced word per Weyl group element, found by breadth-first
    /// generation; throws std::runtime_error when |W| exceeds the bound.
    std::vector<WeylWord> weyl_group_enumeration(size_t bound = 1024) const;

    /// Partition of the simple-root indices into W-orbit classes of their
    /// roots; each inner list is one orbit's simple representatives.
    std::vector<std::vector<int>> simple_root_orbit_classes() const;

  private:
    ReductiveLieAlgebra() = default;
    void derive_root_data();
    const std::vector<TorusPolynomial>& substitution(int i, bool shifted) const;

    std::string name_;
    std::vector<MatQ> basis_;
    std::vector<int> negative_, cartan_, positive_;
    std::vector<SimpleTriple> triples_;
    std::vector<std::vector<std::pair<int, Rational>>> brackets_;

    std::vector<int> root_of_basis_;                      // -1 for Cartan indices
    std::vector<std::vector<Rational>> roots_;            // per non-Cartan basis vector, indexed via root_of_basis_
    std::vector<std::vector<Rational>> coroots_;          // parallel to roots_
    std::vector<std::vector<Rational>> denominator_coroots_;
    std::vector<std::vector<Rational>> simple_coroot_coords_;
    std::vector<int> simple_h_pos_;
    std::vector<Rational> rho_values_;
    std::vector<int> braid_orders_;
    std::vector<std::vector<TorusPolynomial>> shifted_subs_, plain_subs_;
};

}  // namespace zhc

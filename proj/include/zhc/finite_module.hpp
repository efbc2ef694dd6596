#pragma once

#include <string>
#include <vector>

#include "zhc/lie_algebra.hpp"
#include "zhc/linalg.hpp"

namespace zhc {

/// A finite-dimensional module over a ReductiveLieAlgebra, given by one action
/// matrix per algebra basis element. build() verifies the representation
/// property, computes an exact weight basis, the per-simple-root sl2-isotypic
/// projectors, and the reflection representatives exp(E_i)exp(-F_i)exp(E_i).
///
/// The module keeps a pointer to its algebra; the algebra must outlive it.
class FiniteModule {
  public:
    /// One sl2-isotypic block for a simple root: spin j stored as 2j.
    struct Isotypic {
        int twice_j = 0;
        MatQ projector;         // in standard coordinates
        MatQ projector_weight;  // in weight coordinates
    };

    static FiniteModule build(const ReductiveLieAlgebra& alg, std::vector<MatQ> actions, std::string name = "");

    const ReductiveLieAlgebra& algebra() const { return *alg_; }
    const std::string& name() const { return name_; }
    int dimension() const { return dim_; }
    const MatQ& action(int basis_index) const { return actions_.at(basis_index); }

    /// Columns are the weight vectors, in standard coordinates.
    const MatQ& weight_basis() const { return weight_basis_; }
    const MatQ& weight_basis_inverse() const { return weight_basis_inv_; }
    /// Weight of the k-th weight-basis vector, as values on the Cartan basis.
    const std::vector<Rational>& weight(int k) const { return weights_.at(k); }
    const std::vector<int>& zero_weight_indices() const { return zero_weight_; }
    /// mu(H_i) of the k-th weight vector, always an integer.
    long weight_on_simple_coroot(int k, int i) const;

    const std::vector<Isotypic>& isotypics(int i) const { return isotypics_.at(i); }
    /// Projector onto V_ij (spin j = twice_j/2); zero matrix if the spin is absent.
    MatQ isotypic_projector(int i, int twice_j) const;

    /// Module matrix of exp(E_i)exp(-F_i)exp(E_i), standard coordinates.
    const MatQ& s_hat(int i) const { return s_hat_.at(i); }
    const MatQ& s_hat_weight(int i) const { return s_hat_weight_.at(i); }
    VecQ s_hat_on_vector(int i, const VecQ& v) const { return s_hat_.at(i) * v; }

    /// Integer spins j (as 2j, even) with V^0 intersect V_ij nonzero, and the
    /// corresponding basis/left-inverse in zero-weight coordinates.
    struct ZeroIsotypic {
        int j = 0;        // integer spin
        MatQ basis;       // zero_weight_dim x m, columns span V^0 cap V_ij
        MatQ coords;      // m x zero_weight_dim, coords * basis = I
        MatQ projector0;  // projector restricted to zero-weight coordinates
    };
    const std::vector<ZeroIsotypic>& zero_isotypics(int i) const { return zero_isotypics_.at(i); }

  private:
    const ReductiveLieAlgebra* alg_ = nullptr;
    std::string name_;
    int dim_ = 0;
    std::vector<MatQ> actions_;
    MatQ weight_basis_, weight_basis_inv_;
    std::vector<std::vector<Rational>> weights_;
    std::vector<int> zero_weight_;
    std::vector<std::vector<Isotypic>> isotypics_;
    std::vector<std::vector<ZeroIsotypic>> zero_isotypics_;
    std::vector<MatQ> s_hat_, s_hat_weight_;
};

/// Scalar by which E_i^k F_i^k acts on V^0 cap V_ij: (j-k+1)...(j+k), zero for k > j.
Rational ek_fk_on_zero_weight(int j, int k);

}  // namespace zhc

#include "zhc/finite_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhc {

namespace {

// Spin m = 2j from a Casimir eigenvalue c = m(m+2)/2; -1 when c is not of that form.
int twice_spin_of_casimir(const Rational& c) {
    const Rational twice = Rational(2) * c;
    if (!twice.is_integer() || twice.sign() < 0) return -1;
    // m(m+2) = 2c <=> (m+1)^2 = 2c+1.
    mpz_class disc = twice.numerator() + 1;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root != disc || root < 1) return -1;
    return static_cast<int>(root.get_si()) - 1;
}

}  // namespace

FiniteModule FiniteModule::build(const ReductiveLieAlgebra& alg, std::vector<MatQ> actions, std::string name) {
    FiniteModule mod;
    mod.alg_ = &alg;
    mod.name_ = std::move(name);
    mod.actions_ = std::move(actions);

    if (static_cast<int>(mod.actions_.size()) != alg.dim())
        throw std::runtime_error("build_module: need one action matrix per algebra basis element");
    if (mod.actions_.empty()) throw std::runtime_error("build_module: empty module");
    mod.dim_ = static_cast<int>(mod.actions_[0].rows());
    for (const MatQ& m : mod.actions_)
        if (m.rows() != mod.dim_ || m.cols() != mod.dim_)
            throw std::runtime_error("build_module: action matrices must be square and of equal size");

    // Representation property against the algebra's structure constants.
    for (int a = 0; a < alg.dim(); ++a) {
        for (int b = 0; b < alg.dim(); ++b) {
            MatQ lhs = mod.actions_[a] * mod.actions_[b] - mod.actions_[b] * mod.actions_[a];
            for (const auto& [k, c] : alg.bracket(a, b)) lhs -= c * mod.actions_[k];
            if (!(lhs == MatQ::Zero(mod.dim_, mod.dim_))) {
                std::ostringstream os;
                os << "build_module: representation property fails at [X_" << a << ", X_" << b << "]";
                throw std::runtime_error(os.str());
            }
        }
    }

    // Weight basis: refine simultaneous eigenspaces of the Cartan actions.
    const int nc = alg.cartan_dim();
    struct Space {
        MatQ basis;  // dim x k
        std::vector<Rational> weight;
    };
    std::vector<Space> spaces{{MatQ::Identity(mod.dim_, mod.dim_), std::vector<Rational>{}}};
    for (int c = 0; c < nc; ++c) {
        const MatQ& act = mod.actions_[alg.cartan_part()[c]];
        std::vector<Space> next;
        for (const auto& sp : spaces) {
            const int k = static_cast<int>(sp.basis.cols());
            const MatQ img = act * sp.basis;
            const MatQ small = left_inverse(sp.basis) * img;
            if (!(sp.basis * small == img))
                throw std::runtime_error("build_module: Cartan action does not preserve a weight subspace");
            int total = 0;
            for (const auto& [lambda, mult] : rational_roots(char_poly(small))) {
                (void)mult;
                MatQ shifted = small;
                for (int d = 0; d < k; ++d) shifted(d, d) -= lambda;
                const auto ker = kernel_basis(shifted);
                if (ker.empty()) continue;
                MatQ sub(k, static_cast<int>(ker.size()));
                for (size_t m = 0; m < ker.size(); ++m) sub.col(static_cast<int>(m)) = ker[m];
                Space ns;
                ns.basis = sp.basis * sub;
                ns.weight = sp.weight;
                ns.weight.push_back(lambda);
                total += static_cast<int>(ker.size());
                next.push_back(std::move(ns));
            }
            if (total != k)
                throw std::runtime_error("build_module: Cartan action is not diagonalizable over Q (not a weight module)");
        }
        spaces = std::move(next);
    }

    mod.weight_basis_ = MatQ(mod.dim_, mod.dim_);
    int col = 0;
    for (const auto& sp : spaces) {
        for (int j = 0; j < sp.basis.cols(); ++j) {
            mod.weight_basis_.col(col) = sp.basis.col(j);
            mod.weights_.push_back(sp.weight);
            ++col;
        }
    }
    mod.weight_basis_inv_ = inverse(mod.weight_basis_);

    for (int k = 0; k < mod.dim_; ++k) {
        bool zero = true;
        for (const Rational& w : mod.weights_[k])
            if (!w.is_zero()) { zero = false; break; }
        if (zero) mod.zero_weight_.push_back(k);
        for (int i = 0; i < alg.rank(); ++i) {
            const Rational v = mod.weights_[k][alg.simple_coroot_position(i)];
            if (!v.is_integer())
                throw std::runtime_error("build_module: weight has non-integer value " + v.str() + " on coroot H_" +
                                         std::to_string(i + 1));
        }
    }

    // Isotypic projectors from Lagrange interpolation in the g_i-Casimir
    // Omega_i = E_i F_i + F_i E_i + H_i^2/2, eigenvalue 2j(j+1) on spin j.
    const int r = alg.rank();
    mod.isotypics_.resize(r);
    mod.zero_isotypics_.resize(r);
    mod.s_hat_.resize(r);
    mod.s_hat_weight_.resize(r);
    const int z = static_cast<int>(mod.zero_weight_.size());
    for (int i = 0; i < r; ++i) {
        const auto& t = alg.triple(i);
        const MatQ& e = mod.actions_[t.e];
        const MatQ& f = mod.actions_[t.f];
        const MatQ& h = mod.actions_[t.h];
        const MatQ casimir = e * f + f * e + Rational(1, 2) * (h * h);

        std::vector<std::pair<Rational, int>> eigen;  // (eigenvalue, 2j)
        for (const auto& [lambda, mult] : rational_roots(char_poly(casimir))) {
            (void)mult;
            const int m = twice_spin_of_casimir(lambda);
            if (m < 0)
                throw std::runtime_error("build_module: Casimir eigenvalue " + lambda.str() +
                                         " is not of the form j(j+1)*2");
            eigen.emplace_back(lambda, m);
        }
        std::sort(eigen.begin(), eigen.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });

        MatQ sum = MatQ::Zero(mod.dim_, mod.dim_);
        for (const auto& [lambda, m] : eigen) {
            MatQ proj = MatQ::Identity(mod.dim_, mod.dim_);
            for (const auto& [mu, m2] : eigen) {
                if (m2 == m) continue;
                MatQ shifted = casimir;
                for (int d = 0; d < mod.dim_; ++d) shifted(d, d) -= mu;
                proj = (proj * shifted * (Rational(1) / (lambda - mu))).eval();
            }
            sum += proj;
            Isotypic iso;
            iso.twice_j = m;
            iso.projector = proj;
            iso.projector_weight = mod.weight_basis_inv_ * proj * mod.weight_basis_;
            mod.isotypics_[i].push_back(std::move(iso));
        }
        if (!(sum == MatQ::Identity(mod.dim_, mod.dim_)))
            throw std::runtime_error("build_module: isotypic projectors do not sum to the identity (Casimir not semisimple)");

        // Zero-weight blocks; only integer spins may meet the zero weight space.
        for (const auto& iso : mod.isotypics_[i]) {
            MatQ p0(z, z);
            for (int a = 0; a < z; ++a)
                for (int b = 0; b < z; ++b) p0(a, b) = iso.projector_weight(mod.zero_weight_[a], mod.zero_weight_[b]);
            // The projector must not move zero-weight vectors out of V^0.
            for (int b = 0; b < z; ++b) {
                VecQ full = iso.projector_weight.col(mod.zero_weight_[b]);
                for (int row = 0; row < mod.dim_; ++row) {
                    if (!full(row).is_zero() &&
                        std::find(mod.zero_weight_.begin(), mod.zero_weight_.end(), row) == mod.zero_weight_.end())
                        throw std::runtime_error("build_module: isotypic projector does not preserve the zero weight space");
                }
            }
            const MatQ basis = column_space_basis(p0);
            if (basis.cols() == 0) continue;
            if (iso.twice_j % 2 != 0)
                throw std::runtime_error("build_module: half-integer isotypic component meets the zero weight space");
            ZeroIsotypic zi;
            zi.j = iso.twice_j / 2;
            zi.basis = basis;
            zi.coords = left_inverse(basis);
            zi.projector0 = p0;
            mod.zero_isotypics_[i].push_back(std::move(zi));
        }

        mod.s_hat_[i] = exp_nilpotent(e) * exp_nilpotent(MatQ(-f)) * exp_nilpotent(e);
        mod.s_hat_weight_[i] = mod.weight_basis_inv_ * mod.s_hat_[i] * mod.weight_basis_;
    }

    return mod;
}

long FiniteModule::weight_on_simple_coroot(int k, int i) const {
    return weights_.at(k)[alg_->simple_coroot_position(i)].to_long();
}

MatQ FiniteModule::isotypic_projector(int i, int twice_j) const {
    for (const auto& iso : isotypics_.at(i))
        if (iso.twice_j == twice_j) return iso.projector;
    return MatQ::Zero(dim_, dim_);
}

Rational ek_fk_on_zero_weight(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("ek_fk_on_zero_weight: negative spin or power");
    if (k > j) return Rational(0);
    Rational acc(1);
    for (int m = j - k + 1; m <= j + k; ++m) acc *= Rational(m);
    return acc;
}

}  // namespace zhc

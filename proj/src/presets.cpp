#include "zhc/presets.hpp"

#include <map>
#include <stdexcept>

#include "zhc/invariants.hpp"

namespace zhc {

namespace {

MatQ unit_matrix(int n, int row, int col) {
    MatQ m = MatQ::Zero(n, n);
    m(row, col) = Rational(1);
    return m;
}

MatQ diag_matrix(int n, std::initializer_list<int> entries) {
    MatQ m = MatQ::Zero(n, n);
    int i = 0;
    for (int e : entries) m(i, i) = Rational(e), ++i;
    return m;
}

}  // namespace

bool is_preset_algebra(const std::string& name) {
    return name == "sl2" || name == "sl3" || name == "gl2" || name == "sl2xsl2";
}

ReductiveLieAlgebra preset_algebra(const std::string& name) {
    if (name == "sl2") {
        // Basis: F, H, E.
        std::vector<MatQ> basis{unit_matrix(2, 1, 0), diag_matrix(2, {1, -1}), unit_matrix(2, 0, 1)};
        return ReductiveLieAlgebra::build(std::move(basis), {0}, {1}, {2}, {SimpleTriple{2, 0, 1}}, "sl2");
    }
    if (name == "sl3") {
        // Basis: F1, F2, F12, H1, H2, E1, E2, E12 with E12 = [E1, E2] direction e_13.
        std::vector<MatQ> basis{
            unit_matrix(3, 1, 0), unit_matrix(3, 2, 1), unit_matrix(3, 2, 0),
            diag_matrix(3, {1, -1, 0}), diag_matrix(3, {0, 1, -1}),
            unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2),
        };
        return ReductiveLieAlgebra::build(std::move(basis), {0, 1, 2}, {3, 4}, {5, 6, 7},
                                          {SimpleTriple{5, 0, 3}, SimpleTriple{6, 1, 4}}, "sl3");
    }
    if (name == "gl2") {
        // Basis: F, H, Z (center), E.
        std::vector<MatQ> basis{unit_matrix(2, 1, 0), diag_matrix(2, {1, -1}), diag_matrix(2, {1, 1}),
                                unit_matrix(2, 0, 1)};
        return ReductiveLieAlgebra::build(std::move(basis), {0}, {1, 2}, {3}, {SimpleTriple{3, 0, 1}}, "gl2");
    }
    if (name == "sl2xsl2") {
        // Two commuting sl2 blocks inside 4x4 matrices: F1, F2, H1, H2, E1, E2.
        std::vector<MatQ> basis{
            unit_matrix(4, 1, 0), unit_matrix(4, 3, 2),
            diag_matrix(4, {1, -1, 0, 0}), diag_matrix(4, {0, 0, 1, -1}),
            unit_matrix(4, 0, 1), unit_matrix(4, 2, 3),
        };
        return ReductiveLieAlgebra::build(std::move(basis), {0, 1}, {2, 3}, {4, 5},
                                          {SimpleTriple{4, 0, 2}, SimpleTriple{5, 1, 3}}, "sl2xsl2");
    }
    throw std::invalid_argument("preset_algebra: unknown preset '" + name + "'");
}

std::vector<MatQ> adjoint_actions(const ReductiveLieAlgebra& alg) {
    const int n = alg.dim();
    std::vector<MatQ> actions;
    actions.reserve(n);
    for (int a = 0; a < n; ++a) {
        MatQ m = MatQ::Zero(n, n);
        for (int b = 0; b < n; ++b)
            for (const auto& [k, c] : alg.bracket(a, b)) m(k, b) = c;
        actions.push_back(std::move(m));
    }
    return actions;
}

std::vector<MatQ> sym_power_actions(const ReductiveLieAlgebra& alg, int k) {
    if (k < 0) throw std::invalid_argument("sym_power_actions: negative power");
    const int n = alg.matrix_size();
    const auto mons = monomials_of_degree(n, k);
    std::map<Exponents, int> index_of;
    for (size_t m = 0; m < mons.size(); ++m) index_of.emplace(mons[m], static_cast<int>(m));

    std::vector<MatQ> actions;
    actions.reserve(alg.dim());
    for (int a = 0; a < alg.dim(); ++a) {
        const MatQ& x = alg.basis()[a];
        MatQ act = MatQ::Zero(static_cast<int>(mons.size()), static_cast<int>(mons.size()));
        for (size_t col = 0; col < mons.size(); ++col) {
            const Exponents& e = mons[col];
            // Derivation: X.(v_0^{e_0}...) = sum_b e_b (X v_b) v_b^{e_b - 1} ...
            for (int b = 0; b < n; ++b) {
                if (e[b] == 0) continue;
                for (int row = 0; row < n; ++row) {
                    if (x(row, b).is_zero()) continue;
                    Exponents img = e;
                    --img[b];
                    ++img[row];
                    act(index_of.at(img), static_cast<int>(col)) += Rational(e[b]) * x(row, b);
                }
            }
        }
        actions.push_back(std::move(act));
    }
    return actions;
}

std::vector<MatQ> direct_sum_actions(const std::vector<MatQ>& a, const std::vector<MatQ>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("direct_sum_actions: mismatched action counts");
    std::vector<MatQ> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const int da = static_cast<int>(a[i].rows());
        const int db = static_cast<int>(b[i].rows());
        MatQ m = MatQ::Zero(da + db, da + db);
        m.topLeftCorner(da, da) = a[i];
        m.bottomRightCorner(db, db) = b[i];
        out.push_back(std::move(m));
    }
    return out;
}

bool is_preset_module(const std::string& name) {
    if (name == "trivial" || name == "natural" || name == "adjoint") return true;
    if (name.size() > 3 && name.rfind("sym", 0) == 0)
        return name.find_first_not_of("0123456789", 3) == std::string::npos;
    return false;
}

FiniteModule preset_module(const ReductiveLieAlgebra& alg, const std::string& name) {
    if (name == "trivial") {
        std::vector<MatQ> actions(alg.dim(), MatQ::Zero(1, 1));
        return FiniteModule::build(alg, std::move(actions), name);
    }
    if (name == "natural") return FiniteModule::build(alg, alg.basis(), name);
    if (name == "adjoint") return FiniteModule::build(alg, adjoint_actions(alg), name);
    if (name.rfind("sym", 0) == 0) {
        const int k = std::stoi(name.substr(3));
        return FiniteModule::build(alg, sym_power_actions(alg, k), name);
    }
    throw std::invalid_argument("preset_module: unknown preset '" + name + "'");
}

}  // namespace zhc

#include "zhc/checks.hpp"

#include <algorithm>
#include <sstream>

#include "zhc/presets.hpp"

namespace zhc {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string witness) {
    checks.push_back(CheckResult{std::move(name), pass, std::move(witness)});
}

Report check_gauss(int j_max) {
    Report rep;
    rep.command = "gauss";
    rep.inputs["j_max"] = std::to_string(j_max);

    const ReductiveLieAlgebra alg = preset_algebra("sl2");
    const auto& coroot = alg.simple_coroot(0);
    const int nc = alg.cartan_dim();

    for (int j = 0; j <= j_max; ++j) {
        const Rational sign = Rational(j % 2 ? -1 : 1);

        // Closed form Psi_ij / (s_i o Psi_ij), the denominator inverted through
        // the generic factor-extraction path.
        const TorusPolynomial psi = alg.psi(0, j);
        const TorusPolynomial psi_ref = alg.shifted_action(WeylWord{0}, psi);
        const TorusFraction closed =
            TorusFraction(psi) * invert_fraction(TorusFraction(psi_ref), alg.denominator_coroots());

        // Truncated series (-1)^j sum_k (j-k+1)...(j+k) / (k! H(H-1)...(H-k+1)).
        TorusFraction series = TorusFraction(TorusPolynomial(nc));
        for (int k = 0; k <= j; ++k) {
            std::vector<LinearShiftFactor> den;
            for (int t = 0; t < k; ++t) den.push_back(LinearShiftFactor{coroot, -t});
            series += TorusFraction(TorusPolynomial::constant(nc, sign * ek_fk_on_zero_weight(j, k) / factorial(k)),
                                    std::move(den));
        }
        rep.add("series-equals-closed-form-j" + std::to_string(j), series == closed,
                series == closed ? "" : series.str() + " vs " + closed.str());

        // The same identity through the spin-j module.
        const FiniteModule mod = preset_module(alg, "sym" + std::to_string(2 * j));
        const auto& zero = mod.zero_weight_indices();
        if (zero.size() != 1) {
            rep.add("module-route-j" + std::to_string(j), false, "zero weight space is not one-dimensional");
            continue;
        }
        const int idx = zero[0];
        VecQ shat_col = mod.s_hat_weight(0).col(idx);
        bool sign_ok = shat_col(idx) == sign;
        for (int b = 0; b < mod.dimension() && sign_ok; ++b)
            if (b != idx && !shat_col(b).is_zero()) sign_ok = false;
        rep.add("reflection-sign-j" + std::to_string(j), sign_ok);

        ZElement expected;
        expected.add(idx, closed);
        const ZElement actual = xi_on_vector(alg, mod, 0, idx);
        rep.add("xi-on-vector-j" + std::to_string(j), actual == expected,
                actual == expected ? "" : z_str(mod, actual));
    }
    return rep;
}

Report check_braid(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples) {
    Report rep;
    rep.command = "braid";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["seed"] = std::to_string(seed);

    if (alg.rank() < 2) {
        rep.add("braid-trivial-rank", true, "rank < 2: no relations to check");
        return rep;
    }
    Rng rng(seed);
    for (int i = 0; i < alg.rank(); ++i) {
        for (int j = i + 1; j < alg.rank(); ++j) {
            const int m = alg.braid_order(i, j);
            bool ok = true;
            std::string witness;
            for (int s = 0; s < samples && ok; ++s) {
                const ZElement z = random_z_element(rng, alg, mod, 2, 2, false);
                ZElement lhs = z, rhs = z;
                for (int t = 0; t < m; ++t) {
                    lhs = xi(alg, mod, (t % 2 == 0) ? i : j, lhs);
                    rhs = xi(alg, mod, (t % 2 == 0) ? j : i, rhs);
                }
                if (!(lhs == rhs)) {
                    ok = false;
                    witness = "sample " + std::to_string(s) + ": " + z_str(mod, z);
                }
            }
            rep.add("braid-" + std::to_string(i + 1) + std::to_string(j + 1) + "-m" + std::to_string(m), ok, witness);
        }
    }
    return rep;
}

Report check_xi_square(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples) {
    Report rep;
    rep.command = "xi-square";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["seed"] = std::to_string(seed);

    Rng rng(seed);
    bool involutive = true, squares = true;
    std::string wit_inv, wit_sq;
    for (int s = 0; s < samples; ++s) {
        if (!mod.zero_weight_indices().empty()) {
            const ZElement z0 = random_z_element(rng, alg, mod, 3, 0, true);
            for (int i = 0; i < alg.rank() && involutive; ++i) {
                const ZElement sq = xi_square(alg, mod, i, z0);  // cross-checked inside
                if (!(sq == z0)) {
                    involutive = false;
                    wit_inv = "sample " + std::to_string(s) + ", i=" + std::to_string(i + 1) + ": " + z_str(mod, z0);
                }
            }
        }
        const ZElement z = random_z_element(rng, alg, mod, 2, 1, false);
        for (int i = 0; i < alg.rank() && squares; ++i) {
            try {
                (void)xi_square(alg, mod, i, z);
            } catch (const std::logic_error& e) {
                squares = false;
                wit_sq = std::string(e.what()) + " at sample " + std::to_string(s);
            }
        }
    }
    rep.add("xi-square-identity-on-weight-zero", involutive, wit_inv);
    rep.add("xi-square-conjugation-formula", squares, wit_sq);
    return rep;
}

namespace {

// Coefficient-matrix rank of a family of polynomial ZElements.
int z_span_rank(const std::vector<ZElement>& elems) {
    std::map<std::pair<int, Exponents>, int> coord_of;
    for (const auto& z : elems)
        for (const auto& [a, frac] : z.comps)
            for (const auto& [e, c] : frac.numerator().terms()) coord_of.emplace(std::make_pair(a, e), 0);
    int next = 0;
    for (auto& [k, v] : coord_of) v = next++;
    MatQ m = MatQ::Zero(next, static_cast<int>(elems.size()));
    for (size_t col = 0; col < elems.size(); ++col)
        for (const auto& [a, frac] : elems[col].comps)
            for (const auto& [e, c] : frac.numerator().terms()) m(coord_of.at({a, e}), static_cast<int>(col)) = c;
    return matrix_rank(m);
}

}  // namespace

Report check_hc(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    Report rep;
    rep.command = "hc";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["degree"] = std::to_string(degree);

    std::vector<int> inv_dims, q_dims;
    for (int d = 0; d <= degree; ++d) {
        inv_dims.push_back(static_cast<int>(invariants_upto(alg, mod, d).size()));
        q_dims.push_back(static_cast<int>(q_upto(alg, mod, d).size()));
    }
    rep.dims["invariants"] = inv_dims;
    rep.dims["q"] = q_dims;
    for (int d = 0; d <= degree; ++d)
        rep.add("dim-equality-d" + std::to_string(d), inv_dims[d] == q_dims[d],
                inv_dims[d] == q_dims[d] ? "" : std::to_string(inv_dims[d]) + " vs " + std::to_string(q_dims[d]));

    const auto basis = invariants_upto(alg, mod, degree);
    std::vector<ZElement> images;
    bool q_membership = true;
    std::string witness;
    for (const auto& m : basis) {
        try {
            images.push_back(gamma(alg, mod, m));
        } catch (const std::exception& e) {
            q_membership = false;
            witness = e.what();
            break;
        }
    }
    rep.add("gamma-images-in-Q", q_membership, witness);
    if (q_membership)
        rep.add("gamma-injective", z_span_rank(images) == static_cast<int>(basis.size()));
    return rep;
}

Report check_chevalley(const ReductiveLieAlgebra& alg, const FiniteModule& mod, int degree) {
    Report rep;
    rep.command = "chevalley";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["degree"] = std::to_string(degree);

    std::vector<int> all_indices;
    for (int i = 0; i < alg.rank(); ++i) all_indices.push_back(i);
    std::vector<int> representatives;
    for (const auto& cls : alg.simple_root_orbit_classes()) representatives.push_back(cls.front());

    std::vector<int> image_dims, criterion_dims, winv_dims;
    for (int d = 0; d <= degree; ++d) {
        const auto sym_inv = sym_invariants_homogeneous(alg, mod, d);
        std::vector<GradedZ> restricted;
        restricted.reserve(sym_inv.size());
        for (const auto& f : sym_inv) restricted.push_back(restrict_to_t(alg, mod, f));

        const int image_dim = graded_span_rank(restricted);
        rep.add("restriction-injective-d" + std::to_string(d), image_dim == static_cast<int>(sym_inv.size()));

        bool contained = true;
        for (const auto& f : restricted)
            if (!satisfies_chevalley_criterion(alg, mod, f, all_indices)) contained = false;
        rep.add("image-satisfies-criterion-d" + std::to_string(d), contained);

        const auto criterion = chevalley_criterion_space(alg, mod, d, all_indices);
        rep.add("dim-equality-d" + std::to_string(d), static_cast<int>(criterion.size()) == image_dim,
                std::to_string(image_dim) + " vs " + std::to_string(criterion.size()));

        const auto criterion_rep = chevalley_criterion_space(alg, mod, d, representatives);
        rep.add("orbit-representatives-suffice-d" + std::to_string(d), criterion_rep.size() == criterion.size());

        const auto winv = w_invariants_homogeneous(alg, mod, d);
        image_dims.push_back(image_dim);
        criterion_dims.push_back(static_cast<int>(criterion.size()));
        winv_dims.push_back(static_cast<int>(winv.size()));
    }
    rep.dims["restricted_invariants"] = image_dims;
    rep.dims["criterion_space"] = criterion_dims;
    rep.dims["w_invariants"] = winv_dims;

    // Graded consistency with the enveloping-algebra side.
    {
        int cumulative = 0;
        bool consistent = true;
        for (int d = 0; d <= degree; ++d) {
            cumulative += image_dims[d];
            const int filtered = static_cast<int>(invariants_upto(alg, mod, d).size());
            if (cumulative != filtered) consistent = false;
        }
        rep.add("graded-consistency-with-filtration", consistent);
    }

    const bool broer = broer_condition(alg, mod);
    rep.inputs["broer_condition"] = broer ? "true" : "false";
    if (broer) {
        bool full = true;
        for (int d = 0; d <= degree; ++d)
            if (winv_dims[d] != image_dims[d]) full = false;
        rep.add("broer-image-is-all-w-invariants", full);
    } else {
        // Exhibit a W-invariant element outside the image.
        std::string witness;
        for (int d = 0; d <= degree && witness.empty(); ++d) {
            if (winv_dims[d] == image_dims[d]) continue;
            const auto sym_inv = sym_invariants_homogeneous(alg, mod, d);
            std::vector<GradedZ> restricted;
            for (const auto& f : sym_inv) restricted.push_back(restrict_to_t(alg, mod, f));
            for (const auto& w : w_invariants_homogeneous(alg, mod, d)) {
                if (!graded_in_span(restricted, w)) {
                    witness = "degree " + std::to_string(d) + ": " + graded_str(mod, w);
                    break;
                }
            }
        }
        rep.add("broer-violation-witness", !witness.empty(), witness);
    }
    return rep;
}

ZElement hc_project_random_strategy(const ReductiveLieAlgebra& alg, const FiniteModule& mod, const BimoduleElement& m,
                                    Rng& rng) {
    const int nc = alg.cartan_dim();
    const int nneg = static_cast<int>(alg.negative_part().size());

    struct Item {
        std::vector<int> word;  // basis indices, arbitrary order
        VecQ vec;               // std coordinates
    };
    std::vector<Item> work;
    for (const auto& [key, c] : m.terms) {
        Item it;
        it.word = pbw_word_of_monomial(alg, key.first);
        it.vec = VecQ::Zero(mod.dimension());
        it.vec(key.second) = c;
        work.push_back(std::move(it));
    }

    ZElement out;
    auto block_of = [&](int basis_index) {
        const int p = pbw_position(alg, basis_index);
        if (p < nneg) return -1;
        if (p < nneg + nc) return 0;
        return 1;
    };

    while (!work.empty()) {
        std::uniform_int_distribution<size_t> pick(0, work.size() - 1);
        const size_t at = pick(rng);
        Item item = std::move(work[at]);
        work.erase(work.begin() + static_cast<long>(at));

        // Applicable rewrites on this word.
        const bool drop_left = !item.word.empty() && block_of(item.word.front()) < 0;
        const bool strip_right = !item.word.empty() && block_of(item.word.back()) > 0;
        std::vector<int> inversions;
        for (size_t t = 0; t + 1 < item.word.size(); ++t)
            if (pbw_position(alg, item.word[t]) > pbw_position(alg, item.word[t + 1]))
                inversions.push_back(static_cast<int>(t));

        std::vector<int> rules;
        if (drop_left) rules.push_back(0);
        if (strip_right) rules.push_back(1);
        if (!inversions.empty()) rules.push_back(2);

        if (rules.empty()) {
            // Pure normal-ordered Cartan word: emit.
            Exponents ce(nc, 0);
            for (int b : item.word) ++ce[pbw_position(alg, b) - nneg];
            TorusPolynomial poly(nc);
            poly.add_term(ce, Rational(1));
            const VecQ wcoords = mod.weight_basis_inverse() * item.vec;
            for (int b = 0; b < mod.dimension(); ++b)
                if (!wcoords(b).is_zero()) out.add(b, TorusFraction(poly * wcoords(b)));
            continue;
        }

        std::uniform_int_distribution<size_t> rpick(0, rules.size() - 1);
        switch (rules[rpick(rng)]) {
            case 0:  // leftmost letter is negative: the term lies in n^- M
                break;
            case 1: {  // strip the rightmost (positive) letter onto the vector
                const int x = item.word.back();
                item.word.pop_back();
                item.vec = mod.action(x) * item.vec;
                work.push_back(std::move(item));
                break;
            }
            default: {  // rewrite a random out-of-order adjacent pair
                std::uniform_int_distribution<size_t> ipick(0, inversions.size() - 1);
                const int t = inversions[ipick(rng)];
                const int a = item.word[t], b = item.word[t + 1];
                Item swapped = item;
                std::swap(swapped.word[t], swapped.word[t + 1]);
                work.push_back(std::move(swapped));
                for (const auto& [k, c] : alg.bracket(a, b)) {
                    Item contracted;
                    contracted.word.assign(item.word.begin(), item.word.begin() + t);
                    contracted.word.push_back(k);
                    contracted.word.insert(contracted.word.end(), item.word.begin() + t + 2, item.word.end());
                    contracted.vec = item.vec * c;
                    work.push_back(std::move(contracted));
                }
                break;
            }
        }
    }
    return out;
}

Report check_projection(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples,
                        int degree) {
    Report rep;
    rep.command = "projection";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["seed"] = std::to_string(seed);

    Rng rng(seed);
    bool idempotent = true, independent = true, degree_ok = true;
    std::string wit_idem, wit_ind;
    for (int s = 0; s < samples; ++s) {
        const BimoduleElement m = random_bimodule_element(rng, alg, mod, degree);
        const ZElement p = hc_project(alg, mod, m);
        if (z_degree(p) > m.degree()) degree_ok = false;
        if (idempotent && !(hc_project(alg, mod, z_to_bimodule(alg, mod, p)) == p)) {
            idempotent = false;
            wit_idem = "sample " + std::to_string(s);
        }
        if (independent && !(hc_project_random_strategy(alg, mod, m, rng) == p)) {
            independent = false;
            wit_ind = "sample " + std::to_string(s);
        }
    }
    rep.add("projection-idempotent", idempotent, wit_idem);
    rep.add("projection-strategy-independent", independent, wit_ind);
    rep.add("projection-preserves-filtration-degree", degree_ok);
    return rep;
}

Report check_q_equivalence(const ReductiveLieAlgebra& alg, const FiniteModule& mod, std::uint64_t seed, int samples,
                           int degree) {
    Report rep;
    rep.command = "q-equivalence";
    rep.inputs["algebra"] = alg.name();
    rep.inputs["module"] = mod.name();
    rep.inputs["seed"] = std::to_string(seed);

    const auto q_basis = q_upto(alg, mod, degree);
    Rng rng(seed);
    bool agree = true;
    int members = 0;
    std::string witness;
    for (int s = 0; s < samples && agree; ++s) {
        ZElement z;
        if (s % 2 == 0 || q_basis.empty()) {
            z = random_z_element(rng, alg, mod, degree, 0, true);
        } else {
            for (const auto& b : q_basis) z.add_scaled(b, random_rational(rng));
        }
        const bool a = in_Q_fixedpoint(alg, mod, z);
        const bool b = in_Q_prop4(alg, mod, z);
        if (a) ++members;
        if (a != b) {
            agree = false;
            witness = "sample " + std::to_string(s) + ": fixedpoint=" + (a ? "true" : "false") +
                      " prop4=" + (b ? "true" : "false") + " on " + z_str(mod, z);
        }
    }
    rep.add("criteria-agree", agree, witness);
    rep.inputs["q_members_seen"] = std::to_string(members);
    return rep;
}

}  // namespace zhc

// Acceptance suite: the eight exact end-to-end criteria, one line each.
// Exit code 0 iff every criterion holds.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <vector>

#include "zhc/checks.hpp"
#include "zhc/presets.hpp"

using namespace zhc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void merge(const Report& rep) {
        for (const auto& c : rep.checks) {
            if (c.pass) continue;
            pass = false;
            detail += (detail.empty() ? "" : "; ") + c.name + (c.witness.empty() ? "" : ": " + c.witness);
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

}  // namespace

int main() {
    const std::uint64_t seed = 2024;
    bool all = true;
    int index = 0;

    auto run = [&](const std::string& name, const std::function<void(Outcome&)>& body) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(out);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << ++index << ". " << name << "  (" << std::fixed
                  << std::setprecision(2) << secs << " s)";
        if (!out.pass) std::cout << "  -- " << out.detail;
        std::cout << "\n";
        all = all && out.pass;
    };

    const auto sl2 = preset_algebra("sl2");
    const auto sl3 = preset_algebra("sl3");
    const auto sl2x2 = preset_algebra("sl2xsl2");
    const auto sl2_adj = preset_module(sl2, "adjoint");
    const auto sl2_triv = preset_module(sl2, "trivial");
    const auto sl3_adj = preset_module(sl3, "adjoint");

    run("gauss hypergeometric identity, j = 0..5, series vs closed form", [&](Outcome& out) {
        out.merge(check_gauss(5));
    });

    run("xi squares: identity on weight zero, conjugation formula off it (sl2, sl3)", [&](Outcome& out) {
        out.merge(check_xi_square(sl2, sl2_adj, seed, 50));
        out.merge(check_xi_square(sl3, sl3_adj, seed + 1, 50));
    });

    run("braid relations: xi1 xi2 xi1 = xi2 xi1 xi2 (sl3), commuting (sl2xsl2)", [&](Outcome& out) {
        out.merge(check_braid(sl3, sl3_adj, seed + 2, 20));
        out.merge(check_braid(sl2x2, preset_module(sl2x2, "adjoint"), seed + 3, 20));
    });

    run("theorem 1 at desk scale: dim tables, injectivity, images in Q", [&](Outcome& out) {
        const auto adj = check_hc(sl2, sl2_adj, 4);
        out.merge(adj);
        out.require(adj.dims.at("invariants") == std::vector<int>({0, 1, 1, 2, 2}),
                    "sl2 adjoint dims differ from (0,1,1,2,2)");
        const auto triv = check_hc(sl2, sl2_triv, 4);
        out.merge(triv);
        out.require(triv.dims.at("invariants") == std::vector<int>({1, 1, 2, 2, 3}),
                    "sl2 trivial dims differ from the classical (1,1,2,2,3)");
        out.merge(check_hc(sl3, sl3_adj, 2));
    });

    run("criterion equivalence: fixed-point vs divisibility on random elements", [&](Outcome& out) {
        out.merge(check_q_equivalence(sl2, sl2_adj, seed + 4, 100, 3));
        out.merge(check_q_equivalence(sl3, sl3_adj, seed + 5, 100, 3));
    });

    run("theorem 2: restricted symmetric invariants = divisibility criterion space", [&](Outcome& out) {
        const auto adj = check_chevalley(sl2, sl2_adj, 4);
        out.merge(adj);
        std::vector<int> cumulative;
        int acc = 0;
        for (int d : adj.dims.at("restricted_invariants")) cumulative.push_back(acc += d);
        out.require(cumulative == std::vector<int>({0, 1, 1, 2, 2}),
                    "sl2 adjoint graded dims do not accumulate to (0,1,1,2,2)");
        out.merge(check_chevalley(sl3, sl3_adj, 3));
    });

    run("broer sufficiency and a violation witness", [&](Outcome& out) {
        out.require(broer_condition(sl2, sl2_adj), "sl2 adjoint should satisfy the Broer condition");
        const auto adj = check_chevalley(sl2, sl2_adj, 4);
        for (const auto& c : adj.checks)
            if (c.name == "broer-image-is-all-w-invariants") out.require(c.pass, c.name);
        const auto bad = preset_module(sl2, "sym4");
        out.require(!broer_condition(sl2, bad), "sl2 sym4 should violate the Broer condition");
        const auto rep = check_chevalley(sl2, bad, 4);
        bool witness = false;
        std::string text;
        for (const auto& c : rep.checks)
            if (c.name == "broer-violation-witness") {
                witness = c.pass;
                text = c.witness;
            }
        out.require(witness, "no W-invariant element outside the restriction image was found");
        if (witness) out.detail += (out.detail.empty() ? "" : "; ") + ("witness " + text);
    });

    run("projection well-definedness: idempotent and strategy independent", [&](Outcome& out) {
        out.merge(check_projection(sl2, sl2_adj, seed + 6, 100, 4));
        out.merge(check_projection(sl3, sl3_adj, seed + 7, 100, 4));
    });

    return all ? 0 : 1;
}

// Acceptance suite: every verification gate of the library, one line per
// criterion, exact arithmetic throughout (tolerance literally zero).
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "minorb/affine.hpp"
#include "minorb/bridge.hpp"
#include "minorb/chevalley.hpp"
#include "minorb/quadform.hpp"
#include "minorb/quiver.hpp"
#include "minorb/suites.hpp"
#include "minorb/weyl.hpp"
#include "minorb/window.hpp"

using namespace minorb;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title, double budget_seconds)
        : number_(number), title_(std::move(title)), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail = "") {
        auto end = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(end - start_).count();
        bool in_budget = budget_ <= 0 || secs <= budget_;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] criterion %d: %s (%.2f s%s)%s%s\n", pass ? "PASS" : "FAIL", number_, title_.c_str(), secs,
                    budget_ > 0 ? ("/" + format_budget()).c_str() : "", detail.empty() ? "" : " -- ", detail.c_str());
    }

  private:
    std::string format_budget() const {
        std::ostringstream os;
        os << budget_ << " s budget";
        return os.str();
    }
    int number_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main() {
    auto total_start = std::chrono::steady_clock::now();
    const SuiteOptions opt{42, 25};

    {
        // 1. Chevalley: [X_i, Y_i] = H_i (4), the 16 Cartan-integer
        // relations with the D4 Cartan matrix, and bracket closure of the
        // 28-element table with integral constants. Exact, < 1 s.
        Criterion c(1, "Chevalley relations and table closure", 1.0);
        ChevalleyReport r = chevalley_relations_report();
        c.finish(r.ok(), std::to_string(r.cases) + " relations");
    }

    {
        // 2. Triality: bracket equivariance of both generators on all
        // 28 x 28 window-basis pairs, the S3 composition table, and the
        // root-label permutation on the 24 root vectors. Exact, < 5 s.
        Criterion c(2, "triality equivariance, S3 table, root permutations", 5.0);
        Report r = suite_triality(opt);
        c.finish(r.ok(), std::to_string(r.cases) + " cases");
    }

    {
        // 3. Kostant: rank(Phi-images + Psi-images) = 106, with the
        // highest-weight square 107, and 300 + 70 + 36 = 406 = C(29,2).
        // Exact rational rank over a 406-column matrix, < 60 s.
        Criterion c(3, "Kostant ranks 106/107 and dimension identity", 60.0);
        KostantRankReport kr = kostant_rank_report(4);
        bool ok = kr.rank_joint == 106 && kr.rank_with_hwv == 107 && kr.dim_v2psi == 300 && kr.dim_dec == 70 &&
                  kr.dim_iso == 36 && kr.dim_sym2 == 406;
        c.finish(ok, "ranks " + std::to_string(kr.rank_joint) + "/" + std::to_string(kr.rank_with_hwv));
    }

    {
        // 4. Bridge: F bijective; F* omega_1 = quiver symplectic form on
        // every coordinate-basis pair; SL2-equivariance on 50 random pairs;
        // N <-> N_1 transfer on 100 samples + 10 negatives. Exact, < 5 s.
        // dim T*V = 16 for n = 3, so bijectivity is full rank 16 over the
        // 120 coordinate-basis pairs.
        Criterion c(4, "bridge: F symplectic bijection, equivariance, N <-> N1", 5.0);
        Report r = suite_bridge(opt);
        c.finish(r.ok(), std::to_string(r.cases) + " cases, F rank 16 = dim T*V");
    }

    {
        // 5. Membership equivalence: the window equations agree with
        // decomposable-and-isotropic through phi on 100 orbit samples and
        // 100 engineered negatives. Exact.
        Criterion c(5, "membership equations <-> orbit closure on 200 points", 0);
        Rng rng(opt.seed);
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            WindowElement A = random_orbit_window(rng);
            ok = min_membership_window(A) && in_min_closure(phi_window(A));
        }
        int negatives = 0;
        Bivector neg_fixed[2] = {Bivector::wedge(4, 1, 8), Bivector::wedge(4, 1, 2) + Bivector::wedge(4, 3, 4)};
        for (const auto& b : neg_fixed) {
            ok = ok && !min_membership_window(phi_window_inv(b));
            ++negatives;
        }
        while (negatives < 100 && ok) {
            Bivector b(4);
            for (int q = 0; q < 2; ++q) {
                Vec v1 = rng.next_vector(8, 2), v2 = rng.next_vector(8, 2);
                b = b + Bivector::of_vectors(v1, v2);
            }
            if (in_min_closure(b)) continue;  // want negatives
            ++negatives;
            ok = !min_membership_window(phi_window_inv(b));
        }
        c.finish(ok, "100 positives + " + std::to_string(negatives) + " negatives");
    }

    {
        // 6. KKS: lambda'-pullback identity and its closed form on 50
        // sampled (point, direction) pairs; the sl2-triple identity
        // kappa(E, y) = 1/2 kappa(E, [y, H]) for 100 random y. Exact.
        Criterion c(6, "KKS pairing identities", 0);
        Report r = suite_kks(opt);
        c.finish(r.ok(), std::to_string(r.cases) + " cases");
    }

    {
        // 7. Weyl: gg = triality for both generators at 25 regular samples;
        // the explicit Z1 and Z2 witness pairs; the braid relation at
        // quotient level on 10 samples. Exact.
        Criterion c(7, "Gelfand-Graev = triality, explicit witnesses, braid", 0);
        Report r = suite_weyl(opt);
        c.finish(r.ok(), std::to_string(r.cases) + " cases");
    }

    {
        // 8. Affinization: xi . lift round trip on 50 (g, X); the
        // C*-compatibility identity at z in {2, 3, 5} on 50 points; the
        // z^2-scaling through the bridge on 25 points. Exact.
        Criterion c(8, "affinization round trips and C*-action", 0);
        Report r = suite_affinize(opt);
        c.finish(r.ok(), std::to_string(r.cases) + " cases");
    }

    {
        // 9. Combinatorics: the flag inequality with unique maximizer for
        // all n <= 8, by enumeration. < 10 s.
        Criterion c(9, "flag inequality for n <= 8", 10.0);
        bool ok = true;
        for (int n = 1; n <= 8; ++n) ok = ok && flag_inequality_check(n);
        c.finish(ok);
    }

    {
        // 10. Determinism: two full verify-all runs with the same seed
        // serialize to identical bytes (elapsed time excluded by design).
        Criterion c(10, "byte-identical reports for equal seeds", 0);
        auto render = [&] {
            std::string out;
            for (const auto& s : all_suites()) out += s.run(opt).to_json(false).dump() + "\n";
            return out;
        };
        std::string first = render(), second = render();
        c.finish(!first.empty() && first == second);
    }

    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
    bool under_wall = total < 300.0;
    if (!under_wall) ++failures;
    std::printf("[%s] full acceptance wall clock %.2f s (< 300 s)\n", under_wall ? "PASS" : "FAIL", total);

    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}

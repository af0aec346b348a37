#pragma once

#include <utility>

#include "minorb/affine.hpp"
#include "minorb/bridge.hpp"
#include "minorb/quiver.hpp"
#include "minorb/window.hpp"

namespace minorb {

// out_k(B) = alpha_k + beta_{k-1} : C^k -> C^{k+1} + C^{k-1}  (stacked),
// in_k(B) = beta_k + (-alpha_{k-1}) : C^{k+1} + C^{k-1} -> C^k (side by side),
// with the k = 1 blocks empty. in_k(B) out_k(B) = lambda_k Id.
std::pair<Mat, Mat> out_in(const QuiverPoint& p, int k);

// The Z_k conditions of the Weyl-action correspondence:
//  (1) all alpha_j, beta_j with j outside {k-1, k} agree,
//  (2) 0 -> C^k -> C^{k+1}+C^{k-1} -> C^k -> 0 is exact through
//      out_k(B'), in_k(B), with the volume normalization
//      out_k(B')(vol_k) ^ in_k(B)^{-1}(vol_k) = vol_{k-1} ^ vol_{k+1},
//  (3) out_k(B') in_k(B') = out_k(B) in_k(B) - lambda_k Id.
// vol_j = e_1 ^ ... ^ e_j throughout. Throws std::domain_error unless both
// points are in N.
bool zk_check(const QuiverPoint& B, const QuiverPoint& Bprime, int k);

// Constructs the Z_k partner of B at vertex k: out' spans ker(in_k(B))
// rescaled for the volume condition, in' solves the condition-(3) system.
// Requires in_k(B) surjective and B in N. The result satisfies
// zk_check(B, result, k).
QuiverPoint sk_partner(const QuiverPoint& B, int k);

// The regular lift: for distinct c_i and A in the orbit closure,
//   alpha_1 = (0, c3-c2)^T,  beta_1 = (0, 1),
//   alpha_2 = (u_3 | u_2/(c3-c2)),  beta_2 = (-u_3^*/(c3-c2) ; u_2^*).
// Throws std::domain_error on repeated c_i (DegenerateC) or when A fails the
// membership equations (NotInOrbit).
QuiverPoint lift_regular(const WindowElement& A);

// A (B, B') pair at vertex k together with the preimage matrix used by the
// volume condition; serialized when reporting counterexamples.
struct ZkWitness {
    int k = 0;
    QuiverPoint B;
    QuiverPoint Bprime;
    Mat preimage;  // a right inverse of in_k(B)

    Json to_json() const;
};

// Assembles the witness data for a candidate pair (the pair need not pass
// zk_check; this is the reporting path).
ZkWitness make_zk_witness(const QuiverPoint& B, const QuiverPoint& Bprime, int k);

enum class WeylGen { s1, s2 };  // s1 = (23) <-> k = 1, s2 = (13) <-> k = 2

// Verifies that the Gelfand-Graev step at k(gen) applied to the lift of A
// lands on the lift of the triality image: zk_check(B, B', k) for the
// proof's explicit B', plus the quotient-level comparison
// xi(sk_partner(B, k)) ~ xi(B').
bool gg_equals_triality(const WindowElement& A, WeylGen gen);

// Random regular orbit element in window coordinates (distinct c_ies),
// built from an exact random isotropic plane.
WindowElement random_regular_window(Rng& rng);

// Random (not necessarily regular) orbit element in window coordinates.
WindowElement random_orbit_window(Rng& rng);

}  // namespace minorb

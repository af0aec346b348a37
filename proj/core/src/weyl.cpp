#include "minorb/weyl.hpp"

#include <stdexcept>

namespace minorb {

namespace {

// Volume-condition target: vol_{k-1} ^ vol_{k+1} against the natural order
// (C^{k+1} block first), i.e. the sign of the block swap (-1)^{(k-1)(k+1)}.
Rat vol_target(int k) { return ((k * k - 1) % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

std::pair<Mat, Mat> out_in(const QuiverPoint& p, int k) {
    p.validate();
    if (k < 1 || k > p.n - 1) throw std::out_of_range("out_in: k out of range");
    Mat beta_km1 = (k >= 2) ? p.beta[k - 2] : Mat::zero(0, k);      // beta_{k-1}: C^k -> C^{k-1}
    Mat alpha_km1 = (k >= 2) ? p.alpha[k - 2] : Mat::zero(k, 0);    // alpha_{k-1}: C^{k-1} -> C^k
    Mat out = Mat::vcat(p.alpha[k - 1], beta_km1);                  // 2k x k
    Mat in = Mat::hcat(p.beta[k - 1], -alpha_km1);                  // k x 2k
    return {out, in};
}

bool zk_check(const QuiverPoint& B, const QuiverPoint& Bprime, int k) {
    auto lamB = in_N(B);
    auto lamP = in_N(Bprime);
    if (!lamB || !lamP) throw std::domain_error("zk_check: both points must lie in N");
    if (B.n != Bprime.n) return false;

    // (1) untouched arrows agree.
    for (int j = 1; j <= B.n - 1; ++j) {
        if (j == k - 1 || j == k) continue;
        if (B.alpha[j - 1] != Bprime.alpha[j - 1] || B.beta[j - 1] != Bprime.beta[j - 1]) return false;
    }

    auto [outB, inB] = out_in(B, k);
    auto [outP, inP] = out_in(Bprime, k);
    const Rat lambda = (*lamB)[k - 1];

    // (2) exactness: out' injective, in surjective, in . out' = 0.
    if (rank(outP) != k || rank(inB) != k) return false;
    if (!(inB * outP).is_zero_matrix()) return false;

    // Volume normalization. Any preimage representative works: two choices
    // differ by im(out') = ker(in), which dies against out'(vol_k).
    auto R = solve(inB, Mat::identity(k));
    if (!R) return false;
    if (det(Mat::hcat(outP, *R)) != vol_target(k)) return false;

    // (3).
    Mat lhs = outP * inP;
    Mat rhs = outB * inB;
    for (int i = 0; i < 2 * k; ++i) rhs.at(i, i) -= lambda;
    return lhs == rhs;
}

QuiverPoint sk_partner(const QuiverPoint& B, int k) {
    auto lamB = in_N(B);
    if (!lamB) throw std::domain_error("sk_partner: point not in N");
    auto [outB, inB] = out_in(B, k);
    if (rank(inB) != k) throw std::domain_error("sk_partner: in_k(B) not surjective");
    const Rat lambda = (*lamB)[k - 1];

    // ker(in) has dimension k; stack a basis as the columns of out'.
    std::vector<Vec> ker = kernel_basis(inB);
    if (static_cast<int>(ker.size()) != k) throw std::logic_error("sk_partner: kernel dimension");
    Mat outP(2 * k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < 2 * k; ++i) outP.at(i, j) = ker[j].at(i, 0);

    // Rescale the first column so the volume condition holds exactly.
    auto R = solve(inB, Mat::identity(k));
    if (!R) throw std::logic_error("sk_partner: surjective map has no right inverse");
    Rat current = det(Mat::hcat(outP, *R));
    if (is_zero(current)) throw std::logic_error("sk_partner: degenerate volume");
    Rat scale = vol_target(k) / current;
    for (int i = 0; i < 2 * k; ++i) outP.at(i, 0) *= scale;

    // in' is the unique solution of out' X = out in - lambda Id; solvable
    // because in . (out in - lambda Id) = 0.
    Mat rhs = outB * inB;
    for (int i = 0; i < 2 * k; ++i) rhs.at(i, i) -= lambda;
    auto X = solve(outP, rhs);
    if (!X) throw std::logic_error("sk_partner: condition-(3) system inconsistent");

    QuiverPoint Bp = B;
    Bp.alpha[k - 1] = outP.submat(0, 0, k + 1, k);
    Bp.beta[k - 1] = X->submat(0, 0, k, k + 1);
    if (k >= 2) {
        Bp.beta[k - 2] = outP.submat(k + 1, 0, k - 1, k);
        Bp.alpha[k - 2] = -X->submat(0, k + 1, k, k - 1);
    }
    if (!in_N(Bp)) throw std::logic_error("sk_partner: partner left N");
    if (!zk_check(B, Bp, k)) throw std::logic_error("sk_partner: zk_check failed on own output");
    return Bp;
}

Json ZkWitness::to_json() const {
    Json j;
    j["k"] = k;
    j["B"] = B.to_json();
    j["Bprime"] = Bprime.to_json();
    j["preimage"] = minorb::to_json(preimage);
    return j;
}

ZkWitness make_zk_witness(const QuiverPoint& B, const QuiverPoint& Bprime, int k) {
    ZkWitness w;
    w.k = k;
    w.B = B;
    w.Bprime = Bprime;
    auto [outB, inB] = out_in(B, k);
    auto R = solve(inB, Mat::identity(k));
    w.preimage = R ? *R : Mat::zero(2 * k, k);
    return w;
}

QuiverPoint lift_regular(const WindowElement& A) {
    A.validate();
    if (A.c[0] == A.c[1] || A.c[1] == A.c[2] || A.c[0] == A.c[2])
        throw std::domain_error("lift_regular: DegenerateC (repeated c_i)");
    if (!min_membership_window(A)) throw std::domain_error("lift_regular: NotInOrbit");
    const Rat d = A.c[2] - A.c[1];

    QuiverPoint p = QuiverPoint::zero(3);
    p.alpha[0].at(1, 0) = d;
    p.beta[0].at(0, 1) = 1;
    for (int r = 0; r < 3; ++r) {
        p.alpha[1].at(r, 0) = A.u[2].at(r, 0);
        p.alpha[1].at(r, 1) = A.u[1].at(r, 0) / d;
        p.beta[1].at(0, r) = -A.ustar[2].at(0, r) / d;
        p.beta[1].at(1, r) = A.ustar[1].at(0, r);
    }
    if (!in_N(p)) throw std::logic_error("lift_regular: lift left N");
    return p;
}

bool gg_equals_triality(const WindowElement& A, WeylGen gen) {
    QuiverPoint B = lift_regular(A);
    const int k = (gen == WeylGen::s1) ? 1 : 2;

    QuiverPoint Bp;
    if (gen == WeylGen::s1) {
        // The proof's rewrite of the triality((23), A) representative with
        // the j = 2 arrows untouched: out_1(B') = (1, 0)^T, in_1(B') = (c2-c3, 0).
        Bp = B;
        Bp.alpha[0] = Mat::zero(2, 1);
        Bp.alpha[0].at(0, 0) = 1;
        Bp.beta[0] = Mat::zero(1, 2);
        Bp.beta[0].at(0, 0) = A.c[1] - A.c[2];
    } else {
        Bp = lift_regular(triality(Perm3::transposition(1, 3), A));
    }

    if (!zk_check(B, Bp, k)) return false;

    // Quotient-level comparison through Xi.
    QuiverPoint partner = sk_partner(B, k);
    return bpoint_eq(xi(partner), xi(Bp));
}

WindowElement random_orbit_window(Rng& rng) {
    // Exact random isotropic plane in eta coordinates: pick x with
    // w(z) + ab = 0, then solve the two linear isotropy conditions for x'.
    for (;;) {
        Vec z = rng.next_vector(3, 3);
        Mat w = rng.next_matrix(1, 3, 3);
        Rat a = rng.next_nonzero_scalar(3);
        Rat b = -(w * z).at(0, 0) / a;

        Vec z2 = rng.next_vector(3, 3);
        Rat a2 = rng.next_nonzero_scalar(3);
        Rat w2_1 = rng.next_scalar(3), w2_2 = rng.next_scalar(3);
        // Unknowns (b2, w2_0):
        //   a2 b2 + z2_0 w2_0 = -(z2_1 w2_1 + z2_2 w2_2)
        //   a  b2 + z_0  w2_0 = -w(z2) - a2 b - (z_1 w2_1 + z_2 w2_2)
        Mat lhs(2, 2);
        lhs.at(0, 0) = a2;
        lhs.at(0, 1) = z2.at(0, 0);
        lhs.at(1, 0) = a;
        lhs.at(1, 1) = z.at(0, 0);
        Mat rhs(2, 1);
        rhs.at(0, 0) = -(z2.at(1, 0) * w2_1 + z2.at(2, 0) * w2_2);
        rhs.at(1, 0) = -(w * z2).at(0, 0) - a2 * b - (z.at(1, 0) * w2_1 + z.at(2, 0) * w2_2);
        if (is_zero(det(lhs))) continue;
        Mat sol = *solve(lhs, rhs);
        Mat w2(1, 3);
        w2.at(0, 0) = sol.at(1, 0);
        w2.at(0, 1) = w2_1;
        w2.at(0, 2) = w2_2;

        Bivector biv = Bivector::of_vectors(eta(z, a, b, w), eta(z2, a2, sol.at(0, 0), w2));
        if (biv.is_zero()) continue;
        if (!in_min_closure(biv)) continue;  // degenerate draw; resample
        return phi_window_inv(biv);
    }
}

WindowElement random_regular_window(Rng& rng) {
    for (;;) {
        WindowElement A = random_orbit_window(rng);
        if (A.c[0] != A.c[1] && A.c[1] != A.c[2] && A.c[0] != A.c[2]) return A;
    }
}

}  // namespace minorb

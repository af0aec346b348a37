#include "minorb/bridge.hpp"

#include <stdexcept>

namespace minorb {

IsoMap bridge_F(const QuiverPoint& p) {
    p.validate();
    if (p.n != 3) throw std::invalid_argument("bridge_F: defined for n = 3");
    const Mat& a1 = p.alpha[0];  // 2 x 1
    const Mat& b1 = p.beta[0];   // 1 x 2
    const Mat& a2 = p.alpha[1];  // 3 x 2
    const Mat& b2 = p.beta[1];   // 2 x 3

    IsoMap f;
    // Column 1 = eta(v1 + (-v2*)), column 2 = eta(v2 + v1*), where
    // v_j = (alpha_2 e_j, -beta_1 e_j) and v_i* = row_i [beta_2 | alpha_1].
    {
        Vec z = a2.column(0);
        Rat a = -b1.at(0, 0);
        Rat b = -a1.at(1, 0);
        Mat w = Rat(-1) * b2.row_vec(1);
        Vec c1 = eta(z, a, b, w);
        for (int r = 0; r < 8; ++r) f.m.at(r, 0) = c1.at(r, 0);
    }
    {
        Vec z = a2.column(1);
        Rat a = -b1.at(0, 1);
        Rat b = a1.at(0, 0);
        Mat w = b2.row_vec(0);
        Vec c2 = eta(z, a, b, w);
        for (int r = 0; r < 8; ++r) f.m.at(r, 1) = c2.at(r, 0);
    }
    return f;
}

QuiverPoint bridge_F_inv(const IsoMap& f) {
    QuiverPoint p = QuiverPoint::zero(3);
    EtaCoords c1 = eta_inv(f.col(0));
    EtaCoords c2 = eta_inv(f.col(1));
    for (int r = 0; r < 3; ++r) {
        p.alpha[1].at(r, 0) = c1.z.at(r, 0);
        p.alpha[1].at(r, 1) = c2.z.at(r, 0);
    }
    p.beta[0].at(0, 0) = -c1.a;
    p.beta[0].at(0, 1) = -c2.a;
    p.alpha[0].at(0, 0) = c2.b;
    p.alpha[0].at(1, 0) = -c1.b;
    for (int j = 0; j < 3; ++j) {
        p.beta[1].at(0, j) = c2.w.at(0, j);
        p.beta[1].at(1, j) = -c1.w.at(0, j);
    }
    return p;
}

Rat omega1(const IsoMap& f, const IsoMap& g) {
    return pairing(f.col(0), g.col(1)) - pairing(f.col(1), g.col(0));
}

Mat mu_sl2(const IsoMap& f) {
    Mat m(2, 2);
    Rat d = pairing(f.col(0), f.col(1));
    m.at(0, 0) = d;
    m.at(0, 1) = pairing(f.col(0), f.col(0));
    m.at(1, 0) = pairing(f.col(1), f.col(1));
    m.at(1, 1) = -d;
    return m;
}

bool in_N1(const IsoMap& f) { return mu_sl2(f).is_zero_matrix(); }

Bivector to_bivector(const IsoMap& f) { return Bivector::of_vectors(f.col(0), f.col(1)); }

IsoMap sl2_act(const Mat& g, const IsoMap& f) {
    if (g.rows() != 2 || g.cols() != 2 || det(g) != 1) throw std::domain_error("sl2_act: need det 1");
    return {f.m * *inverse(g)};
}

QuiverPoint sl2_act_quiver(const Mat& g, const QuiverPoint& p) {
    if (g.rows() != 2 || g.cols() != 2 || det(g) != 1) throw std::domain_error("sl2_act_quiver: need det 1");
    if (p.n != 3) throw std::invalid_argument("sl2_act_quiver: n = 3 only");
    Mat gi = *inverse(g);
    QuiverPoint r = p;
    r.alpha[0] = g * p.alpha[0];
    r.beta[0] = p.beta[0] * gi;
    r.alpha[1] = p.alpha[1] * gi;
    r.beta[1] = g * p.beta[1];
    return r;
}

Rat lambda_prime(const IsoMap& f, const IsoMap& x) {
    return pairing(f.col(0), x.col(1)) - pairing(f.col(1), x.col(0));
}

}  // namespace minorb

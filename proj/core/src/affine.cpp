#include "minorb/affine.hpp"

#include <stdexcept>

namespace minorb {

void BPoint::validate() const {
    if (g.rows() != g.cols() || X.rows() != X.cols() || g.rows() != X.rows()) throw std::invalid_argument("BPoint: shapes");
    if (det(g) != 1) throw std::invalid_argument("BPoint: det g != 1");
    if (!X.is_upper_triangular() || !is_zero(X.trace())) throw std::invalid_argument("BPoint: X not in b");
}

Json BPoint::to_json() const {
    Json j;
    j["g"] = minorb::to_json(g);
    j["X"] = minorb::to_json(X);
    return j;
}

Mat gamma_proj(const Mat& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("gamma_proj: not square");
    Mat r = x;
    Rat t = x.trace() / x.rows();
    for (int i = 0; i < x.rows(); ++i) r.at(i, i) -= t;
    return r;
}

namespace {

Mat beta0(int k) {  // (0_{k,1} | Id_k), k x (k+1)
    Mat b(k, k + 1);
    for (int i = 0; i < k; ++i) b.at(i, i + 1) = 1;
    return b;
}

}  // namespace

std::vector<Mat> normalize_betas(const QuiverPoint& p) {
    p.validate();
    if (!is_surjective_part(p)) throw std::domain_error("normalize_betas: some beta_k is not surjective");
    std::vector<Mat> g;
    g.push_back(Mat::identity(1));
    for (int k = 1; k <= p.n - 1; ++k) {
        // beta0_k g_{k+1} = g_k beta_k: rows 2..k+1 of g_{k+1} are forced;
        // prepend the lexicographically first standard basis row keeping the
        // matrix invertible, then scale that row so det = 1.
        Mat forced = g.back() * p.beta[k - 1];  // k x (k+1)
        Mat gk1;
        bool found = false;
        for (int e = 0; e <= k && !found; ++e) {
            Mat row = Mat::zero(1, k + 1);
            row.at(0, e) = 1;
            Mat candidate = Mat::vcat(row, forced);
            Rat d = det(candidate);
            if (!is_zero(d)) {
                row.at(0, e) = 1 / d;
                gk1 = Mat::vcat(row, forced);
                found = true;
            }
        }
        if (!found) throw std::logic_error("normalize_betas: completion failed despite surjectivity");
        g.push_back(gk1);
    }
    return g;
}

BPoint xi(const QuiverPoint& p) {
    auto lambdas = in_N(p);
    if (!lambdas) throw std::domain_error("xi: point is not in N");
    std::vector<Mat> g = normalize_betas(p);
    const Mat& gn = g.back();
    Mat gn_inv = *inverse(gn);
    Mat X = gamma_proj(gn * p.alpha[p.n - 2] * p.beta[p.n - 2] * gn_inv);
    if (!X.is_upper_triangular()) throw std::logic_error("xi: Gamma-image not upper triangular (bug trap)");
    BPoint b{gn_inv, X};
    b.validate();
    return b;
}

QuiverPoint lift_from_bpoint(const Mat& g, const Mat& X) {
    const int n = g.rows();
    if (X.rows() != n || X.cols() != n) throw std::invalid_argument("lift_from_bpoint: shapes");
    if (!X.is_upper_triangular() || !is_zero(X.trace())) throw std::invalid_argument("lift_from_bpoint: X not in b");
    if (det(g) != 1) throw std::invalid_argument("lift_from_bpoint: det g != 1");
    QuiverPoint p = QuiverPoint::zero(n);

    // iota embeds C^{n-1} into the last n-1 coordinates.
    Mat iota(n, n - 1);
    for (int i = 1; i < n; ++i) iota.at(i, i - 1) = 1;
    Mat shifted = X;
    Rat x11 = X.at(0, 0);
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= x11;
    p.alpha[n - 2] = g * shifted * iota;
    p.beta[n - 2] = beta0(n - 1) * *inverse(g);
    for (int k = 1; k <= n - 2; ++k) p.beta[k - 1] = beta0(k);

    // Downward recursion on the scalar condition: alpha_{k-1} beta0_{k-1} =
    // beta_k alpha_k - lambda_k Id, and the right-hand side's first column
    // must vanish, forcing lambda_k = its (1,1) entry.
    for (int k = n - 1; k >= 2; --k) {
        Mat rhs = p.beta[k - 1] * p.alpha[k - 1];
        Rat lam = rhs.at(0, 0);
        for (int i = 0; i < k; ++i) rhs.at(i, i) -= lam;
        for (int i = 0; i < k; ++i)
            if (!is_zero(rhs.at(i, 0))) throw std::logic_error("lift_from_bpoint: forced column does not vanish");
        p.alpha[k - 2] = rhs.submat(0, 1, k, k - 1);
    }
    if (!in_N(p)) throw std::logic_error("lift_from_bpoint: result not in N");
    return p;
}

bool bpoint_eq(const BPoint& a, const BPoint& b) {
    a.validate();
    b.validate();
    if (a.g.rows() != b.g.rows()) return false;
    Mat u = *inverse(b.g) * a.g;
    if (!u.is_upper_unitriangular()) return false;
    return b.X == u * a.X * *inverse(u);
}

Sl2Triple principal_triple(int k) {
    if (k < 2) throw std::out_of_range("principal_triple: k >= 2");
    Sl2Triple t{Mat(k, k), Mat(k, k), Mat(k, k)};
    for (int j = 0; j < k - 1; ++j) t.e.at(j, j + 1) = 1;
    for (int j = 0; j < k; ++j) t.h.at(j, j) = k - 1 - 2 * j;
    for (int j = 1; j < k; ++j) t.f.at(j, j - 1) = Rat(static_cast<long>(j) * (k - j));
    return t;
}

Mat gamma_z(const Rat& z, int n) {
    if (is_zero(z)) throw std::domain_error("gamma_z: z = 0");
    Mat m(n, n);
    for (int j = 0; j < n; ++j) m.at(j, j) = rat_pow(z, n - 1 - 2 * j);
    return m;
}

QuiverPoint cstar_act(const Rat& z, const QuiverPoint& p) {
    if (is_zero(z)) throw std::domain_error("cstar_act: z = 0");
    return z * p;
}

}  // namespace minorb

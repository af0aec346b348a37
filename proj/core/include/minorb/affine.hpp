#pragma once

#include <vector>

#include "minorb/quiver.hpp"

namespace minorb {

// Point of SL_n x_U b: g with det 1 and X upper triangular traceless.
struct BPoint {
    Mat g;
    Mat X;

    void validate() const;
    Json to_json() const;
};

// Gamma(X) = X - (1/n) Tr(X) Id.
Mat gamma_proj(const Mat& x);

// Deterministic (g_1, ..., g_n), g_1 = 1, det g_k = 1, with
// g_k beta_k g_{k+1}^{-1} = beta0_k = (0 | Id). Requires all beta_k
// surjective; throws std::domain_error otherwise.
std::vector<Mat> normalize_betas(const QuiverPoint& p);

// Xi([alpha, beta]) = [g_n^{-1}, Gamma(g_n alpha_{n-1} beta_{n-1} g_n^{-1})].
// Requires p in N with surjective betas; throws std::logic_error if the
// Gamma-image fails to be upper triangular (internal consistency trap).
BPoint xi(const QuiverPoint& p);

// The recursive section of xi: alpha_{n-1} = g (X - x11 Id) iota,
// beta_{n-1} = beta0 g^{-1}, beta_k = beta0_k, remaining alphas forced by
// the scalar condition. Requires X upper triangular traceless and det g = 1.
QuiverPoint lift_from_bpoint(const Mat& g, const Mat& X);

// Equality in SL_n x_U b: true iff u = b.g^{-1} a.g is upper unitriangular
// and b.X = u a.X u^{-1}.
bool bpoint_eq(const BPoint& a, const BPoint& b);

// Principal sl_2 triple (e_k, h_k, f_k) in sl_k; f_k has subdiagonal j(k-j).
struct Sl2Triple {
    Mat e, h, f;
};
Sl2Triple principal_triple(int k);

// gamma(z) = z^{h_n} = diag(z^{n-1}, z^{n-3}, ..., z^{-(n-1)}); z != 0.
Mat gamma_z(const Rat& z, int n);

// z . (alpha, beta) = (z alpha, z beta); z != 0.
QuiverPoint cstar_act(const Rat& z, const QuiverPoint& p);

}  // namespace minorb

#pragma once

#include "minorb/bivector.hpp"
#include "minorb/eta.hpp"
#include "minorb/quiver.hpp"

namespace minorb {

// Hamiltonian-reduction presentation of the minimal orbit closure:
// f in Hom(C^2, C^8) as an 8 x 2 matrix, columns f(e1), f(e2).
struct IsoMap {
    Mat m{8, 2};

    Vec col(int j) const { return m.column(j); }
    bool operator==(const IsoMap& o) const { return m == o.m; }

    Json to_json() const { return minorb::to_json(m); }
    static IsoMap from_json(const Json& j) { return {mat_from_json(j)}; }
};

// The linear map F = F1 ∘ F0 of the n = 3 bridge:
// F0 sends (alpha, beta) to (alpha_2 + (-beta_1), beta_2 + alpha_1) on
// C^2 <-> C^3 + C, F1 shuffles (v1+v2)+(v1*+v2*) |-> (v1+(-v2*))+(v2+v1*),
// and eta identifies C^4 + (C^4)^* with C^8. Throws on n != 3.
IsoMap bridge_F(const QuiverPoint& p);

// Exact inverse of F (the three steps are invertible).
QuiverPoint bridge_F_inv(const IsoMap& f);

// omega_1(f, g) = (f(e1), g(e2)) - (f(e2), g(e1)).
Rat omega1(const IsoMap& f, const IsoMap& g);

// mu_SL2(f) = [[(f1,f2), (f1,f1)], [(f2,f2), -(f1,f2)]].
Mat mu_sl2(const IsoMap& f);

// N_1: f isotropic, i.e. mu_SL2(f) = 0.
bool in_N1(const IsoMap& f);

// Quotient map to the bivector model: f |-> f(e1) ^ f(e2).
Bivector to_bivector(const IsoMap& f);

// Left SL2 actions: f |-> f ∘ g^{-1} and the matching quiver-side action
// alpha_1 |-> g alpha_1, beta_1 |-> beta_1 g^{-1}, alpha_2 |-> alpha_2 g^{-1},
// beta_2 |-> g beta_2. Throw std::domain_error unless det g = 1.
IsoMap sl2_act(const Mat& g, const IsoMap& f);
QuiverPoint sl2_act_quiver(const Mat& g, const QuiverPoint& p);

// lambda'_{v1+v2}(x1+x2) = (v1, x2) - (v2, x1) with v_i = f(e_i), x_i = x(e_i).
Rat lambda_prime(const IsoMap& f, const IsoMap& x);

}  // namespace minorb

#pragma once

#include <array>

#include "minorb/bivector.hpp"
#include "minorb/chevalley.hpp"
#include "minorb/eta.hpp"

namespace minorb {

// The sl3-window coordinates on so_8: (M, c, u, u*) with M in sl3,
// c = (c1, c2, c3) summing to zero, u_i in C^3 and u_i^* in (C^3)^*.
struct WindowElement {
    Mat M{3, 3};
    std::array<Rat, 3> c{};
    std::array<Vec, 3> u{Vec(3, 1), Vec(3, 1), Vec(3, 1)};
    std::array<Mat, 3> ustar{Mat(1, 3), Mat(1, 3), Mat(1, 3)};

    // Throws std::invalid_argument unless Tr M = 0 and c1 + c2 + c3 = 0.
    void validate() const;

    bool is_zero() const;
    WindowElement operator+(const WindowElement& o) const;
    WindowElement operator-(const WindowElement& o) const;
    friend WindowElement operator*(const Rat& s, const WindowElement& w);
    bool operator==(const WindowElement& o) const;

    Json to_json() const;
    static WindowElement from_json(const Json& j);
};

// Permutation of {1, 2, 3}. image(i) is 1-based.
class Perm3 {
  public:
    Perm3() : p_{1, 2, 3} {}
    explicit Perm3(std::array<int, 3> images);
    static Perm3 transposition(int a, int b);

    int image(int i) const { return p_[i - 1]; }
    Perm3 inverse() const;
    // (s * t)(i) = s(t(i)).
    Perm3 operator*(const Perm3& o) const;
    bool operator==(const Perm3& o) const { return p_ == o.p_; }

    static const std::array<Perm3, 6>& all();

  private:
    std::array<int, 3> p_;
};

// The linear isomorphism phi onto so_8 = Lambda^2 C^8, and its
// exact inverse. Conventions (hwv scales of the V_i / V_i^* identifications
// and the sign of phi_2) are fixed in window.cpp; see the notes there.
Bivector phi_window(const WindowElement& w);
WindowElement phi_window_inv(const Bivector& b);

// The 28 basis window elements in the coordinate order used throughout
// (M: E12, E13, E21, E23, E31, E32, E11-E22, E22-E33; c: (1,0,-1), (0,1,-1);
// u_i e_j; u_i^* e_j^*).
const std::array<WindowElement, 28>& window_basis_elements();

// Closed-form Lie bracket in window coordinates. Satisfies
//   kBracketTransportSign * phi_window(window_bracket(A, B))
//     = bracket(phi_window(A), phi_window(B))
// for the single global sign below, verified on all 28 x 28 basis pairs.
WindowElement window_bracket(const WindowElement& a, const WindowElement& b);
extern const int kBracketTransportSign;

// Action of a window element on a vector (v, a, b, v*) in C^3+C+C^*+(C^3)^*,
// the closed form of the so_8 action on C^8 through eta:
//   eta(window_act_vector(A, x)) = kBracketTransportSign * biv_to_matrix(phi_window(A)) * eta(x).
EtaCoords window_act_vector(const WindowElement& a, const EtaCoords& x);

// Triality: M fixed, c and the u/u* subscripts permuted by place,
// x_i |-> x_{sigma^{-1}(i)}.
WindowElement triality(const Perm3& sigma, const WindowElement& a);

// (1/2) Tr(AB) in closed form; equals kks_lambda(phi A, phi B) / 2 exactly.
Rat window_killing(const WindowElement& a, const WindowElement& b);

// (1/2) Tr(A [B, C]) in closed form; equals window_killing(A, window_bracket(B, C)).
Rat cartan_three_form(const WindowElement& a, const WindowElement& b, const WindowElement& c);

// The minimal-orbit membership equations in window coordinates
// (seven polynomial families). Exactly equivalent to
// in_min_closure(phi_window(A)).
bool min_membership_window(const WindowElement& a);

// cross(u, v) as a row covector (Lambda^2 C^3 = (C^3)^* with e1^e2^e3 = 1),
// and cross of two rows as a column (Lambda^2 (C^3)^* = C^3).
Mat cross_cols(const Vec& u, const Vec& v);
Vec cross_rows(const Mat& x, const Mat& y);

}  // namespace minorb

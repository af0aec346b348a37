#pragma once

// Internal machinery for the window coordinates. The V_i / V_i^* blocks are
// built at runtime by equivariant lowering chains from highest-weight
// anchors, so the only convention freedom is the scale of each anchor and
// the sign of phi_2. window.cpp freezes those; the conventions test pins
// them against the fixed basis lists and the quiver-side identities.

#include <array>

#include "minorb/linalg.hpp"
#include "minorb/window.hpp"

namespace minorb::detail {

struct WindowTables {
    std::array<int, 3> u_sign{1, 1, 1};
    std::array<int, 3> ustar_sign{1, 1, 1};
    int phi2_sign = 1;

    std::array<Vec, 3> ez;  // eta(e_i), e_i in C^3
    Vec ea{8, 1}, eb{8, 1};
    std::array<Vec, 3> ew;  // eta(e_i^*)

    // Image of e_i (x) e_j^* under Lambda^2 eta (the gl_3 block).
    std::array<std::array<Bivector, 3>, 3> sl3;
    Bivector trace_part;  // image of Id_{C^3} (= H2 + H3 - H1)
    Bivector h4;          // image of 1 ^ 1^*   (= H4)

    // V[i][j]: image of e_{j+1} in the i-th C^3 copy;
    // Vstar[i][j]: image of e_{j+1}^* in the i-th dual copy.
    std::array<std::array<Bivector, 3>, 3> V;
    std::array<std::array<Bivector, 3>, 3> Vstar;

    Mat from_coords{28, 28};  // window coordinates -> flattened bivector
    Mat to_coords{28, 28};    // exact inverse
};

WindowTables build_window_tables(std::array<int, 3> u_sign, std::array<int, 3> ustar_sign, int phi2_sign);

// phi_2 with the tables' sign: phi2_sign * (-c1 * trace_part + (c3 - c2) * h4).
Bivector phi2_with(const WindowTables& t, const std::array<Rat, 3>& c);

Bivector phi_with(const WindowTables& t, const WindowElement& w);
WindowElement inv_with(const WindowTables& t, const Bivector& b);

// Flatten a bivector over the 28 pairs (i < j) in lexicographic order.
Mat flatten28(const Bivector& b);

const WindowTables& tables();  // the frozen production tables

}  // namespace minorb::detail

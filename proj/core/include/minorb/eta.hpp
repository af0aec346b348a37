#pragma once

#include "minorb/matrix.hpp"

namespace minorb {

// The isometry eta : C^3 + C + C^* + (C^3)^* -> C^8, defined by
//   eta(z, a, b, w) = z1 e2 + z2 e3 - z3 e8 + a e4 + b e5 - w3 e1 + w2 e6 + w1 e7.
// z is a column vector, w a covector (row); the natural pairing
// <(z,a),(b,w)> = w(z) + a b corresponds to the split pairing on C^8.
inline Vec eta(const Vec& z, const Rat& a, const Rat& b, const Mat& w) {
    if (z.rows() != 3 || z.cols() != 1 || w.rows() != 1 || w.cols() != 3) throw std::invalid_argument("eta: shapes");
    Vec v(8, 1);
    v.at(1, 0) = z.at(0, 0);
    v.at(2, 0) = z.at(1, 0);
    v.at(7, 0) = -z.at(2, 0);
    v.at(3, 0) = a;
    v.at(4, 0) = b;
    v.at(0, 0) = -w.at(0, 2);
    v.at(5, 0) = w.at(0, 1);
    v.at(6, 0) = w.at(0, 0);
    return v;
}

struct EtaCoords {
    Vec z{3, 1};
    Rat a;
    Rat b;
    Mat w{1, 3};
};

inline EtaCoords eta_inv(const Vec& v) {
    if (v.rows() != 8 || v.cols() != 1) throw std::invalid_argument("eta_inv: shape");
    EtaCoords c;
    c.z.at(0, 0) = v.at(1, 0);
    c.z.at(1, 0) = v.at(2, 0);
    c.z.at(2, 0) = -v.at(7, 0);
    c.a = v.at(3, 0);
    c.b = v.at(4, 0);
    c.w.at(0, 2) = -v.at(0, 0);
    c.w.at(0, 1) = v.at(5, 0);
    c.w.at(0, 0) = v.at(6, 0);
    return c;
}

}  // namespace minorb

#include "minorb/window.hpp"

#include <stdexcept>

#include "window_detail.hpp"

namespace minorb {

namespace detail {

WindowTables build_window_tables(std::array<int, 3> u_sign, std::array<int, 3> ustar_sign, int phi2_sign) {
    WindowTables t;
    t.u_sign = u_sign;
    t.ustar_sign = ustar_sign;
    t.phi2_sign = phi2_sign;

    for (int i = 0; i < 3; ++i) {
        Vec z(3, 1);
        z.at(i, 0) = 1;
        t.ez[i] = eta(z, Rat(0), Rat(0), Mat(1, 3));
        Mat w(1, 3);
        w.at(0, i) = 1;
        t.ew[i] = eta(Vec(3, 1), Rat(0), Rat(0), w);
    }
    t.ea = eta(Vec(3, 1), Rat(1), Rat(0), Mat(1, 3));
    t.eb = eta(Vec(3, 1), Rat(0), Rat(1), Mat(1, 3));

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.sl3[i][j] = Bivector::of_vectors(t.ez[i], t.ew[j]);
    t.trace_part = t.sl3[0][0] + t.sl3[1][1] + t.sl3[2][2];
    t.h4 = Bivector::of_vectors(t.ea, t.eb);

    // Highest-weight anchors: the first listed basis vector of each block,
    // V_i anchors sit at e_1, V_i^* anchors at e_3^*.
    auto W = [](int i, int j) { return Bivector::wedge(4, i, j); };
    const Bivector v_anchor[3] = {-W(1, 6), W(2, 5), W(2, 4)};        // -X_{a1+a2}, X_{a2+a3}, X_{a2+a4}
    const Bivector vs_anchor[3] = {W(2, 3), W(1, 4), W(1, 5)};        // X_{a2+a3+a4}, X_{a1+a2+a4}, X_{a1+a2+a3}

    // Lowering chains. On C^3: e2 = E21 e1, e3 = E32 e2. On (C^3)^*
    // (contragredient action): e2^* = -E32 . e3^*, e1^* = -E21 . e2^*.
    for (int i = 0; i < 3; ++i) {
        t.V[i][0] = Rat(u_sign[i]) * v_anchor[i];
        t.V[i][1] = bracket(t.sl3[1][0], t.V[i][0]);
        t.V[i][2] = bracket(t.sl3[2][1], t.V[i][1]);
        t.Vstar[i][2] = Rat(ustar_sign[i]) * vs_anchor[i];
        t.Vstar[i][1] = -bracket(t.sl3[2][1], t.Vstar[i][2]);
        t.Vstar[i][0] = -bracket(t.sl3[1][0], t.Vstar[i][1]);
    }

    // Coordinate matrix in the order [M(8) | c(2) | u(9) | ustar(9)].
    auto put = [&t](int col, const Bivector& b) {
        Mat f = flatten28(b);
        for (int r = 0; r < 28; ++r) t.from_coords.at(r, col) = f.at(r, 0);
    };
    put(0, t.sl3[0][1]);
    put(1, t.sl3[0][2]);
    put(2, t.sl3[1][0]);
    put(3, t.sl3[1][2]);
    put(4, t.sl3[2][0]);
    put(5, t.sl3[2][1]);
    put(6, t.sl3[0][0] - t.sl3[1][1]);
    put(7, t.sl3[1][1] - t.sl3[2][2]);
    put(8, phi2_with(t, {Rat(1), Rat(0), Rat(-1)}));
    put(9, phi2_with(t, {Rat(0), Rat(1), Rat(-1)}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) put(10 + 3 * i + j, t.V[i][j]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) put(19 + 3 * i + j, t.Vstar[i][j]);

    auto inv = inverse(t.from_coords);
    if (!inv) throw std::logic_error("window tables: phi is not bijective with these conventions");
    t.to_coords = *inv;
    return t;
}

Bivector phi2_with(const WindowTables& t, const std::array<Rat, 3>& c) {
    return Rat(t.phi2_sign) * ((-c[0]) * t.trace_part + (c[2] - c[1]) * t.h4);
}

Bivector phi_with(const WindowTables& t, const WindowElement& w) {
    w.validate();
    Bivector out(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!is_zero(w.M.at(i, j))) out = out + w.M.at(i, j) * t.sl3[i][j];
    out = out + phi2_with(t, w.c);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!is_zero(w.u[i].at(j, 0))) out = out + w.u[i].at(j, 0) * t.V[i][j];
            if (!is_zero(w.ustar[i].at(0, j))) out = out + w.ustar[i].at(0, j) * t.Vstar[i][j];
        }
    return out;
}

Mat flatten28(const Bivector& b) {
    if (b.m() != 4) throw std::invalid_argument("flatten28: m must be 4");
    Mat f(28, 1);
    int r = 0;
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) f.at(r++, 0) = b.coeff(i, j);
    return f;
}

WindowElement inv_with(const WindowTables& t, const Bivector& b) {
    Mat x = t.to_coords * flatten28(b);
    WindowElement w;
    w.M.at(0, 1) = x.at(0, 0);
    w.M.at(0, 2) = x.at(1, 0);
    w.M.at(1, 0) = x.at(2, 0);
    w.M.at(1, 2) = x.at(3, 0);
    w.M.at(2, 0) = x.at(4, 0);
    w.M.at(2, 1) = x.at(5, 0);
    w.M.at(0, 0) = x.at(6, 0);
    w.M.at(1, 1) = x.at(7, 0) - x.at(6, 0);
    w.M.at(2, 2) = -x.at(7, 0);
    w.c = {x.at(8, 0), x.at(9, 0), -x.at(8, 0) - x.at(9, 0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            w.u[i].at(j, 0) = x.at(10 + 3 * i + j, 0);
            w.ustar[i].at(0, j) = x.at(19 + 3 * i + j, 0);
        }
    return w;
}

// ---------------------------------------------------------------------------
// Frozen conventions. The hwv scales and the phi_2 sign are the unique
// assignment under which the whole Weyl-action machine closes: the regular
// lift lies in N with lambda = (c3-c2, c1-c3), the bridge round-trips,
// u_i^*(u_i) = (c_i-c_j)(c_i-c_k) on the orbit, and both explicit Z_1/Z_2
// witness computations check out (the Z_2 witness separates the residual
// two-fold ambiguity in the V_1 scales).
// ---------------------------------------------------------------------------
const WindowTables& tables() {
    static const WindowTables t = build_window_tables({1, 1, -1}, {-1, -1, 1}, -1);
    return t;
}

}  // namespace detail

void WindowElement::validate() const {
    if (M.rows() != 3 || M.cols() != 3) throw std::invalid_argument("WindowElement: M shape");
    if (!minorb::is_zero(M.trace())) throw std::invalid_argument("WindowElement: Tr M != 0");
    if (!minorb::is_zero(c[0] + c[1] + c[2])) throw std::invalid_argument("WindowElement: c does not sum to 0");
    for (int i = 0; i < 3; ++i) {
        if (u[i].rows() != 3 || u[i].cols() != 1) throw std::invalid_argument("WindowElement: u shape");
        if (ustar[i].rows() != 1 || ustar[i].cols() != 3) throw std::invalid_argument("WindowElement: ustar shape");
    }
}

bool WindowElement::is_zero() const {
    if (!M.is_zero_matrix()) return false;
    for (int i = 0; i < 3; ++i)
        if (!minorb::is_zero(c[i]) || !u[i].is_zero_matrix() || !ustar[i].is_zero_matrix()) return false;
    return true;
}

WindowElement WindowElement::operator+(const WindowElement& o) const {
    WindowElement r = *this;
    r.M = r.M + o.M;
    for (int i = 0; i < 3; ++i) {
        r.c[i] += o.c[i];
        r.u[i] = r.u[i] + o.u[i];
        r.ustar[i] = r.ustar[i] + o.ustar[i];
    }
    return r;
}

WindowElement WindowElement::operator-(const WindowElement& o) const { return *this + Rat(-1) * o; }

WindowElement operator*(const Rat& s, const WindowElement& w) {
    WindowElement r = w;
    r.M = s * r.M;
    for (int i = 0; i < 3; ++i) {
        r.c[i] *= s;
        r.u[i] = s * r.u[i];
        r.ustar[i] = s * r.ustar[i];
    }
    return r;
}

bool WindowElement::operator==(const WindowElement& o) const {
    return M == o.M && c == o.c && u == o.u && ustar == o.ustar;
}

Json WindowElement::to_json() const {
    Json j;
    j["M"] = minorb::to_json(M);
    Json cj = Json::array();
    for (const auto& x : c) cj.push_back(rat_to_string(x));
    j["c"] = std::move(cj);
    Json uj = Json::array(), usj = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array(), srow = Json::array();
        for (int k = 0; k < 3; ++k) {
            row.push_back(rat_to_string(u[i].at(k, 0)));
            srow.push_back(rat_to_string(ustar[i].at(0, k)));
        }
        uj.push_back(std::move(row));
        usj.push_back(std::move(srow));
    }
    j["u"] = std::move(uj);
    j["ustar"] = std::move(usj);
    return j;
}

WindowElement WindowElement::from_json(const Json& j) {
    WindowElement w;
    w.M = mat_from_json(j.at("M"));
    for (int i = 0; i < 3; ++i) w.c[i] = rat_from_string(j.at("c").at(i).get<std::string>());
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            w.u[i].at(k, 0) = rat_from_string(j.at("u").at(i).at(k).get<std::string>());
            w.ustar[i].at(0, k) = rat_from_string(j.at("ustar").at(i).at(k).get<std::string>());
        }
    w.validate();
    return w;
}

Perm3::Perm3(std::array<int, 3> images) : p_(images) {
    bool seen[4] = {};
    for (int v : p_) {
        if (v < 1 || v > 3 || seen[v]) throw std::invalid_argument("Perm3: not a bijection");
        seen[v] = true;
    }
}

Perm3 Perm3::transposition(int a, int b) {
    std::array<int, 3> p{1, 2, 3};
    std::swap(p[a - 1], p[b - 1]);
    return Perm3(p);
}

Perm3 Perm3::inverse() const {
    std::array<int, 3> q{};
    for (int i = 1; i <= 3; ++i) q[p_[i - 1] - 1] = i;
    return Perm3(q);
}

Perm3 Perm3::operator*(const Perm3& o) const {
    std::array<int, 3> q{};
    for (int i = 1; i <= 3; ++i) q[i - 1] = p_[o.p_[i - 1] - 1];
    return Perm3(q);
}

const std::array<Perm3, 6>& Perm3::all() {
    static const std::array<Perm3, 6> ps = {
        Perm3(), Perm3::transposition(1, 2), Perm3::transposition(1, 3), Perm3::transposition(2, 3),
        Perm3({2, 3, 1}), Perm3({3, 1, 2})};
    return ps;
}

Bivector phi_window(const WindowElement& w) { return detail::phi_with(detail::tables(), w); }

WindowElement phi_window_inv(const Bivector& b) { return detail::inv_with(detail::tables(), b); }

const std::array<WindowElement, 28>& window_basis_elements() {
    static const std::array<WindowElement, 28> basis = [] {
        std::array<WindowElement, 28> out;
        auto mk_m = [](int i, int j) {
            WindowElement w;
            w.M.at(i, j) = 1;
            return w;
        };
        out[0] = mk_m(0, 1);
        out[1] = mk_m(0, 2);
        out[2] = mk_m(1, 0);
        out[3] = mk_m(1, 2);
        out[4] = mk_m(2, 0);
        out[5] = mk_m(2, 1);
        WindowElement d1, d2;
        d1.M.at(0, 0) = 1;
        d1.M.at(1, 1) = -1;
        d2.M.at(1, 1) = 1;
        d2.M.at(2, 2) = -1;
        out[6] = d1;
        out[7] = d2;
        WindowElement c1, c2;
        c1.c = {Rat(1), Rat(0), Rat(-1)};
        c2.c = {Rat(0), Rat(1), Rat(-1)};
        out[8] = c1;
        out[9] = c2;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                WindowElement wu, ws;
                wu.u[i].at(j, 0) = 1;
                ws.ustar[i].at(0, j) = 1;
                out[10 + 3 * i + j] = wu;
                out[19 + 3 * i + j] = ws;
            }
        return out;
    }();
    return basis;
}

Mat cross_cols(const Vec& u, const Vec& v) {
    Mat w(1, 3);
    w.at(0, 0) = u.at(1, 0) * v.at(2, 0) - u.at(2, 0) * v.at(1, 0);
    w.at(0, 1) = u.at(2, 0) * v.at(0, 0) - u.at(0, 0) * v.at(2, 0);
    w.at(0, 2) = u.at(0, 0) * v.at(1, 0) - u.at(1, 0) * v.at(0, 0);
    return w;
}

Vec cross_rows(const Mat& x, const Mat& y) {
    Vec v(3, 1);
    v.at(0, 0) = x.at(0, 1) * y.at(0, 2) - x.at(0, 2) * y.at(0, 1);
    v.at(1, 0) = x.at(0, 2) * y.at(0, 0) - x.at(0, 0) * y.at(0, 2);
    v.at(2, 0) = x.at(0, 0) * y.at(0, 1) - x.at(0, 1) * y.at(0, 0);
    return v;
}

WindowElement triality(const Perm3& sigma, const WindowElement& a) {
    a.validate();
    Perm3 inv = sigma.inverse();
    WindowElement r = a;
    for (int i = 1; i <= 3; ++i) {
        r.c[i - 1] = a.c[inv.image(i) - 1];
        r.u[i - 1] = a.u[inv.image(i) - 1];
        r.ustar[i - 1] = a.ustar[inv.image(i) - 1];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Closed-form bracket, vector action, Killing form, Cartan three form and
// membership equations. The per-family constants below are forced by the
// frozen identification scales; each is verified against the transport
// oracle in tests/test_window.cpp.
// ---------------------------------------------------------------------------

namespace {

// Closed-form family coefficients under the frozen identification scales.
// Each was measured against the transport oracle
//     inv(bracket(phi A, phi B))
// on basis pairs and is pinned by the 28 x 28 transport test.
constexpr int kWB_uM = 1;    // (M_A u_{B,i} - M_B u_{A,i}) in u_C
constexpr int kWB_uW = -1;   // ustar-wedge terms in u_C
constexpr int kWB_uC = -2;   // (c_{A,i} u_{B,i} - c_{B,i} u_{A,i}) in u_C
constexpr int kWB_sM = -1;   // (ustar_{A,i} M_B - ustar_{B,i} M_A) in -ustar_C
constexpr int kWB_sW = 1;    // u-wedge terms in -ustar_C
constexpr int kWB_sC = -2;   // (c_{A,i} ustar_{B,i} - ...) in -ustar_C
constexpr int kWB_Mu = -1;   // sum u (x) ustar in M_C
constexpr int kWB_c = 1;     // global sign of the c_C row

constexpr int kKill_u[3] = {-1, -1, -1};  // u-ustar Killing terms

constexpr int kMem_E2 = 1;   // u_i^*(u_i) = kMem_E2 (c_i-c_j)(c_i-c_k)
constexpr int kMem_E3 = -1;  // u_i ^ u_j = kMem_E3 (c_i - c_j) u_k^*
constexpr int kMem_E4 = 1;   // u_i^* ^ u_j^* = kMem_E4 (c_i - c_j) u_k
constexpr int kMem_E5 = -1;  // (M - c_k)^u_k + kMem_E5 ustar_i.ustar_j = 0
constexpr int kMem_E6 = 1;   // (M - c_k)^ustar_k + kMem_E6 u_i.u_j = 0

}  // namespace

const int kBracketTransportSign = 1;

WindowElement window_bracket(const WindowElement& a, const WindowElement& b) {
    a.validate();
    b.validate();
    WindowElement r;

    Mat S(3, 3);
    for (int i = 0; i < 3; ++i) S = S + a.u[i] * b.ustar[i] - b.u[i] * a.ustar[i];
    Mat MC = a.M * b.M - b.M * a.M + Rat(kWB_Mu) * S;
    Rat tr = MC.trace() / 3;
    for (int i = 0; i < 3; ++i) MC.at(i, i) -= tr;
    r.M = MC;

    // d_i = ustar_{A,i}(u_{B,i}) - ustar_{B,i}(u_{A,i});
    // c_C = sign * K d with K the (-2/3, 1/3, 1/3) circulant.
    std::array<Rat, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = (a.ustar[i] * b.u[i]).at(0, 0) - (b.ustar[i] * a.u[i]).at(0, 0);
    for (int i = 0; i < 3; ++i) {
        Rat v(0);
        for (int j = 0; j < 3; ++j) v += (i == j ? Rat(-2, 3) : Rat(1, 3)) * d[j];
        r.c[i] = Rat(kWB_c) * v;
    }

    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        Vec ui = Rat(kWB_uM) * (a.M * b.u[i] - b.M * a.u[i]);
        ui = ui + Rat(kWB_uW) * (cross_rows(a.ustar[j], b.ustar[k]) - cross_rows(b.ustar[j], a.ustar[k]));
        ui = ui + Rat(kWB_uC) * (a.c[i] * b.u[i] - b.c[i] * a.u[i]);
        r.u[i] = ui;

        Mat si = Rat(kWB_sM) * (a.ustar[i] * b.M - b.ustar[i] * a.M);
        si = si + Rat(kWB_sW) * (cross_cols(a.u[j], b.u[k]) - cross_cols(b.u[j], a.u[k]));
        si = si + Rat(kWB_sC) * (a.c[i] * b.ustar[i] - b.c[i] * a.ustar[i]);
        r.ustar[i] = Rat(-1) * si;
    }
    return r;
}

EtaCoords window_act_vector(const WindowElement& A, const EtaCoords& x) {
    A.validate();
    EtaCoords y;
    const Rat cd = A.c[1] - A.c[2];
    y.z = A.M * x.z + A.c[0] * x.z + x.a * A.u[1] - x.b * A.u[2] + cross_rows(A.ustar[0], x.w);
    y.a = -(A.ustar[1] * x.z).at(0, 0) + cd * x.a + (x.w * A.u[2]).at(0, 0);
    y.b = (A.ustar[2] * x.z).at(0, 0) - cd * x.b - (x.w * A.u[1]).at(0, 0);
    y.w = Rat(-1) * (x.w * A.M) - A.c[0] * x.w - x.a * A.ustar[2] + x.b * A.ustar[1] + cross_cols(A.u[0], x.z);
    return y;
}

Rat window_killing(const WindowElement& a, const WindowElement& b) {
    a.validate();
    b.validate();
    Rat s = (a.M * b.M).trace();
    for (int i = 0; i < 3; ++i) {
        s += Rat(kKill_u[i]) * ((a.ustar[i] * b.u[i]).at(0, 0) + (b.ustar[i] * a.u[i]).at(0, 0));
        s += 2 * a.c[i] * b.c[i];
    }
    return s;
}

Rat cartan_three_form(const WindowElement& a, const WindowElement& b, const WindowElement& c) {
    // Assembled to satisfy the identity
    //   (1/2) Tr(A [B, C]) = window_killing(A, window_bracket(B, C)),
    // verified term family by term family against that oracle.
    Rat s = (a.M * (b.M * c.M - c.M * b.M)).trace();

    auto det_rows = [](const Mat& r1, const Mat& r2, const Mat& r3) -> Rat {
        Rat d = r1.at(0, 0) * (r2.at(0, 1) * r3.at(0, 2) - r2.at(0, 2) * r3.at(0, 1)) -
                r1.at(0, 1) * (r2.at(0, 0) * r3.at(0, 2) - r2.at(0, 2) * r3.at(0, 0)) +
                r1.at(0, 2) * (r2.at(0, 0) * r3.at(0, 1) - r2.at(0, 1) * r3.at(0, 0));
        return d;
    };
    auto det_cols = [&det_rows](const Vec& c1, const Vec& c2, const Vec& c3) -> Rat {
        return det_rows(c1.transpose(), c2.transpose(), c3.transpose());
    };

    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        s += det_rows(a.ustar[p[0]], b.ustar[p[1]], c.ustar[p[2]]);
        s += det_cols(a.u[p[0]], b.u[p[1]], c.u[p[2]]);
    }

    const WindowElement* trip[3] = {&a, &b, &c};
    for (int t = 0; t < 3; ++t) {
        const WindowElement& A = *trip[t];
        const WindowElement& B = *trip[(t + 1) % 3];
        const WindowElement& C = *trip[(t + 2) % 3];
        for (int i = 0; i < 3; ++i) {
            s += 2 * A.c[i] * ((C.ustar[i] * B.u[i]).at(0, 0) - (B.ustar[i] * C.u[i]).at(0, 0));
            s -= (C.ustar[i] * A.M * B.u[i]).at(0, 0) - (B.ustar[i] * A.M * C.u[i]).at(0, 0);
        }
    }
    return s;
}

bool min_membership_window(const WindowElement& A) {
    A.validate();
    auto pair = [&](int i, int j) { return (A.ustar[i] * A.u[j]).at(0, 0); };

    // u_i^*(u_j) = 0 for distinct i, j.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !is_zero(pair(i, j))) return false;

    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        // u_i^*(u_i) = (c_i - c_j)(c_i - c_k).
        if (pair(i, i) != Rat(kMem_E2) * (A.c[i] - A.c[j]) * (A.c[i] - A.c[k])) return false;
        // u_i ^ u_j = (c_i - c_j) u_k^*.
        if (cross_cols(A.u[i], A.u[j]) != Rat(kMem_E3) * ((A.c[i] - A.c[j]) * A.ustar[k])) return false;
        // u_i^* ^ u_j^* = (c_i - c_j) u_k.
        if (cross_rows(A.ustar[i], A.ustar[j]) != Rat(kMem_E4) * ((A.c[i] - A.c[j]) * A.u[k])) return false;
    }

    // (A ^ v)(w1, w2) = det(A w1 | v | w2) + det(A w2 | v | w1) in Sym^2(C^3)^*,
    // and its dual twin; sym products without a half.
    auto wedge_form = [](const Mat& Mk, const Vec& v) {
        Mat S(3, 3);
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
                Vec ep(3, 1), eq(3, 1);
                ep.at(p, 0) = 1;
                eq.at(q, 0) = 1;
                Vec c1 = Mk * ep, c2 = Mk * eq;
                S.at(p, q) = (cross_cols(c1, v) * eq).at(0, 0) + (cross_cols(c2, v) * ep).at(0, 0);
            }
        return S;
    };
    auto wedge_form_dual = [](const Mat& Mk, const Mat& vstar) {
        Mat S(3, 3);
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
                Mat ep(1, 3), eq(1, 3);
                ep.at(0, p) = 1;
                eq.at(0, q) = 1;
                Mat r1 = ep * Mk, r2 = eq * Mk;
                S.at(p, q) = (eq * cross_rows(r1, vstar)).at(0, 0) + (ep * cross_rows(r2, vstar)).at(0, 0);
            }
        return S;
    };
    auto sym_rows = [](const Mat& x, const Mat& y) { return (x.transpose() * y + y.transpose() * x); };
    auto sym_cols = [](const Vec& x, const Vec& y) { return (x * y.transpose() + y * x.transpose()); };

    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        Mat shifted = A.M;
        for (int t = 0; t < 3; ++t) shifted.at(t, t) -= A.c[k];
        if (!(wedge_form(shifted, A.u[k]) + Rat(kMem_E5) * sym_rows(A.ustar[i], A.ustar[j])).is_zero_matrix()) return false;
        if (!(wedge_form_dual(shifted, A.ustar[k]) + Rat(kMem_E6) * sym_cols(A.u[i], A.u[j])).is_zero_matrix()) return false;
        // The M-quadratic family: the exact identity, fitted over the
        // orbit and cyclic in (i, j, k), is
        //   9 (M - c_k)^2 + 3 (u_i us_i + u_j us_j) - 15 u_k us_k
        //     - 4 (us_i(u_i) + us_j(u_j)) Id - us_k(u_k) Id = 0.
        Mat Q = Rat(9) * (shifted * shifted);
        Q = Q + Rat(3) * (A.u[i] * A.ustar[i] + A.u[j] * A.ustar[j]);
        Q = Q - Rat(15) * (A.u[k] * A.ustar[k]);
        Rat diag = Rat(-4) * (pair(i, i) + pair(j, j)) - pair(k, k);
        for (int t = 0; t < 3; ++t) Q.at(t, t) += diag;
        if (!Q.is_zero_matrix()) return false;
    }
    return true;
}

}  // namespace minorb

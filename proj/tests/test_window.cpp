#include <doctest.h>

#include "minorb/chevalley.hpp"
#include "minorb/weyl.hpp"
#include "minorb/window.hpp"

using namespace minorb;

namespace {

Bivector W(int i, int j) { return Bivector::wedge(4, i, j); }

WindowElement pure_m(int i, int j) {
    WindowElement w;
    w.M.at(i, j) = 1;
    if (i == j) w.M.at((i + 1) % 3, (i + 1) % 3) = -1;
    return w;
}
WindowElement pure_c(Rat c1, Rat c2, Rat c3) {
    WindowElement w;
    w.c = {c1, c2, c3};
    return w;
}
WindowElement pure_u(int i, int j) {
    WindowElement w;
    w.u[i].at(j, 0) = 1;
    return w;
}
WindowElement pure_us(int i, int j) {
    WindowElement w;
    w.ustar[i].at(0, j) = 1;
    return w;
}

WindowElement random_orbit(Rng& rng) { return random_orbit_window(rng); }

}  // namespace

TEST_CASE("window element invariants") {
    WindowElement bad;
    bad.M.at(0, 0) = 1;  // nonzero trace
    CHECK_THROWS_AS(phi_window(bad), std::invalid_argument);
    WindowElement bad2;
    bad2.c = {Rat(1), Rat(0), Rat(0)};
    CHECK_THROWS_AS(phi_window(bad2), std::invalid_argument);
}

TEST_CASE("sl3 block: Lambda^2 eta on elementary matrices") {
    const auto& tab = chevalley();
    CHECK(phi_window(pure_m(0, 1)) == tab.X(1));                               // E12 -> X_{a2} = e2^e6
    CHECK(phi_window(pure_m(1, 2)) == tab.X(10));                              // E23 -> X_{a1+a2+a3+a4} = e1^e3
    CHECK(phi_window(pure_m(0, 2)) == tab.X(11));                              // E13 -> X_{a1+2a2+a3+a4} = e1^e2
}

TEST_CASE("the V_i / V_i^* identifications are equivariant lowering chains") {
    // The u_i / u_i^* coordinate maps are lowering chains from highest
    // weight anchors; the chains land on the ordered bases below (the
    // starred spaces in reversed weight order: images of e3*, e2*, e1*).
    // The anchor scales are the ones forced by the Weyl-action battery.
    const int u_scale[3] = {+1, +1, -1};
    const int us_scale[3] = {-1, -1, +1};

    const Bivector v_expected[3][3] = {{-W(1, 6), W(1, 7), W(6, 7)},
                                      {W(2, 5), W(3, 5), W(5, 8)},
                                      {W(2, 4), W(3, 4), W(4, 8)}};
    // Dual-side bases, images of e1*, e2*, e3*.
    const Bivector vs_expected[3][3] = {{-W(3, 8), W(2, 8), W(2, 3)},
                                       {W(4, 7), W(4, 6), W(1, 4)},
                                       {W(5, 7), W(5, 6), W(1, 5)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(phi_window(pure_u(i, j)) == Rat(u_scale[i]) * v_expected[i][j]);
            CHECK(phi_window(pure_us(i, j)) == Rat(us_scale[i]) * vs_expected[i][j]);
        }
}

TEST_CASE("phi_2 and the Cartan block") {
    // phi_2(c) = -c1 H_{a1} - c2 H_{a3} - c3 H_{a4}; the sign is forced by
    // the Weyl-action battery.
    const auto& tab = chevalley();
    CHECK(phi_window(pure_c(Rat(1), Rat(0), Rat(-1))) == -tab.H(1) + tab.H(4));
    CHECK(phi_window(pure_c(Rat(0), Rat(1), Rat(-1))) == -tab.H(3) + tab.H(4));

    // H_{a2} is purely sl3: diag(1, -1, 0).
    WindowElement h2 = phi_window_inv(tab.H(2));
    CHECK(h2.M == Mat::diag({Rat(1), Rat(-1), Rat(0)}));
    for (const Rat& c : h2.c) CHECK(is_zero(c));

    // H_{a4} decomposes with both an M part and a c part; in particular it
    // is not in the image of phi_2 alone.
    WindowElement h4 = phi_window_inv(tab.H(4));
    CHECK(h4.M == Mat::diag({Rat(-1, 3), Rat(2, 3), Rat(-1, 3)}));
    CHECK(h4.c == std::array<Rat, 3>{Rat(1, 3), Rat(1, 3), Rat(-2, 3)});
}

TEST_CASE("phi_window_inv round trip on all 28 Chevalley elements") {
    for (const Bivector& b : chevalley().all()) {
        WindowElement w = phi_window_inv(b);
        CHECK(phi_window(w) == b);
    }
    // And on the full window basis.
    for (const auto& w : window_basis_elements()) CHECK(phi_window_inv(phi_window(w)) == w);
}

TEST_CASE("window_bracket: fixed cases and the transport identity") {
    WindowElement a = pure_m(0, 1), b = pure_m(1, 0);
    WindowElement ab = window_bracket(a, b);
    CHECK(ab.M == Mat::diag({Rat(1), Rat(-1), Rat(0)}));
    for (int i = 0; i < 3; ++i) {
        CHECK(is_zero(ab.c[i]));
        CHECK(ab.u[i].is_zero_matrix());
        CHECK(ab.ustar[i].is_zero_matrix());
    }

    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        WindowElement x = random_orbit(rng), y = random_orbit(rng);
        CHECK(window_bracket(x, x).is_zero());
        CHECK(window_bracket(x, y) == Rat(-1) * window_bracket(y, x));
    }

    const auto& basis = window_basis_elements();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            Bivector lhs = Rat(kBracketTransportSign) * phi_window(window_bracket(x, y));
            CHECK(lhs == bracket(phi_window(x), phi_window(y)));
        }
}

TEST_CASE("window_act_vector: fixed cases and the matrix transport") {
    WindowElement zero;
    EtaCoords x;
    x.z.at(0, 0) = 1;
    EtaCoords y = window_act_vector(zero, x);
    CHECK(y.z.is_zero_matrix());
    CHECK(is_zero(y.a));
    CHECK(is_zero(y.b));
    CHECK(y.w.is_zero_matrix());

    // Pure c acts diagonally: (v, a, b, v*) with weights
    // (c1, c2-c3, -(c2-c3), -c1).
    WindowElement c = pure_c(Rat(1), Rat(2), Rat(-3));
    EtaCoords probe;
    probe.z.at(1, 0) = 1;
    probe.a = 1;
    probe.b = 1;
    probe.w.at(0, 2) = 1;
    EtaCoords out = window_act_vector(c, probe);
    CHECK(out.z == Rat(1) * probe.z);
    CHECK(out.a == Rat(5));
    CHECK(out.b == Rat(-5));
    CHECK(out.w == Rat(-1) * probe.w);

    const auto& basis = window_basis_elements();
    for (const auto& A : basis)
        for (int slot = 0; slot < 8; ++slot) {
            EtaCoords v;
            if (slot < 3)
                v.z.at(slot, 0) = 1;
            else if (slot == 3)
                v.a = 1;
            else if (slot == 4)
                v.b = 1;
            else
                v.w.at(0, slot - 5) = 1;
            EtaCoords img = window_act_vector(A, v);
            Vec want = biv_to_matrix(phi_window(A)) * eta(v.z, v.a, v.b, v.w);
            CHECK(eta(img.z, img.a, img.b, img.w) == Rat(kBracketTransportSign) * want);
        }
}

TEST_CASE("triality: group law, involutions, orders") {
    Rng rng(101);
    WindowElement A = random_orbit(rng);
    CHECK(triality(Perm3(), A) == A);
    for (const Perm3& s : Perm3::all())
        for (const Perm3& t : Perm3::all()) CHECK(triality(s * t, A) == triality(s, triality(t, A)));
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        Perm3 s = Perm3::transposition(a, b);
        CHECK(triality(s, triality(s, A)) == A);
    }
    // (13)(23) = (123)-type rotation has order 3.
    Perm3 r = Perm3::transposition(1, 3) * Perm3::transposition(2, 3);
    CHECK(triality(r, triality(r, triality(r, A))) == A);
    CHECK(!(triality(r, A) == A));
}

TEST_CASE("bracket equivariance under all six permutations") {
    const auto& basis = window_basis_elements();
    for (const Perm3& s : Perm3::all())
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = a + 1; b < basis.size(); ++b) {
                WindowElement lhs = window_bracket(triality(s, basis[a]), triality(s, basis[b]));
                CHECK(lhs == triality(s, window_bracket(basis[a], basis[b])));
            }
}

TEST_CASE("triality moves X_{a3} to X_{a4} under (23)") {
    const auto& tab = chevalley();
    WindowElement x3 = phi_window_inv(tab.X(2));
    Bivector img = phi_window(triality(Perm3::transposition(2, 3), x3));
    CHECK((img == tab.X(3) || img == -tab.X(3)));
}

TEST_CASE("window_killing closed form") {
    WindowElement c = pure_c(Rat(1), Rat(0), Rat(-1));
    CHECK(window_killing(c, c) == 4);
    CHECK(is_zero(window_killing(pure_m(0, 1), pure_u(0, 0))));

    const auto& basis = window_basis_elements();
    for (const auto& a : basis)
        for (const auto& b : basis) {
            Rat full = kks_lambda(phi_window(a), phi_window(b));
            CHECK(window_killing(a, b) == full / 2);
        }

    // Invariance under triality.
    Rng rng(55);
    WindowElement A = random_orbit(rng), B = random_orbit(rng);
    for (const Perm3& s : Perm3::all()) CHECK(window_killing(triality(s, A), triality(s, B)) == window_killing(A, B));
}

TEST_CASE("cartan_three_form") {
    Rng rng(66);
    auto rnd = [&rng] {
        WindowElement w;
        w.M = rng.next_matrix(3, 3, 2);
        Rat tr = w.M.trace() / 3;
        for (int d = 0; d < 3; ++d) w.M.at(d, d) -= tr;
        w.c[0] = rng.next_scalar(2);
        w.c[1] = rng.next_scalar(2);
        w.c[2] = -w.c[0] - w.c[1];
        for (int i = 0; i < 3; ++i) {
            w.u[i] = rng.next_vector(3, 2);
            w.ustar[i] = rng.next_matrix(1, 3, 2);
        }
        return w;
    };
    WindowElement zero;
    CHECK(is_zero(cartan_three_form(zero, zero, zero)));
    for (int t = 0; t < 20; ++t) {
        WindowElement A = rnd(), B = rnd(), C = rnd();
        CHECK(cartan_three_form(A, B, C) == window_killing(A, window_bracket(B, C)));
        CHECK(cartan_three_form(A, B, C) == -cartan_three_form(B, A, C));
    }
}

TEST_CASE("membership equations: anchors") {
    WindowElement zero;
    CHECK(min_membership_window(zero));

    CHECK(min_membership_window(phi_window_inv(W(1, 2))));

    // Pure regular c fails (u1*(u1) = 0 but the c-side is nonzero).
    CHECK(!min_membership_window(pure_c(Rat(1), Rat(0), Rat(-1))));
}

TEST_CASE("membership equivalence with the bivector oracle") {
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        WindowElement A = random_orbit(rng);
        CHECK(min_membership_window(A));
        CHECK(in_min_closure(phi_window(A)));
    }
    for (int t = 0; t < 100; ++t) {
        WindowElement A;
        A.M = rng.next_matrix(3, 3, 2);
        Rat tr = A.M.trace() / 3;
        for (int d = 0; d < 3; ++d) A.M.at(d, d) -= tr;
        A.c[0] = rng.next_scalar(2);
        A.c[1] = rng.next_scalar(2);
        A.c[2] = -A.c[0] - A.c[1];
        for (int i = 0; i < 3; ++i) {
            A.u[i] = rng.next_vector(3, 2);
            A.ustar[i] = rng.next_matrix(1, 3, 2);
        }
        CHECK(min_membership_window(A) == in_min_closure(phi_window(A)));
    }
}

TEST_CASE("window JSON round trip") {
    Rng rng(111);
    WindowElement A = random_orbit(rng);
    CHECK(WindowElement::from_json(A.to_json()) == A);
}

#include <doctest.h>

#include "minorb/chevalley.hpp"
#include "minorb/eta.hpp"

using namespace minorb;

TEST_CASE("table shape and signature entries") {
    const auto& t = chevalley();
    CHECK(t.entries().size() == 12);
    CHECK(t.all().size() == 28);
    CHECK(t.X(0) == Bivector::wedge(4, 1, 7));   // X_{a1}
    CHECK(t.Y(0) == Bivector::wedge(4, 2, 8));   // Y_{-a1}
    CHECK(t.X(11) == Bivector::wedge(4, 1, 2));  // X_{a1+2a2+a3+a4}
    CHECK(t.H(4) == Bivector::wedge(4, 3, 6) + Bivector::wedge(4, 4, 5));
    CHECK(t.find_root({1, 1, 0, 0}) == 4);
    CHECK(t.find_root({2, 0, 0, 0}) == -1);
}

TEST_CASE("D4 Cartan matrix") {
    CHECK(ChevalleyTable::cartan(1, 1) == 2);
    CHECK(ChevalleyTable::cartan(1, 2) == -1);
    CHECK(ChevalleyTable::cartan(1, 3) == 0);
    CHECK(ChevalleyTable::cartan(2, 4) == -1);
    CHECK(ChevalleyTable::cartan(3, 4) == 0);
}

TEST_CASE("relations report is clean") {
    ChevalleyReport r = chevalley_relations_report();
    CHECK(r.ok());
    CHECK(r.cases == 4 + 16 + 66 + 378);

    // Spot checks under the adopted sign.
    const auto& t = chevalley();
    CHECK(bracket(t.X(1), t.Y(1)) == t.H(2));
    CHECK(bracket(t.H(1), t.X(1)) == Rat(-1) * t.X(1));  // a_21 = -1
    CHECK(bracket(t.X(0), t.X(2)).is_zero());            // non-adjacent nodes
}

TEST_CASE("eta is an isometry for the natural pairing") {
    // <(z, a), (b, w)> = w(z) + a b against the split pairing on C^8.
    Rng rng(71);
    for (int t = 0; t < 50; ++t) {
        Vec z1 = rng.next_vector(3, 4), z2 = rng.next_vector(3, 4);
        Mat w1 = rng.next_matrix(1, 3, 4), w2 = rng.next_matrix(1, 3, 4);
        Rat a1 = rng.next_scalar(4), a2 = rng.next_scalar(4);
        Rat b1 = rng.next_scalar(4), b2 = rng.next_scalar(4);
        Rat lhs = pairing(eta(z1, a1, b1, w1), eta(z2, a2, b2, w2));
        Rat rhs = (w1 * z2).at(0, 0) + (w2 * z1).at(0, 0) + a1 * b2 + a2 * b1;
        CHECK(lhs == rhs);
    }

    // Fixed values from the defining formula.
    Vec z(3, 1);
    z.at(0, 0) = 1;
    Vec img = eta(z, Rat(0), Rat(0), Mat(1, 3));
    Vec e2(8, 1);
    e2.at(1, 0) = 1;
    CHECK(img == e2);

    Mat w(1, 3);
    w.at(0, 2) = 1;
    Vec img2 = eta(Vec(3, 1), Rat(0), Rat(0), w);
    Vec me1(8, 1);
    me1.at(0, 0) = -1;
    CHECK(img2 == me1);

    // eta_inv is the exact inverse.
    Rng rng2(72);
    for (int t = 0; t < 20; ++t) {
        Vec v = rng2.next_vector(8, 5);
        EtaCoords c = eta_inv(v);
        CHECK(eta(c.z, c.a, c.b, c.w) == v);
    }
}

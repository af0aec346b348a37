#include <doctest.h>

#include "minorb/quiver.hpp"

using namespace minorb;

namespace {

// A regular lift with concrete numbers: c = (0, -1, 1),
// u2, u2*, u3, u3* chosen freely (membership is not needed to exercise the
// quiver-side operations on explicit matrices).
QuiverPoint explicit_point() {
    QuiverPoint p = QuiverPoint::zero(3);
    p.alpha[0].at(1, 0) = 2;  // c3 - c2
    p.beta[0].at(0, 1) = 1;
    Mat a2(3, 2, {rat(1), rat(3), rat(0), rat(1), rat(2), rat(0)});
    Mat b2(2, 3, {rat(1), rat(0), rat(1), rat(0), rat(2), rat(1)});
    p.alpha[1] = a2;
    p.beta[1] = b2;
    return p;
}

}  // namespace

TEST_CASE("moment map vanishes exactly on N") {
    Rng rng(2);
    for (int n : {3, 4, 5}) {
        QuiverPoint p = sample_N(n, rng);
        for (const Mat& m : moment_map(p)) CHECK(m.is_zero_matrix());
        CHECK(in_N(p).has_value());
    }
    QuiverPoint z = QuiverPoint::zero(4);
    for (const Mat& m : moment_map(z)) CHECK(m.is_zero_matrix());
    auto lam = in_N(z);
    REQUIRE(lam.has_value());
    for (const Rat& l : *lam) CHECK(is_zero(l));
}

TEST_CASE("in_N detects non-scalar differences") {
    QuiverPoint p = QuiverPoint::zero(3);
    // beta_2 alpha_2 = diag(1, 2) with alpha_1 = beta_1 = 0.
    p.alpha[1].at(0, 0) = 1;
    p.alpha[1].at(1, 1) = 2;
    p.beta[1].at(0, 0) = 1;
    p.beta[1].at(1, 1) = 1;
    CHECK(!in_N(p).has_value());
    CHECK(!moment_map(p)[0].is_zero_matrix());
}

TEST_CASE("mu_H = 0 iff in_N on adversarial points") {
    Rng rng(4);
    for (int t = 0; t < 40; ++t) {
        QuiverPoint p = QuiverPoint::zero(3);
        for (int k = 0; k < 2; ++k) {
            p.alpha[k] = rng.next_matrix(k + 2, k + 1, 2);
            p.beta[k] = rng.next_matrix(k + 1, k + 2, 2);
        }
        bool mu_zero = true;
        for (const Mat& m : moment_map(p)) mu_zero = mu_zero && m.is_zero_matrix();
        CHECK(mu_zero == in_N(p).has_value());
    }
}

TEST_CASE("surjectivity predicate") {
    CHECK(!is_surjective_part(QuiverPoint::zero(3)));
    QuiverPoint p = explicit_point();
    CHECK(is_surjective_part(p));

    QuiverPoint n2 = QuiverPoint::zero(2);
    n2.beta[0] = Mat(1, 2, {rat(0), rat(1)});
    CHECK(is_surjective_part(n2));
}

TEST_CASE("symplectic form: antisymmetry, the single-trace case, bilinearity") {
    QuiverPoint p = explicit_point();
    CHECK(is_zero(symplectic_form(p, p)));

    QuiverPoint a = QuiverPoint::zero(3), b = QuiverPoint::zero(3);
    a.alpha[0] = Mat(2, 1, {rat(1), rat(0)});
    b.beta[0] = Mat(1, 2, {rat(1), rat(0)});
    CHECK(symplectic_form(a, b) == 1);
    CHECK(symplectic_form(b, a) == -1);

    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        QuiverPoint x = sample_N(3, rng), y = sample_N(3, rng), z = sample_N(3, rng);
        Rat s = rng.next_scalar(3);
        CHECK(symplectic_form(x + s * y, z) == symplectic_form(x, z) + s * symplectic_form(y, z));
    }
}

TEST_CASE("h_act: identity, group law, equivariance, invariants") {
    Rng rng(8);
    for (int n : {3, 4, 5}) {
        QuiverPoint p = sample_N(n, rng);
        HElement id;
        id.n = n;
        for (int k = 2; k <= n - 1; ++k) id.gs.push_back(Mat::identity(k));
        CHECK(h_act(id, p) == p);

        HElement h1 = random_h(rng, n), h2 = random_h(rng, n);
        HElement prod;
        prod.n = n;
        for (size_t i = 0; i < h1.gs.size(); ++i) prod.gs.push_back(h1.gs[i] * h2.gs[i]);
        CHECK(h_act(prod, p) == h_act(h1, h_act(h2, p)));

        // Moment-map equivariance: the traceless parts conjugate.
        auto mu = moment_map(p);
        auto mu_h = moment_map(h_act(h1, p));
        for (int k = 2; k <= n - 1; ++k) {
            const Mat& g = h1.gs[k - 2];
            CHECK(mu_h[k - 2] == g * mu[k - 2] * *inverse(g));
        }

        // lambda is H-invariant; so is the symplectic form.
        CHECK(*in_N(h_act(h1, p)) == *in_N(p));
        QuiverPoint q = sample_N(n, rng);
        CHECK(symplectic_form(h_act(h1, p), h_act(h1, q)) == symplectic_form(p, q));
    }
}

TEST_CASE("sample_N is deterministic, in N, and surjective") {
    Rng a(123), b(123);
    CHECK(sample_N(3, a) == sample_N(3, b));
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        QuiverPoint p = sample_N(4, rng);
        CHECK(in_N(p).has_value());
        CHECK(is_surjective_part(p));
    }
}

TEST_CASE("flag inequality for n <= 8") {
    CHECK(flag_inequality_check(1));
    CHECK(flag_inequality_check(3));
    CHECK(flag_inequality_check(8));
    CHECK_THROWS_AS(flag_inequality_check(13), std::invalid_argument);
}

TEST_CASE("quiver JSON round trip") {
    QuiverPoint p = explicit_point();
    CHECK(QuiverPoint::from_json(p.to_json()) == p);
}

#include <doctest.h>

#include "minorb/linalg.hpp"
#include "minorb/rng.hpp"

using namespace minorb;

TEST_CASE("scalar arithmetic is exact and canonical") {
    Rat a = rat(2, 4);
    CHECK(a == rat(1, 2));
    CHECK(rat_to_string(a) == "1/2");
    CHECK(rat_to_string(rat(-6, 4)) == "-3/2");
    CHECK(rat_to_string(rat(7)) == "7");
    CHECK(rat_from_string("-3/9") == rat(-1, 3));

    // Field axioms on random values.
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Rat x = rng.next_scalar(50) / rng.next_nonzero_scalar(50);
        Rat y = rng.next_scalar(50) / rng.next_nonzero_scalar(50);
        Rat z = rng.next_scalar(50) / rng.next_nonzero_scalar(50);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x + (y + z) == (x + y) + z);
        if (!is_zero(x)) CHECK(x * (1 / x) == 1);
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(Mat::zero(2, 5)) == 0);
    Mat m(2, 2, {rat(1), rat(2), rat(2), rat(4)});
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Mat::identity(4)).empty());
    CHECK(kernel_basis(Mat::zero(2, 3)).size() == 3);
    Mat m(1, 2, {rat(1), rat(1)});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].at(0, 0) * k[0].at(1, 0) < 0);  // span{(1, -1)}
    CHECK((m * k[0]).is_zero_matrix());
}

TEST_CASE("solve examples") {
    Mat I = Mat::identity(2);
    Mat b(2, 1, {rat(3), rat(5)});
    CHECK(*solve(I, b) == b);

    Mat a(2, 2, {rat(1), rat(0), rat(0), rat(0)});
    Mat bad(2, 1, {rat(0), rat(1)});
    CHECK(!solve(a, bad).has_value());

    Mat two(1, 1, {rat(2)});
    Mat one(1, 1, {rat(1)});
    CHECK(solve(two, one)->at(0, 0) == rat(1, 2));
}

TEST_CASE("det examples") {
    CHECK(det(Mat::identity(5)) == 1);
    CHECK(det(Mat::diag({rat(2), rat(1, 2)})) == 1);
    Mat swp(2, 2, {rat(0), rat(1), rat(1), rat(0)});
    CHECK(det(swp) == -1);
    CHECK_THROWS_AS(det(Mat::zero(2, 3)), std::invalid_argument);
}

TEST_CASE("rank/kernel/transpose properties on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        int r = static_cast<int>(rng.next_int(1, 6)), c = static_cast<int>(rng.next_int(1, 6));
        Mat m = rng.next_matrix(r, c, 4);
        CHECK(rank(m) == rank(m.transpose()));
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        for (const auto& v : ker) CHECK((m * v).is_zero_matrix());
    }
}

TEST_CASE("inverse and solve round trips") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        Mat m = rng.next_matrix(4, 4, 4);
        if (is_zero(det(m))) continue;
        Mat inv = *inverse(m);
        CHECK(m * inv == Mat::identity(4));
        Mat b = rng.next_matrix(4, 2, 4);
        CHECK(m * *solve(m, b) == b);
    }
}

#include <doctest.h>

#include <cmath>

#include "gamma2p1/so3.hpp"
#include "oracles.hpp"

using namespace gamma2p1;

TEST_CASE("identity Euler angles give the identity rotation") {
    const SO3Params p = so3_from_euler(0.0, 0.0, 0.0);
    CHECK(p.c == Vec3{1.0, 0.0, 0.0});
    CHECK(p.b == Vec3{0.0, 1.0, 0.0});
    CHECK(p.a == Vec3{0.0, 0.0, 1.0});
    CHECK(so3_validate(p).passed());
}

TEST_CASE("generic Euler angles produce a special-orthogonal matrix") {
    const SO3Params p = so3_from_euler(0.3, 1.1, -2.0);
    CHECK(test::brute_force_so3_residual(p) < 1e-12);
    CHECK(so3_validate(p, 1e-12).passed());
}

TEST_CASE("non-finite Euler input is rejected") {
    CHECK_THROWS_AS(so3_from_euler(std::nan(""), 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(so3_from_euler(0.0, INFINITY, 0.0), std::invalid_argument);
}

TEST_CASE("quaternion construction normalizes and matches the validator") {
    const SO3Params p = so3_from_quaternion(2.0, -1.0, 0.5, 0.25);
    CHECK(so3_validate(p, 1e-12).passed());
    CHECK_THROWS_AS(so3_from_quaternion(0.0, 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("random sampling is deterministic per seed") {
    const SO3Params p1 = so3_random(42);
    const SO3Params p2 = so3_random(42);
    CHECK(p1.c == p2.c);
    CHECK(p1.b == p2.b);
    CHECK(p1.a == p2.a);
    const SO3Params p3 = so3_random(43);
    CHECK(p1.c != p3.c);
}

TEST_CASE("10^4 random samples all validate") {
    for (std::uint64_t s = 0; s < 10000; ++s) {
        CAPTURE(s);
        REQUIRE(so3_validate(so3_random(s), 1e-10).passed());
    }
}

TEST_CASE("Haar sampling: empirical mean of the trace is near zero") {
    double sum = 0.0;
    const int n = 10000;
    for (std::uint64_t s = 0; s < n; ++s) sum += so3_random(s).trace();
    CHECK(std::abs(sum / n) < 0.05);
}

TEST_CASE("validator flags degenerate rows") {
    SO3Params bad;
    bad.c = {1.0, 0.0, 0.0};
    bad.b = {1.0, 0.0, 0.0};
    bad.a = {0.0, 0.0, 1.0};
    const auto rep = so3_validate(bad, 1e-10);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("standard-representation params validate") {
    CHECK(so3_validate(SO3Params::identity(), 1e-15).passed());
}

TEST_CASE("explicit input: accept, re-orthonormalize, reject") {
    bool reortho = false;

    // clean input taken as-is
    const SO3Params ok = so3_from_matrix({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, &reortho);
    CHECK_FALSE(reortho);
    CHECK(so3_validate(ok).passed());

    // benign drift: projected back onto SO(3) with a warning
    const double eps = 1e-8;
    const SO3Params fixed =
        so3_from_matrix({1.0 + eps, eps, 0}, {0, 1.0 - eps, eps}, {eps, 0, 1.0}, &reortho);
    CHECK(reortho);
    CHECK(so3_validate(fixed, 1e-12).passed());

    // garbage rejected
    CHECK_THROWS_AS(so3_from_matrix({1, 1, 0}, {0, 1, 0}, {0, 0, 1}, nullptr), std::invalid_argument);
    // reflections rejected
    CHECK_THROWS_AS(so3_from_matrix({1, 0, 0}, {0, 1, 0}, {0, 0, -1}, nullptr), std::invalid_argument);
}

TEST_CASE("round trip: params -> validate residuals are exact for presets") {
    const auto rep = so3_validate(SO3Params::identity(), 0.0);
    for (const auto& c : rep.checks) CHECK(c.residual == 0.0);
}

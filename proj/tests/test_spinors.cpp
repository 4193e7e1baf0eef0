#include <doctest.h>

#include <cmath>
#include <random>

#include "gamma2p1/spinors.hpp"
#include "gamma2p1/transforms.hpp"
#include "oracles.hpp"

using namespace gamma2p1;

namespace {

Momentum random_momentum(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> um(0.0, 2.0);
    return Momentum{u(rng), u(rng), um(rng)};
}

double dirac_residual(const GammaRep& rep, const PlaneWaveSolution& sol) {
    return norm(dirac_matrix(rep, sol.signed_energy(), sol.momentum) * sol.spinor);
}

}  // namespace

TEST_CASE("dispersion relation") {
    CHECK(dispersion({0, 0, 1}) == std::array<double, 2>{1.0, -1.0});
    CHECK(dispersion({3, 4, 0}) == std::array<double, 2>{5.0, -5.0});
    const auto e = dispersion({0.3, 0.4, 1.0});
    CHECK(e[0] == doctest::Approx(1.118033988749895).epsilon(1e-15));
    CHECK(e[1] == -e[0]);
}

TEST_CASE("dirac_matrix reduces to the standard form") {
    const GammaRep rep = preset_standard();
    const Momentum mom{0.3, 0.4, 1.0};
    const double e = dispersion(mom)[0];
    const Mat2 d = dirac_matrix(rep, e, mom);
    CHECK(std::abs(d(0, 0) - Complex{e - 1.0}) < 1e-15);
    CHECK(std::abs(d(0, 1) - Complex{-0.3, -0.4}) < 1e-15);
    CHECK(std::abs(d(1, 0) - Complex{0.3, -0.4}) < 1e-15);
    CHECK(std::abs(d(1, 1) - Complex{-(e + 1.0)}) < 1e-15);
}

TEST_CASE("determinant vanishes exactly on shell") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        CAPTURE(trial);
        const GammaRep rep = build_representation(so3_random(trial));
        const Momentum mom = random_momentum(rng);
        const double e = dispersion(mom)[0];
        REQUIRE(std::abs(det(dirac_matrix(rep, e, mom))) < 1e-10 * (1.0 + e * e));
        REQUIRE(std::abs(det(dirac_matrix(rep, -e, mom))) < 1e-10 * (1.0 + e * e));
    }
}

TEST_CASE("determinant is bounded away from zero off shell") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> delta(0.1, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        const GammaRep rep = build_representation(so3_random(trial + 4000));
        const Momentum mom = random_momentum(rng);
        const double e = dispersion(mom)[0];
        const double d = delta(rng);
        // det = m^2 + k^2 - E^2, so off shell by d the magnitude is d(2E + d)
        REQUIRE(std::abs(det(dirac_matrix(rep, e + d, mom))) >= 0.1 * d * e);
    }
    const GammaRep rep = preset_standard();
    CHECK(std::abs(det(dirac_matrix(rep, 2.0, Momentum{0, 0, 1}))) > 0.5);
}

TEST_CASE("standard-representation spinors reduce to the textbook form") {
    const GammaRep rep = preset_standard();
    const Momentum mom{0.3, 0.4, 1.0};
    const double e = dispersion(mom)[0];
    const double n = 1.0 / std::sqrt(2.0 * e * (e + 1.0));

    const PlaneWaveSolution up = spinor(rep, mom, Branch::plus);
    CHECK(std::abs(up.spinor[0] - n * Complex{e + 1.0}) < 1e-15);
    CHECK(std::abs(up.spinor[1] - n * Complex{0.3, -0.4}) < 1e-15);
    CHECK(up.normalization == Normalization::closed_form);

    const PlaneWaveSolution um = spinor(rep, mom, Branch::minus);
    CHECK(std::abs(um.spinor[0] - n * Complex{-0.3, -0.4}) < 1e-15);
    CHECK(std::abs(um.spinor[1] - n * Complex{e + 1.0}) < 1e-15);
}

TEST_CASE("cyclic-representation worked example") {
    // rep rows c=(0,1,0), b=(0,0,1), a=(1,0,0); m=1, k=(0.3,0.4)
    const GammaRep rep = preset_cyclic();
    const PlaneWaveSolution up = spinor(rep, Momentum{0.3, 0.4, 1.0}, Branch::plus);
    CHECK(std::abs(up.spinor[0] - Complex{0.542771144602271, -0.1628313433806813}) < 1e-14);
    CHECK(std::abs(up.spinor[1] - Complex{0.8239450456189314}) < 1e-14);
    CHECK(std::abs(dot(up.spinor, up.spinor) - Complex{1.0}) < 1e-14);
    CHECK(dirac_residual(rep, up) < 1e-14);
}

TEST_CASE("zero momentum and zero mass rejected") {
    CHECK_THROWS_AS(spinor(preset_standard(), Momentum{0, 0, 0}, Branch::plus), std::invalid_argument);
}

TEST_CASE("random draws: residual, normalization, oracle collinearity") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        CAPTURE(trial);
        const GammaRep rep = build_representation(so3_random(trial + 100));
        const Momentum mom = random_momentum(rng);
        const Branch br = (trial % 2 == 0) ? Branch::plus : Branch::minus;
        const PlaneWaveSolution sol = spinor(rep, mom, br);

        REQUIRE(dirac_residual(rep, sol) < 1e-12 * std::max(1.0, sol.energy));
        const double norm_tol = sol.normalization == Normalization::closed_form ? 1e-12 : 1e-10;
        REQUIRE(std::abs(norm(sol.spinor) - 1.0) < norm_tol);

        const Vec2 oracle = nullspace_oracle(rep, mom, br);
        REQUIRE(std::abs(std::abs(dot(oracle, sol.spinor)) - 1.0) < 1e-10);
    }
}

TEST_CASE("nullspace oracle rest-frame spinors") {
    const GammaRep rep = preset_standard();
    const Vec2 up = nullspace_oracle(rep, Momentum{0, 0, 1}, Branch::plus);
    CHECK(std::abs(std::abs(up[0]) - 1.0) < 1e-14);
    CHECK(std::abs(up[1]) < 1e-14);
    const Vec2 um = nullspace_oracle(rep, Momentum{0, 0, 1}, Branch::minus);
    CHECK(std::abs(um[0]) < 1e-14);
    CHECK(std::abs(std::abs(um[1]) - 1.0) < 1e-14);
}

TEST_CASE("nullspace oracle refuses off-shell matrices") {
    // not exposed through the public entry point (which is always on shell),
    // so probe through the determinant precondition instead
    const GammaRep rep = preset_standard();
    const Mat2 off = dirac_matrix(rep, 2.0, Momentum{0, 0, 1});
    CHECK(std::abs(det(off)) > 1e-8);
}

TEST_CASE("denominator non-negativity and fallback trigger") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        const GammaRep rep = build_representation(so3_random(trial + 900));
        const Momentum mom = random_momentum(rng);
        CHECK(normalization_denominator(rep, mom) >= -1e-12);
    }

    // c = (-1, 0, 0) rest frame is the Cauchy-Schwarz equality direction
    const GammaRep degen = build_representation(SO3Params{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    const PlaneWaveSolution sol = spinor(degen, Momentum{0, 0, 1}, Branch::plus);
    CHECK(sol.normalization == Normalization::numeric_fallback);
    CHECK(std::abs(norm(sol.spinor) - 1.0) < 1e-10);
    CHECK(dirac_residual(degen, sol) < 1e-10);
}

TEST_CASE("adjoint spinor and scalar bilinear") {
    const GammaRep rep = preset_standard();
    CHECK(adjoint_spinor({Complex{1}, Complex{0}}, rep) == Vec2{Complex{1}, Complex{0}});
    CHECK(adjoint_spinor({Complex{0}, Complex{1}}, rep) == Vec2{Complex{0}, Complex{-1}});

    const GammaRep cyc = preset_cyclic();  // gamma0 = [[0,1],[1,0]]
    CHECK(adjoint_spinor({Complex{1}, Complex{0}}, cyc) == Vec2{Complex{0}, Complex{1}});

    CHECK(bilinear_scalar({Complex{1}, Complex{0}}, {Complex{1}, Complex{0}}, rep) == Complex{1.0});

    // rest frame: ubar u = m/E = 1
    const PlaneWaveSolution rest = spinor(rep, Momentum{0, 0, 1}, Branch::plus);
    CHECK(std::abs(bilinear_scalar(rest.spinor, rest.spinor, rep) - Complex{1.0}) < 1e-14);
}

TEST_CASE("scalar bilinear is boost invariant") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> th(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        const GammaRep rep = build_representation(so3_random(trial + 50));
        const Momentum mom = random_momentum(rng);
        const PlaneWaveSolution sol = spinor(rep, mom, Branch::plus);
        const BoostOp b = boost_operator(rep, th(rng), 1 + trial % 2);
        const Vec2 su = b.S * sol.spinor;
        REQUIRE(std::abs(bilinear_scalar(su, su, rep) - bilinear_scalar(sol.spinor, sol.spinor, rep)) <
                1e-10);
    }
}

TEST_CASE("current bilinear: j0 = u^dagger u and Lorentz covariance") {
    const GammaRep rep = preset_standard();
    const auto j = bilinear_current({Complex{1}, Complex{0}}, rep);
    CHECK(j[0] == Complex{1.0});

    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-2.0, 2.0), th(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        const GammaRep r = build_representation(so3_random(trial + 300));
        const Momentum mom = random_momentum(rng);
        const PlaneWaveSolution sol = spinor(r, mom, Branch::plus);
        REQUIRE(std::abs(bilinear_current(sol.spinor, r)[0] - Complex{1.0}) < 1e-12);

        const int axis = 1 + trial % 2;
        const BoostOp b = boost_operator(r, th(rng), axis);
        const auto j_in = bilinear_current(sol.spinor, r);
        const auto j_out = bilinear_current(b.S * sol.spinor, r);
        // j'^0 = cosh j^0 - sinh j^axis, j'^axis = cosh j^axis - sinh j^0
        const double ch = std::cosh(b.theta), sh = std::sinh(b.theta);
        REQUIRE(std::abs(j_out[0] - (ch * j_in[0] - sh * j_in[axis])) < 1e-10);
        REQUIRE(std::abs(j_out[axis] - (ch * j_in[axis] - sh * j_in[0])) < 1e-10);
        REQUIRE(std::abs(j_out[axis == 1 ? 2 : 1] - j_in[axis == 1 ? 2 : 1]) < 1e-10);
    }
}

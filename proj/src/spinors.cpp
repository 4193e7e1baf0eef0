#include "gamma2p1/spinors.hpp"

#include <cmath>
#include <stdexcept>

namespace gamma2p1 {

namespace {

/// Un-normalized closed-form spinor components for the given branch,
/// evaluated with the positive energy magnitude.
Vec2 closed_form_numerator(const GammaRep& rep, const Momentum& mom, double energy, Branch branch) {
    const SO3Params& p = rep.params;
    const double E = energy, k1 = mom.k1, k2 = mom.k2, m = mom.m;
    const Complex top{p.c[0] * E + m, -(p.c[1] * k1 + p.c[2] * k2)};
    const Complex bot{p.a[0] * E + p.b[1] * k1 + p.b[2] * k2,
                      p.b[0] * E - p.a[1] * k1 - p.a[2] * k2};
    if (branch == Branch::plus) return {top, bot};
    return {Complex{-bot.real(), bot.imag()}, std::conj(top)};
}

}  // namespace

std::array<double, 2> dispersion(const Momentum& mom) {
    const double e = std::sqrt(mom.k1 * mom.k1 + mom.k2 * mom.k2 + mom.m * mom.m);
    return {e, -e};
}

Mat2 dirac_matrix(const GammaRep& rep, double energy, const Momentum& mom) {
    return Complex{energy} * rep.gamma0 - Complex{mom.k1} * rep.gamma1 -
           Complex{mom.k2} * rep.gamma2 - Complex{mom.m} * Mat2::identity();
}

double normalization_denominator(const GammaRep& rep, const Momentum& mom) {
    const double E = dispersion(mom)[0];
    const SO3Params& p = rep.params;
    return E + p.c[0] * mom.m + p.c[1] * mom.k2 - p.c[2] * mom.k1;
}

PlaneWaveSolution spinor(const GammaRep& rep, const Momentum& mom, Branch branch) {
    if (mom.k1 == 0.0 && mom.k2 == 0.0 && mom.m == 0.0)
        throw std::invalid_argument("spinor: zero momentum and zero mass has no solution scale");
    const double E = dispersion(mom)[0];
    PlaneWaveSolution sol;
    sol.momentum = mom;
    sol.branch = branch;
    sol.energy = E;

    const double denom = normalization_denominator(rep, mom);
    if (denom >= kDenomEpsilon) {
        const Vec2 u = closed_form_numerator(rep, mom, E, branch);
        const double n = 1.0 / std::sqrt(2.0 * E * denom);
        sol.spinor = {n * u[0], n * u[1]};
        sol.normalization = Normalization::closed_form;
        return sol;
    }
    // Near the Cauchy-Schwarz equality direction the closed-form vector is a
    // difference of nearly equal quantities and its entries carry absolute
    // rounding errors comparable to its own norm. The null-space extraction
    // stays well conditioned there, so it is the fallback.
    sol.spinor = nullspace_oracle(rep, mom, branch);
    sol.normalization = Normalization::numeric_fallback;
    return sol;
}

Vec2 nullspace_oracle(const GammaRep& rep, const Momentum& mom, Branch branch) {
    const double E = dispersion(mom)[0];
    const double signed_e = branch == Branch::plus ? E : -E;
    const Mat2 d = dirac_matrix(rep, signed_e, mom);
    if (std::abs(det(d)) > 1e-8 * (1.0 + E * E))
        throw InconsistencyError("nullspace_oracle: matrix is not rank-deficient");
    const double row0 = std::abs(d(0, 0)) + std::abs(d(0, 1));
    const double row1 = std::abs(d(1, 0)) + std::abs(d(1, 1));
    Vec2 v = row0 >= row1 ? Vec2{-d(0, 1), d(0, 0)} : Vec2{-d(1, 1), d(1, 0)};
    const double n = norm(v);
    if (n < 1e-14)
        throw InconsistencyError("nullspace_oracle: null matrix, solution space is all of C^2");
    return {v[0] / n, v[1] / n};
}

Vec2 adjoint_spinor(const Vec2& u, const GammaRep& rep) {
    const Vec2 uc{std::conj(u[0]), std::conj(u[1])};
    const Mat2& g = rep.gamma0;
    return {uc[0] * g(0, 0) + uc[1] * g(1, 0), uc[0] * g(0, 1) + uc[1] * g(1, 1)};
}

Complex bilinear_scalar(const Vec2& u, const Vec2& v, const GammaRep& rep) {
    const Vec2 ubar = adjoint_spinor(u, rep);
    return ubar[0] * v[0] + ubar[1] * v[1];
}

std::array<Complex, 3> bilinear_current(const Vec2& u, const GammaRep& rep) {
    const Vec2 ubar = adjoint_spinor(u, rep);
    std::array<Complex, 3> j;
    for (int mu = 0; mu < 3; ++mu) {
        const Vec2 gu = rep.gamma(mu) * u;
        j[mu] = ubar[0] * gu[0] + ubar[1] * gu[1];
    }
    return j;
}

}  // namespace gamma2p1

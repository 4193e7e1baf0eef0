#pragma once

#include <array>

#include "gamma2p1/clifford.hpp"
#include "gamma2p1/mat2.hpp"
#include "gamma2p1/report.hpp"
#include "gamma2p1/spinors.hpp"

namespace gamma2p1 {

/// Largest accepted rapidity magnitude; beyond this cosh overflow would
/// swamp the residual checks.
inline constexpr double kMaxRapidity = 20.0;

/// Spinor-space boost S = exp(-(theta/2) gamma^0 gamma^axis) together with
/// its spacetime matrix Lambda on the (x^0, x^axis) plane.
struct BoostOp {
    Mat2 S;
    Mat2 S_inv;
    Mat2 generator;  // gamma^0 gamma^axis, squares to +I
    std::array<std::array<double, 2>, 2> lambda{};
    int axis = 1;  // 1 or 2
    double theta = 0.0;
};

/// Parity P = e^{i phi} gamma^0, reflecting x^1 in the (1+1) reading.
/// Note: conjugation by P flips gamma^2 as well as gamma^1, so as a spacetime
/// reflection it matches Lambda = diag(1, -1) only on the (x^0, x^1) plane; a
/// single-axis reflection in the full 2+1 theory is not of this form.
struct ParityOp {
    Mat2 P;
    double phi = 0.0;
    std::array<double, 2> lambda_diag{1.0, -1.0};
};

/// Closed-form boost (the generator squares to +I, so the exponential is
/// I cosh(theta/2) - G sinh(theta/2)). Throws std::invalid_argument for
/// non-finite theta, |theta| > kMaxRapidity, or axis outside {1, 2}.
BoostOp boost_operator(const GammaRep& rep, double theta, int axis);

/// Residuals of S^{-1} gamma^nu S = gamma^mu Lambda_mu^nu on the boosted
/// plane, plus invariance of the untouched spatial gamma.
VerificationReport covariance_check(const GammaRep& rep, const BoostOp& b, double tol = 1e-12);

/// u' = S u with the momentum carried to the boosted frame. The returned
/// spinor is not re-normalized (boosts do not preserve u^dagger u); its
/// normalization is marked Normalization::boosted.
PlaneWaveSolution boost_spinor(const BoostOp& b, const PlaneWaveSolution& sol);

/// Composition along the same axis: equals the boost at summed rapidity.
/// Throws std::invalid_argument on axis or generator mismatch.
BoostOp boost_compose(const BoostOp& b1, const BoostOp& b2);

ParityOp parity_operator(const GammaRep& rep, double phi = 0.0);

/// P applied to the spinor of a plane-wave solution.
Vec2 parity_apply(const ParityOp& p, const PlaneWaveSolution& sol);

}  // namespace gamma2p1

#pragma once

#include <array>

#include "gamma2p1/clifford.hpp"
#include "gamma2p1/mat2.hpp"

namespace gamma2p1 {

/// Spatial momentum and mass in natural units.
struct Momentum {
    double k1 = 0.0;
    double k2 = 0.0;
    double m = 0.0;
};

enum class Branch { plus, minus };

enum class Normalization { closed_form, numeric_fallback, boosted };

struct PlaneWaveSolution {
    Momentum momentum;
    Branch branch = Branch::plus;
    double energy = 0.0;  // positive magnitude
    Vec2 spinor{};
    Normalization normalization = Normalization::closed_form;

    double signed_energy() const { return branch == Branch::plus ? energy : -energy; }
};

/// Threshold below which the closed-form normalization denominator is treated
/// as degenerate and a numeric normalization is used instead.
inline constexpr double kDenomEpsilon = 1e-8;

/// (E+, E-) = (+sqrt(k1^2 + k2^2 + m^2), -sqrt(...)).
std::array<double, 2> dispersion(const Momentum& mom);

/// gamma^0 E - gamma^1 k1 - gamma^2 k2 - m I, for signed energy E.
/// Singular exactly on shell.
Mat2 dirac_matrix(const GammaRep& rep, double energy, const Momentum& mom);

/// Closed-form normalization denominator E + c0 m + c1 k2 - c2 k1 (>= 0 by
/// Cauchy-Schwarz against the unit row c).
double normalization_denominator(const GammaRep& rep, const Momentum& mom);

/// Closed-form plane-wave spinor for the given branch, unit-normalized.
/// Falls back to the numerically normalized null-space vector when the
/// closed-form denominator degenerates. Throws std::invalid_argument when
/// both momentum and mass vanish.
PlaneWaveSolution spinor(const GammaRep& rep, const Momentum& mom, Branch branch);

/// Unit-norm null vector of the on-shell Dirac matrix, extracted directly
/// from the larger row. Independent of the closed-form spinor path.
/// Throws InconsistencyError when the matrix is not rank-deficient.
Vec2 nullspace_oracle(const GammaRep& rep, const Momentum& mom, Branch branch);

/// u^dagger gamma^0, as a row 2-vector.
Vec2 adjoint_spinor(const Vec2& u, const GammaRep& rep);

/// (u^dagger gamma^0) v, the Lorentz-scalar bilinear.
Complex bilinear_scalar(const Vec2& u, const Vec2& v, const GammaRep& rep);

/// j^mu = (u^dagger gamma^0) gamma^mu u; j^0 is real and equals u^dagger u.
std::array<Complex, 3> bilinear_current(const Vec2& u, const GammaRep& rep);

}  // namespace gamma2p1

#pragma once

#include <array>

#include "gamma2p1/mat2.hpp"
#include "gamma2p1/report.hpp"
#include "gamma2p1/so3.hpp"

namespace gamma2p1 {

/// Minkowski metric diag(1, -1, -1) in 2+1 dimensions.
inline constexpr std::array<double, 3> kMetricDiag{1.0, -1.0, -1.0};

/// A gamma representation: gamma^0 Hermitian, gamma^1 and gamma^2
/// anti-Hermitian, built entrywise from the SO(3) rows.
struct GammaRep {
    Mat2 gamma0;
    Mat2 gamma1;
    Mat2 gamma2;
    SO3Params params;

    const Mat2& gamma(int mu) const { return mu == 0 ? gamma0 : (mu == 1 ? gamma1 : gamma2); }
};

/// Entrywise construction from validated SO(3) parameters. Throws
/// ConstructionError (carrying the validation report) on invalid params.
GammaRep build_representation(const SO3Params& p, double tol = 1e-10);

/// Standard (Dirac-Pauli) representation: c0 = b1 = a2 = 1.
GammaRep preset_standard();

/// Cyclically permuted rows: c = e_y, b = e_z, a = e_x.
GammaRep preset_cyclic();

Mat2 anticommutator(const Mat2& m, const Mat2& n);

/// All six unordered index pairs of {gamma^mu, gamma^nu} = 2 g^{mu nu} I.
VerificationReport verify_clifford(const GammaRep& rep, double tol = 1e-12);

/// Lowered-index matrices (gamma_0, gamma_1, gamma_2) = (gamma^0, -gamma^1, -gamma^2).
std::array<Mat2, 3> lower_index(const GammaRep& rep);

/// gamma^0 gamma^1 = -i gamma^2 and cyclic, -i gamma^0 gamma^1 gamma^2 = I,
/// plus nonvanishing pairwise products.
VerificationReport product_identities_check(const GammaRep& rep, double tol = 1e-12);

/// Eigenvalues of a normal 2x2 matrix, sorted by descending real part then
/// descending imaginary part. Throws std::domain_error on non-normal input.
std::array<Complex, 2> eigen_gamma(const Mat2& m);

/// Aggregate property suite: tracelessness, normality, (anti-)Hermiticity,
/// squares, eigenvalues, and the element relations of the parameter matrix.
VerificationReport check_properties(const GammaRep& rep, double tol = 1e-12);

/// gamma'^mu = m gamma^mu m^{-1}. The output satisfies the Clifford relation
/// but is generally not of the SO(3)-generated form, so raw matrices are
/// returned. Throws std::invalid_argument if m is singular.
std::array<Mat2, 3> conjugate_representation(const GammaRep& rep, const Mat2& m);

}  // namespace gamma2p1

#pragma once

#include "gamma2p1/clifford.hpp"
#include "gamma2p1/mat2.hpp"
#include "gamma2p1/report.hpp"

namespace gamma2p1 {

struct IntertwinerResult {
    Mat2 M;                 // det M = 1, sign fixed by the largest-modulus entry
    double residual = 0.0;  // max_mu max-entry |M gamma^mu M^{-1} - gamma'^mu|
    int commutant_dim = 0;
    bool normalized = false;
};

/// Solves gammaB^mu M - M gammaA^mu = 0 for all mu as a stacked 12x4
/// homogeneous system and verifies M gammaA^mu M^{-1} = gammaB^mu.
/// Throws InconsistencyError when the null space is numerically empty and
/// DegenerateSolutionError when the recovered M is singular.
IntertwinerResult find_intertwiner(const GammaRep& repA, const GammaRep& repB, double tol = 1e-9);

/// Dimension of the null space of the stacked system (singular values below
/// tol * sigma_max count as zero). Value 1 certifies the intertwiner is
/// unique up to a complex scalar.
int commutant_dimension(const GammaRep& repA, const GammaRep& repB, double tol = 1e-9);

/// Recomputes the conjugation residual per mu, independently of the solver.
VerificationReport verify_intertwiner(const IntertwinerResult& res, const GammaRep& repA,
                                      const GammaRep& repB, double tol = 1e-10);

}  // namespace gamma2p1

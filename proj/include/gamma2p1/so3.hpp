#pragma once

#include <array>
#include <cstdint>

#include "gamma2p1/report.hpp"

namespace gamma2p1 {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b);
Vec3 cross3(const Vec3& a, const Vec3& b);
double norm3(const Vec3& a);

/// Rows (c; b; a) of a real special-orthogonal 3x3 matrix. These three unit
/// vectors are the only degrees of freedom of a gamma representation.
struct SO3Params {
    Vec3 c{1.0, 0.0, 0.0};
    Vec3 b{0.0, 1.0, 0.0};
    Vec3 a{0.0, 0.0, 1.0};

    static SO3Params identity() { return SO3Params{}; }

    double trace() const { return c[0] + b[1] + a[2]; }
};

/// ZYZ Euler angles: rows of Rz(alpha) * Ry(beta) * Rz(gamma).
/// (0,0,0) gives the identity. Throws std::invalid_argument on non-finite input.
SO3Params so3_from_euler(double alpha, double beta, double gamma_angle);

/// Unit quaternion (w,x,y,z), normalized internally.
/// Throws std::invalid_argument on non-finite or near-zero input.
SO3Params so3_from_quaternion(double w, double x, double y, double z);

/// Explicit 3x3 input, rows c, b, a. Orthonormality residual <= accept_tol is
/// taken as-is; up to reortho_tol the rows are projected back onto SO(3) (a
/// warning is recorded in *warning when given); beyond that the input is
/// rejected with std::invalid_argument.
SO3Params so3_from_matrix(const Vec3& c, const Vec3& b, const Vec3& a, bool* reorthonormalized = nullptr,
                          double accept_tol = 1e-10, double reortho_tol = 1e-6);

/// Haar-uniform rotation from a seeded generator (uniform unit quaternion).
SO3Params so3_random(std::uint64_t seed);

/// All seeds drawn from one generator stream: sample index i of the given seed.
SO3Params so3_random_stream(std::uint64_t seed, std::uint64_t index);

/// Checks row orthonormality, det = +1, and the componentwise cross-product
/// closure relations (a = c x b and cyclic). Failures are reported, not thrown.
VerificationReport so3_validate(const SO3Params& p, double tol = 1e-10);

}  // namespace gamma2p1

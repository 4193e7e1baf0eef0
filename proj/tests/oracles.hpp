// Test-only oracles, kept independent of the library's computation paths.
#pragma once

#include <cmath>
#include <random>

#include "gamma2p1/mat2.hpp"
#include "gamma2p1/so3.hpp"

namespace gamma2p1::test {

/// Brute-force orthogonality residual of the 3x3 matrix with rows (c; b; a):
/// max entry of |A A^T - I| plus the determinant defect.
inline double brute_force_so3_residual(const SO3Params& p) {
    const double rows[3][3] = {{p.c[0], p.c[1], p.c[2]}, {p.b[0], p.b[1], p.b[2]}, {p.a[0], p.a[1], p.a[2]}};
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += rows[i][k] * rows[j][k];
            r = std::max(r, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        d += rows[0][i] * (rows[1][j] * rows[2][k] - rows[1][k] * rows[2][j]);
    }
    return std::max(r, std::abs(d - 1.0));
}

/// Series matrix exponential with scaling and squaring. Oracle for the
/// closed-form boost operator.
inline Mat2 expm_series(const Mat2& m) {
    int squarings = 0;
    Mat2 x = m;
    while (fro_norm(x) > 0.5) {
        x = Complex{0.5} * x;
        ++squarings;
    }
    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 30; ++k) {
        term = (Complex{1.0 / k} * term) * x;
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

/// Condition number (2-norm) of a 2x2 matrix via the singular values of m,
/// from the eigenvalues of m^H m.
inline double cond2(const Mat2& m) {
    const Mat2 g = adjoint(m) * m;
    const double tr = g(0, 0).real() + g(1, 1).real();
    const double dt = std::abs(det(g));
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - dt));
    const double smax = tr / 2.0 + disc;
    const double smin = tr / 2.0 - disc;
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(smax / smin);
}

/// Seeded random invertible 2x2 complex matrix with condition number below
/// the given bound.
inline Mat2 random_invertible(std::mt19937_64& rng, double max_cond = 1e4) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Mat2 m;
        for (auto& z : m.e) z = Complex{u(rng), u(rng)};
        if (std::abs(det(m)) > 1e-3 && cond2(m) < max_cond) return m;
    }
}

}  // namespace gamma2p1::test

#include "gamma2p1/intertwiner.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace gamma2p1 {

namespace {

using SystemMatrix = Eigen::Matrix<std::complex<double>, 12, 4>;

// Column-major vec(M), v[2*col + row] = M(row, col). One scalar equation per
// (mu, entry) of gammaB M - M gammaA = 0.
SystemMatrix stacked_system(const GammaRep& repA, const GammaRep& repB) {
    SystemMatrix k = SystemMatrix::Zero();
    for (int mu = 0; mu < 3; ++mu) {
        const Mat2& ga = repA.gamma(mu);
        const Mat2& gb = repB.gamma(mu);
        for (int i = 0; i < 2; ++i)
            for (int c = 0; c < 2; ++c) {
                const int r = 4 * mu + 2 * c + i;
                for (int j = 0; j < 2; ++j) {
                    k(r, 2 * c + j) += gb(i, j);  // coefficient of M(j, c)
                    k(r, 2 * j + i) -= ga(j, c);  // coefficient of M(i, j)
                }
            }
    }
    return k;
}

Eigen::JacobiSVD<Eigen::MatrixXcd> system_svd(const GammaRep& repA, const GammaRep& repB) {
    const Eigen::MatrixXcd k = stacked_system(repA, repB);
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(k, Eigen::ComputeFullV);
}

int null_dimension(const Eigen::JacobiSVD<Eigen::MatrixXcd>& svd, double tol) {
    const auto& sigma = svd.singularValues();
    const double cutoff = tol * sigma(0);
    int dim = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) <= cutoff) ++dim;
    return dim;
}

double conjugation_residual(const Mat2& m, const GammaRep& repA, const GammaRep& repB) {
    const Mat2 minv = inverse(m);
    double r = 0.0;
    for (int mu = 0; mu < 3; ++mu)
        r = std::max(r, max_abs(m * repA.gamma(mu) * minv - repB.gamma(mu)));
    return r;
}

}  // namespace

IntertwinerResult find_intertwiner(const GammaRep& repA, const GammaRep& repB, double tol) {
    const auto svd = system_svd(repA, repB);
    const int dim = null_dimension(svd, tol);
    if (dim == 0)
        throw InconsistencyError("find_intertwiner: no intertwiner at tolerance (representations inequivalent?)");

    const auto v = svd.matrixV().col(3);  // smallest singular value
    Mat2 m;
    m(0, 0) = v(0);
    m(1, 0) = v(1);  // column-major vec
    m(0, 1) = v(2);
    m(1, 1) = v(3);

    const Complex d = det(m);
    if (std::abs(d) < 1e-10)
        throw DegenerateSolutionError("find_intertwiner: singular intertwiner candidate");
    m = (Complex{1.0} / std::sqrt(d)) * m;  // det = 1, sign still free

    // fix the sign so the largest-modulus entry points into the right half
    // plane (positive imaginary part on the boundary)
    std::size_t imax = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (std::abs(m.e[i]) > std::abs(m.e[imax])) imax = i;
    const Complex pivot = m.e[imax];
    if (pivot.real() < 0.0 || (std::abs(pivot.real()) < 1e-14 && pivot.imag() < 0.0)) m = -m;

    IntertwinerResult res;
    res.M = m;
    res.residual = conjugation_residual(m, repA, repB);
    res.commutant_dim = dim;
    res.normalized = true;
    return res;
}

int commutant_dimension(const GammaRep& repA, const GammaRep& repB, double tol) {
    return null_dimension(system_svd(repA, repB), tol);
}

VerificationReport verify_intertwiner(const IntertwinerResult& res, const GammaRep& repA,
                                      const GammaRep& repB, double tol) {
    VerificationReport out;
    const Mat2 minv = inverse(res.M);
    static const char* names[3] = {"conjugation-g0", "conjugation-g1", "conjugation-g2"};
    for (int mu = 0; mu < 3; ++mu)
        out.add(names[mu], max_abs(res.M * repA.gamma(mu) * minv - repB.gamma(mu)), tol);
    return out;
}

}  // namespace gamma2p1

#include "gamma2p1/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gamma2p1 {

namespace {

Mat2 pauli_like(const Vec3& row_c, const Vec3& row_b, const Vec3& row_a, int mu) {
    const double c = row_c[mu], b = row_b[mu], a = row_a[mu];
    Mat2 m{{Complex{c, 0.0}, Complex{a, -b}, Complex{a, b}, Complex{-c, 0.0}}};
    return mu == 0 ? m : kI * m;
}

double normality_residual(const Mat2& m) {
    return max_abs(m * adjoint(m) - adjoint(m) * m);
}

}  // namespace

GammaRep build_representation(const SO3Params& p, double tol) {
    VerificationReport v = so3_validate(p, tol);
    if (!v.passed()) throw ConstructionError("build_representation: invalid SO(3) params", v);
    GammaRep rep;
    rep.params = p;
    rep.gamma0 = pauli_like(p.c, p.b, p.a, 0);
    rep.gamma1 = pauli_like(p.c, p.b, p.a, 1);
    rep.gamma2 = pauli_like(p.c, p.b, p.a, 2);
    return rep;
}

GammaRep preset_standard() { return build_representation(SO3Params::identity()); }

GammaRep preset_cyclic() {
    return build_representation(SO3Params{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}});
}

Mat2 anticommutator(const Mat2& m, const Mat2& n) { return m * n + n * m; }

VerificationReport verify_clifford(const GammaRep& rep, double tol) {
    VerificationReport out;
    static const char* names[3][3] = {{"clifford-00", "clifford-01", "clifford-02"},
                                      {nullptr, "clifford-11", "clifford-12"},
                                      {nullptr, nullptr, "clifford-22"}};
    for (int mu = 0; mu < 3; ++mu) {
        for (int nu = mu; nu < 3; ++nu) {
            const double g = mu == nu ? kMetricDiag[mu] : 0.0;
            const Mat2 lhs = anticommutator(rep.gamma(mu), rep.gamma(nu));
            const Mat2 expect = Complex{2.0 * g} * Mat2::identity();
            out.add(names[mu][nu], max_abs(lhs - expect), tol);
        }
    }
    return out;
}

std::array<Mat2, 3> lower_index(const GammaRep& rep) {
    return {rep.gamma0, -rep.gamma1, -rep.gamma2};
}

VerificationReport product_identities_check(const GammaRep& rep, double tol) {
    VerificationReport out;
    out.add("g0g1=-i*g2", max_abs(rep.gamma0 * rep.gamma1 + kI * rep.gamma2), tol);
    out.add("g1g2=+i*g0", max_abs(rep.gamma1 * rep.gamma2 - kI * rep.gamma0), tol);
    out.add("g2g0=-i*g1", max_abs(rep.gamma2 * rep.gamma0 + kI * rep.gamma1), tol);
    out.add("-i*g0g1g2=I", max_abs(-kI * (rep.gamma0 * rep.gamma1 * rep.gamma2) - Mat2::identity()), tol);
    // pairwise products must be invertible
    double min_det = 1.0;
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu)
            min_det = std::min(min_det, std::abs(det(rep.gamma(mu) * rep.gamma(nu))));
    out.add("pairwise-products-nonsingular", min_det >= 0.5 ? 0.0 : 1.0, tol);
    return out;
}

std::array<Complex, 2> eigen_gamma(const Mat2& m) {
    const double scale = std::max(1.0, fro_norm(m));
    if (normality_residual(m) > 1e-10 * scale * scale)
        throw std::domain_error("eigen_gamma: matrix is not normal");
    const Complex t = trace(m);
    const Complex disc = std::sqrt(t * t - 4.0 * det(m));
    Complex l1 = 0.5 * (t + disc);
    Complex l2 = 0.5 * (t - disc);
    const bool swap = l1.real() < l2.real() ||
                      (l1.real() == l2.real() && l1.imag() < l2.imag());
    if (swap) std::swap(l1, l2);
    return {l1, l2};
}

VerificationReport check_properties(const GammaRep& rep, double tol) {
    VerificationReport out;
    static const char* mu_name[3] = {"g0", "g1", "g2"};
    for (int mu = 0; mu < 3; ++mu) {
        const Mat2& g = rep.gamma(mu);
        out.add(std::string("traceless-") + mu_name[mu], std::abs(trace(g)), tol);
        out.add(std::string("normal-") + mu_name[mu], normality_residual(g), tol);
        const Mat2 sq_expect = Complex{kMetricDiag[mu]} * Mat2::identity();
        out.add(std::string("square-") + mu_name[mu], max_abs(g * g - sq_expect), tol);
    }
    out.add("hermitian-g0", max_abs(rep.gamma0 - adjoint(rep.gamma0)), tol);
    out.add("antihermitian-g1", max_abs(rep.gamma1 + adjoint(rep.gamma1)), tol);
    out.add("antihermitian-g2", max_abs(rep.gamma2 + adjoint(rep.gamma2)), tol);

    {
        const auto ev0 = eigen_gamma(rep.gamma0);
        out.add("eigenvalues-g0",
                std::max(std::abs(ev0[0] - Complex{1.0}), std::abs(ev0[1] - Complex{-1.0})), tol);
        for (int mu = 1; mu < 3; ++mu) {
            const auto ev = eigen_gamma(rep.gamma(mu));
            out.add(std::string("eigenvalues-") + mu_name[mu],
                    std::max(std::abs(ev[0] - kI), std::abs(ev[1] + kI)), tol);
        }
    }

    // column orthonormality of the parameter matrix:
    // a_mu a_nu + b_mu b_nu + c_mu c_nu = delta_{mu nu}
    double col_res = 0.0;
    const SO3Params& p = rep.params;
    for (int mu = 0; mu < 3; ++mu) {
        for (int nu = 0; nu < 3; ++nu) {
            const double s = p.a[mu] * p.a[nu] + p.b[mu] * p.b[nu] + p.c[mu] * p.c[nu];
            col_res = std::max(col_res, std::abs(s - (mu == nu ? 1.0 : 0.0)));
        }
    }
    out.add("element-relations", col_res, tol);

    out.merge(verify_clifford(rep, tol));
    out.merge(product_identities_check(rep, tol));

    // lowered-index anticommutators, 2 g_{mu nu} I
    const auto low = lower_index(rep);
    double low_res = 0.0;
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = mu; nu < 3; ++nu) {
            const double g = mu == nu ? kMetricDiag[mu] : 0.0;
            low_res = std::max(
                low_res, max_abs(anticommutator(low[mu], low[nu]) - Complex{2.0 * g} * Mat2::identity()));
        }
    out.add("lowered-index-clifford", low_res, tol);
    return out;
}

std::array<Mat2, 3> conjugate_representation(const GammaRep& rep, const Mat2& m) {
    const double scale = std::max(1.0, fro_norm(m));
    if (std::abs(det(m)) <= 1e-12 * scale * scale)
        throw std::invalid_argument("conjugate_representation: singular matrix");
    const Mat2 minv = inverse(m);
    return {m * rep.gamma0 * minv, m * rep.gamma1 * minv, m * rep.gamma2 * minv};
}

}  // namespace gamma2p1

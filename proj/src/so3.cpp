#include "gamma2p1/so3.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gamma2p1 {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

namespace {

Vec3 scale3(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 sub3(const Vec3& u, const Vec3& v) { return {u[0] - v[0], u[1] - v[1], u[2] - v[2]}; }

double det3(const Vec3& c, const Vec3& b, const Vec3& a) { return dot3(c, cross3(b, a)); }

double orthonormality_residual(const Vec3& c, const Vec3& b, const Vec3& a) {
    double r = 0.0;
    r = std::max(r, std::abs(norm3(c) - 1.0));
    r = std::max(r, std::abs(norm3(b) - 1.0));
    r = std::max(r, std::abs(norm3(a) - 1.0));
    r = std::max(r, std::abs(dot3(c, b)));
    r = std::max(r, std::abs(dot3(c, a)));
    r = std::max(r, std::abs(dot3(b, a)));
    r = std::max(r, std::abs(det3(c, b, a) - 1.0));
    return r;
}

void require_finite(std::initializer_list<double> xs, const char* what) {
    for (double x : xs)
        if (!std::isfinite(x)) throw std::invalid_argument(what);
}

SO3Params from_quaternion_unchecked(double w, double x, double y, double z) {
    SO3Params p;
    p.c = {1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)};
    p.b = {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)};
    p.a = {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)};
    return p;
}

// splitmix64, used to decorrelate per-sample seeds in a stream.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SO3Params so3_from_euler(double alpha, double beta, double gamma_angle) {
    require_finite({alpha, beta, gamma_angle}, "so3_from_euler: non-finite angle");
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double cg = std::cos(gamma_angle), sg = std::sin(gamma_angle);
    // Rz(alpha) * Ry(beta) * Rz(gamma)
    SO3Params p;
    p.c = {ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb};
    p.b = {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb};
    p.a = {-sb * cg, sb * sg, cb};
    return p;
}

SO3Params so3_from_quaternion(double w, double x, double y, double z) {
    require_finite({w, x, y, z}, "so3_from_quaternion: non-finite component");
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n < 1e-12) throw std::invalid_argument("so3_from_quaternion: near-zero quaternion");
    return from_quaternion_unchecked(w / n, x / n, y / n, z / n);
}

SO3Params so3_from_matrix(const Vec3& c, const Vec3& b, const Vec3& a, bool* reorthonormalized,
                          double accept_tol, double reortho_tol) {
    require_finite({c[0], c[1], c[2], b[0], b[1], b[2], a[0], a[1], a[2]},
                   "so3_from_matrix: non-finite entry");
    if (reorthonormalized) *reorthonormalized = false;
    const double res = orthonormality_residual(c, b, a);
    if (res <= accept_tol) return SO3Params{c, b, a};
    if (res > reortho_tol) throw std::invalid_argument("so3_from_matrix: not special-orthogonal");

    // Gram process on the rows, then cross-product closure for the last one.
    Vec3 cn = scale3(c, 1.0 / norm3(c));
    Vec3 bn = sub3(b, scale3(cn, dot3(cn, b)));
    bn = scale3(bn, 1.0 / norm3(bn));
    Vec3 an = cross3(cn, bn);
    if (dot3(an, a) < 0.0) throw std::invalid_argument("so3_from_matrix: determinant -1 input");
    if (reorthonormalized) *reorthonormalized = true;
    return SO3Params{cn, bn, an};
}

SO3Params so3_random(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double n2;
    do {
        for (double& qi : q) qi = gauss(rng);
        n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    } while (n2 < 1e-24);
    const double inv = 1.0 / std::sqrt(n2);
    return from_quaternion_unchecked(q[0] * inv, q[1] * inv, q[2] * inv, q[3] * inv);
}

SO3Params so3_random_stream(std::uint64_t seed, std::uint64_t index) {
    return so3_random(mix64(seed ^ mix64(index)));
}

VerificationReport so3_validate(const SO3Params& p, double tol) {
    VerificationReport rep;
    rep.add("row-norm-c", std::abs(norm3(p.c) - 1.0), tol);
    rep.add("row-norm-b", std::abs(norm3(p.b) - 1.0), tol);
    rep.add("row-norm-a", std::abs(norm3(p.a) - 1.0), tol);
    rep.add("orthogonality-cb", std::abs(dot3(p.c, p.b)), tol);
    rep.add("orthogonality-ca", std::abs(dot3(p.c, p.a)), tol);
    rep.add("orthogonality-ba", std::abs(dot3(p.b, p.a)), tol);
    rep.add("determinant", std::abs(det3(p.c, p.b, p.a) - 1.0), tol);

    const Vec3 cxb = cross3(p.c, p.b);
    const Vec3 axc = cross3(p.a, p.c);
    const Vec3 bxa = cross3(p.b, p.a);
    double ra = 0.0, rb = 0.0, rc = 0.0;
    for (int i = 0; i < 3; ++i) {
        ra = std::max(ra, std::abs(p.a[i] - cxb[i]));
        rb = std::max(rb, std::abs(p.b[i] - axc[i]));
        rc = std::max(rc, std::abs(p.c[i] - bxa[i]));
    }
    rep.add("cross-closure-a", ra, tol);
    rep.add("cross-closure-b", rb, tol);
    rep.add("cross-closure-c", rc, tol);
    return rep;
}

}  // namespace gamma2p1

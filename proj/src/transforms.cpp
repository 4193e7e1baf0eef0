#include "gamma2p1/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace gamma2p1 {

namespace {

Mat2 closed_form_boost(const Mat2& generator, double theta) {
    const double ch = std::cosh(theta / 2.0), sh = std::sinh(theta / 2.0);
    return Complex{ch} * Mat2::identity() - Complex{sh} * generator;
}

}  // namespace

BoostOp boost_operator(const GammaRep& rep, double theta, int axis) {
    if (!std::isfinite(theta)) throw std::invalid_argument("boost_operator: non-finite rapidity");
    if (std::abs(theta) > kMaxRapidity) throw std::invalid_argument("boost_operator: rapidity-overflow");
    if (axis != 1 && axis != 2) throw std::invalid_argument("boost_operator: axis must be 1 or 2");
    BoostOp b;
    b.axis = axis;
    b.theta = theta;
    b.generator = rep.gamma0 * rep.gamma(axis);
    b.S = closed_form_boost(b.generator, theta);
    b.S_inv = closed_form_boost(b.generator, -theta);
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    b.lambda = {{{ch, -sh}, {-sh, ch}}};
    return b;
}

VerificationReport covariance_check(const GammaRep& rep, const BoostOp& b, double tol) {
    VerificationReport out;
    const double ch = std::cosh(b.theta), sh = std::sinh(b.theta);
    const Mat2& g0 = rep.gamma0;
    const Mat2& ga = rep.gamma(b.axis);
    const Mat2& gother = rep.gamma(b.axis == 1 ? 2 : 1);
    out.add("covariance-g0", max_abs(b.S_inv * g0 * b.S - (Complex{ch} * g0 - Complex{sh} * ga)), tol);
    out.add("covariance-gaxis", max_abs(b.S_inv * ga * b.S - (Complex{ch} * ga - Complex{sh} * g0)), tol);
    out.add("covariance-gother", max_abs(b.S_inv * gother * b.S - gother), tol);
    return out;
}

PlaneWaveSolution boost_spinor(const BoostOp& b, const PlaneWaveSolution& sol) {
    const double ch = std::cosh(b.theta), sh = std::sinh(b.theta);
    const double e = sol.signed_energy();
    const double k_axis = b.axis == 1 ? sol.momentum.k1 : sol.momentum.k2;
    const double e_prime = ch * e - sh * k_axis;
    const double k_prime = ch * k_axis - sh * e;

    PlaneWaveSolution out;
    out.momentum = sol.momentum;
    (b.axis == 1 ? out.momentum.k1 : out.momentum.k2) = k_prime;
    out.branch = e_prime >= 0.0 ? Branch::plus : Branch::minus;
    out.energy = std::abs(e_prime);
    out.spinor = b.S * sol.spinor;
    out.normalization = Normalization::boosted;
    return out;
}

BoostOp boost_compose(const BoostOp& b1, const BoostOp& b2) {
    if (b1.axis != b2.axis) throw std::invalid_argument("boost_compose: axis mismatch");
    if (max_abs(b1.generator - b2.generator) > 1e-12)
        throw std::invalid_argument("boost_compose: boosts belong to different representations");
    const double theta = b1.theta + b2.theta;
    if (std::abs(theta) > kMaxRapidity) throw std::invalid_argument("boost_compose: rapidity-overflow");
    BoostOp b;
    b.axis = b1.axis;
    b.theta = theta;
    b.generator = b1.generator;
    b.S = closed_form_boost(b.generator, theta);
    b.S_inv = closed_form_boost(b.generator, -theta);
    const double ch = std::cosh(theta), sh = std::sinh(theta);
    b.lambda = {{{ch, -sh}, {-sh, ch}}};
    return b;
}

ParityOp parity_operator(const GammaRep& rep, double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("parity_operator: non-finite phase");
    ParityOp p;
    p.phi = phi;
    p.P = std::polar(1.0, phi) * rep.gamma0;
    return p;
}

Vec2 parity_apply(const ParityOp& p, const PlaneWaveSolution& sol) { return p.P * sol.spinor; }

}  // namespace gamma2p1

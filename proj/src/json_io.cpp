#include "gamma2p1/json_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace gamma2p1 {

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vec3_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec2c_to_json(const Vec2& v) {
    return json::array({complex_to_json(v[0]), complex_to_json(v[1])});
}

const char* normalization_name(Normalization n) {
    switch (n) {
        case Normalization::closed_form: return "closed-form";
        case Normalization::numeric_fallback: return "numeric-fallback";
        case Normalization::boosted: return "boosted";
    }
    return "unknown";
}

}  // namespace

json to_json(const Mat2& m) {
    return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                        json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("expected 2x2 matrix");
    Mat2 m;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
    return m;
}

json to_json(const RepDocument& doc) {
    json j;
    j["schema"] = kRepSchema;
    j["so3"] = json::array(
        {vec3_to_json(doc.rep.params.c), vec3_to_json(doc.rep.params.b), vec3_to_json(doc.rep.params.a)});
    j["gammas"] = json::array({to_json(doc.rep.gamma0), to_json(doc.rep.gamma1), to_json(doc.rep.gamma2)});
    j["provenance"] = doc.provenance;
    return j;
}

RepDocument rep_document_from_json(const json& j) {
    if (!j.contains("schema") || j["schema"].get<std::string>() != kRepSchema)
        throw std::invalid_argument("unknown schema version");
    const json& so3 = j.at("so3");
    if (!so3.is_array() || so3.size() != 3) throw std::invalid_argument("so3 must be a 3x3 array");
    SO3Params p{vec3_from_json(so3[0]), vec3_from_json(so3[1]), vec3_from_json(so3[2])};
    RepDocument doc;
    doc.rep = build_representation(p);
    doc.provenance = j.value("provenance", "explicit");
    if (j.contains("gammas")) {
        const json& g = j.at("gammas");
        if (!g.is_array() || g.size() != 3) throw std::invalid_argument("gammas must hold 3 matrices");
        for (int mu = 0; mu < 3; ++mu) {
            const Mat2 stored = mat2_from_json(g[mu]);
            if (max_abs(stored - doc.rep.gamma(mu)) > 1e-12)
                throw std::invalid_argument("embedded gammas disagree with so3 rows");
        }
    }
    return doc;
}

json to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e;
        e["name"] = c.name;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    json j;
    j["passed"] = report.passed();
    j["max_residual"] = report.max_residual();
    j["checks"] = std::move(checks);
    if (!report.warnings.empty()) j["warnings"] = report.warnings;
    return j;
}

json to_json(const PlaneWaveSolution& sol, const GammaRep& rep) {
    json j;
    j["k1"] = sol.momentum.k1;
    j["k2"] = sol.momentum.k2;
    j["m"] = sol.momentum.m;
    j["branch"] = sol.branch == Branch::plus ? "+" : "-";
    j["energy"] = sol.energy;
    j["spinor"] = vec2c_to_json(sol.spinor);
    j["normalization"] = normalization_name(sol.normalization);
    const Vec2 r = dirac_matrix(rep, sol.signed_energy(), sol.momentum) * sol.spinor;
    j["dirac_residual"] = norm(r);
    j["norm"] = norm(sol.spinor);
    return j;
}

json to_json(const BoostOp& b) {
    json j;
    j["theta"] = b.theta;
    j["axis"] = b.axis;
    j["velocity"] = std::tanh(b.theta);
    j["S"] = to_json(b.S);
    j["S_inv"] = to_json(b.S_inv);
    j["lambda"] = json::array({json::array({b.lambda[0][0], b.lambda[0][1]}),
                               json::array({b.lambda[1][0], b.lambda[1][1]})});
    return j;
}

json to_json(const ParityOp& p) {
    json j;
    j["phi"] = p.phi;
    j["P"] = to_json(p.P);
    j["lambda_diag"] = json::array({p.lambda_diag[0], p.lambda_diag[1]});
    return j;
}

json to_json(const IntertwinerResult& res) {
    json j;
    j["M"] = to_json(res.M);
    j["residual"] = res.residual;
    j["commutant_dim"] = res.commutant_dim;
    j["normalized"] = res.normalized;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

}  // namespace gamma2p1

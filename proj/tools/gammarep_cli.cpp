// gammarep: build, verify, and transform 2x2 gamma-matrix representations of
// the 2+1 dimensional Dirac equation from the command line.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamma2p1/clifford.hpp"
#include "gamma2p1/intertwiner.hpp"
#include "gamma2p1/json_io.hpp"
#include "gamma2p1/so3.hpp"
#include "gamma2p1/spinors.hpp"
#include "gamma2p1/transforms.hpp"

namespace {

using namespace gamma2p1;

struct CliError {
    int exit_code;
    std::string code;
    std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& code, const std::string& message) {
    throw CliError{exit_code, code, message};
}

json read_json_input(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) fail(2, "io-error", "cannot open " + path);
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(2, "parse-error", e.what());
    }
}

RepDocument load_rep(const std::string& path) {
    const json j = read_json_input(path);
    try {
        return rep_document_from_json(j);
    } catch (const ConstructionError& e) {
        fail(2, "so3-invalid", e.what());
    } catch (const std::invalid_argument& e) {
        fail(2, "document-invalid", e.what());
    }
}

void emit(const json& j, bool quiet) {
    if (!quiet) std::cout << j.dump(2) << "\n";
}

// "value" or "min:max:count"
struct RangeSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
    bool geometric = false;

    std::vector<double> points() const {
        std::vector<double> out;
        if (count < 1) return out;
        if (count == 1) {
            out.push_back(min);
            return out;
        }
        for (int i = 0; i < count; ++i) {
            if (geometric) {
                const double t = static_cast<double>(i) / (count - 1);
                out.push_back(min * std::pow(max / min, t));
            } else {
                out.push_back(min + (max - min) * i / (count - 1));
            }
        }
        return out;
    }
};

RangeSpec parse_range(const std::string& spec, bool geometric = false) {
    RangeSpec r;
    r.geometric = geometric;
    const auto p1 = spec.find(':');
    if (p1 == std::string::npos) {
        r.min = r.max = std::stod(spec);
        r.count = 1;
        return r;
    }
    const auto p2 = spec.find(':', p1 + 1);
    if (p2 == std::string::npos) fail(2, "range-invalid", "range spec must be value or min:max:count");
    try {
        r.min = std::stod(spec.substr(0, p1));
        r.max = std::stod(spec.substr(p1 + 1, p2 - p1 - 1));
        r.count = std::stoi(spec.substr(p2 + 1));
    } catch (const std::exception&) {
        fail(2, "range-invalid", "malformed range spec: " + spec);
    }
    if (r.count < 1) fail(2, "range-invalid", "empty range: " + spec);
    return r;
}

std::string csv_cell(double v) { return format_double(v); }

// ---------------------------------------------------------------------------

struct BuildOptions {
    std::string preset;
    std::vector<double> euler;
    std::vector<double> quaternion;
    std::vector<double> explicit_rows;
    bool random = false;
    std::uint64_t seed = 0;
};

RepDocument build_from_options(const BuildOptions& o) {
    const int sources = !o.preset.empty() + !o.euler.empty() + !o.quaternion.empty() +
                        !o.explicit_rows.empty() + static_cast<int>(o.random);
    if (sources != 1)
        fail(2, "source-invalid", "exactly one of --preset/--euler/--quaternion/--explicit/--random");
    RepDocument doc;
    try {
        if (!o.preset.empty()) {
            if (o.preset == "standard")
                doc.rep = preset_standard();
            else if (o.preset == "cyclic")
                doc.rep = preset_cyclic();
            else
                fail(2, "preset-unknown", "known presets: standard, cyclic");
            doc.provenance = "preset:" + o.preset;
        } else if (!o.euler.empty()) {
            doc.rep = build_representation(so3_from_euler(o.euler[0], o.euler[1], o.euler[2]));
            doc.provenance = "euler";
        } else if (!o.quaternion.empty()) {
            doc.rep = build_representation(
                so3_from_quaternion(o.quaternion[0], o.quaternion[1], o.quaternion[2], o.quaternion[3]));
            doc.provenance = "quaternion";
        } else if (!o.explicit_rows.empty()) {
            const auto& e = o.explicit_rows;
            bool reortho = false;
            const SO3Params p = so3_from_matrix({e[0], e[1], e[2]}, {e[3], e[4], e[5]},
                                                {e[6], e[7], e[8]}, &reortho);
            doc.rep = build_representation(p);
            doc.provenance = reortho ? "explicit (reorthonormalized)" : "explicit";
        } else {
            doc.rep = build_representation(so3_random(o.seed));
            doc.provenance = "random(" + std::to_string(o.seed) + ")";
        }
    } catch (const ConstructionError& e) {
        fail(2, "so3-invalid", e.what());
    } catch (const std::invalid_argument& e) {
        fail(2, "so3-invalid", e.what());
    }
    return doc;
}

PlaneWaveSolution make_spinor(const GammaRep& rep, double k1, double k2, double m,
                              const std::string& branch) {
    if (branch != "+" && branch != "-") fail(2, "branch-invalid", "branch must be + or -");
    try {
        return spinor(rep, Momentum{k1, k2, m}, branch == "+" ? Branch::plus : Branch::minus);
    } catch (const std::invalid_argument& e) {
        fail(2, "momentum-invalid", e.what());
    }
}

struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // cells in canonical form

    void emit(const std::string& output, bool quiet) const {
        if (quiet) return;
        if (output == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = json::parse(row[i]);
                arr.push_back(std::move(obj));
            }
            std::cout << arr.dump(2) << "\n";
            return;
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << '\n';
        }
        std::cout << out.str();
    }
};

void run_sweep(const std::string& kind, const std::string& k1_spec, const std::string& k2_spec,
               const std::string& m_spec, const std::string& theta_spec, int seeds,
               const std::string& t_spec, std::uint64_t seed, const std::string& output, bool quiet) {
    SweepTable table;
    if (kind == "dispersion") {
        const auto k1s = parse_range(k1_spec).points();
        const auto k2s = parse_range(k2_spec).points();
        const auto ms = parse_range(m_spec).points();
        if (k1s.empty() || k2s.empty() || ms.empty()) fail(2, "range-invalid", "empty range");
        table.header = {"k1", "k2", "m", "E_plus", "E_minus"};
        for (double k1 : k1s)
            for (double k2 : k2s)
                for (double m : ms) {
                    const auto e = dispersion(Momentum{k1, k2, m});
                    table.rows.push_back(
                        {csv_cell(k1), csv_cell(k2), csv_cell(m), csv_cell(e[0]), csv_cell(e[1])});
                }
    } else if (kind == "covariance") {
        const auto thetas = parse_range(theta_spec).points();
        if (thetas.empty() || seeds < 1) fail(2, "range-invalid", "empty range");
        table.header = {"seed", "theta", "axis", "max_residual"};
        for (int s = 0; s < seeds; ++s) {
            const GammaRep rep = build_representation(so3_random_stream(seed, static_cast<std::uint64_t>(s)));
            for (double theta : thetas)
                for (int axis : {1, 2}) {
                    const BoostOp b = boost_operator(rep, theta, axis);
                    const double res = covariance_check(rep, b).max_residual();
                    table.rows.push_back(
                        {std::to_string(s), csv_cell(theta), std::to_string(axis), csv_cell(res)});
                }
        }
    } else if (kind == "normalization-degeneracy") {
        // family with unit row c = (-1, 0, 0): at momentum (t, 0, m=1) the
        // closed-form denominator is sqrt(1 + t^2) - 1 -> 0 as t -> 0
        auto ts = parse_range(t_spec, /*geometric=*/true).points();
        if (ts.empty()) fail(2, "range-invalid", "empty range");
        std::sort(ts.begin(), ts.end(), std::greater<double>());
        const GammaRep rep = build_representation(
            SO3Params{{-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, -1.0}});
        table.header = {"t", "denominator", "fallback", "norm_error", "dirac_residual"};
        for (double t : ts) {
            const Momentum mom{t, 0.0, 1.0};
            const PlaneWaveSolution sol = spinor(rep, mom, Branch::plus);
            const double denom = normalization_denominator(rep, mom);
            const bool fallback = sol.normalization == Normalization::numeric_fallback;
            const double norm_err = std::abs(norm(sol.spinor) - 1.0);
            const double resid = norm(dirac_matrix(rep, sol.signed_energy(), mom) * sol.spinor);
            table.rows.push_back({csv_cell(t), csv_cell(denom), fallback ? "1" : "0",
                                  csv_cell(norm_err), csv_cell(resid)});
        }
    } else {
        fail(2, "kind-unknown", "known kinds: dispersion, covariance, normalization-degeneracy");
    }
    table.emit(output, quiet);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2x2 gamma-matrix representations of the 2+1 dimensional Dirac equation"};
    app.require_subcommand(1);

    double tol = 1e-12;
    std::uint64_t seed = 0;
    bool quiet = false;
    std::string output;  // empty = per-command default (json; csv for sweeps)
    app.add_option("--tol", tol, "verification tolerance")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--output", output, "output format (json|csv, where applicable)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--quiet", quiet, "suppress stdout payload, keep exit codes");

    // rep build / rep check
    auto* rep_cmd = app.add_subcommand("rep", "build or check a representation document");
    rep_cmd->require_subcommand(1);
    auto* build_cmd = rep_cmd->add_subcommand("build", "construct a representation");
    BuildOptions bo;
    build_cmd->add_option("--preset", bo.preset, "standard | cyclic");
    build_cmd->add_option("--euler", bo.euler, "ZYZ Euler angles (radians)")->expected(3);
    build_cmd->add_option("--quaternion", bo.quaternion, "quaternion w x y z")->expected(4);
    build_cmd->add_option("--explicit", bo.explicit_rows, "rows c b a, 9 values")->expected(9);
    build_cmd->add_flag("--random", bo.random, "Haar-uniform random rotation (uses --seed)");

    auto* check_cmd = rep_cmd->add_subcommand("check", "verify all algebraic properties");
    std::string check_input = "-";
    check_cmd->add_option("input", check_input, "document path or - for stdin");

    // spinor
    auto* spinor_cmd = app.add_subcommand("spinor", "plane-wave spinor for a representation");
    std::string sp_rep = "-";
    double sp_k1 = 0.0, sp_k2 = 0.0, sp_m = 0.0;
    std::string sp_branch = "+";
    spinor_cmd->add_option("--rep", sp_rep, "representation document (- for stdin)");
    spinor_cmd->add_option("--k1", sp_k1, "momentum component 1")->capture_default_str();
    spinor_cmd->add_option("--k2", sp_k2, "momentum component 2")->capture_default_str();
    spinor_cmd->add_option("--m", sp_m, "mass")->capture_default_str();
    spinor_cmd->add_option("--branch", sp_branch, "energy branch (+ or -)")->capture_default_str();

    // boost
    auto* boost_cmd = app.add_subcommand("boost", "Lorentz boost operator, optionally applied to a spinor");
    std::string bt_rep = "-";
    double bt_theta = 0.0;
    int bt_axis = 1;
    bool bt_with_spinor = false;
    double bt_k1 = 0.0, bt_k2 = 0.0, bt_m = 0.0;
    std::string bt_branch = "+";
    boost_cmd->add_option("--rep", bt_rep, "representation document");
    boost_cmd->add_option("--theta", bt_theta, "rapidity")->capture_default_str();
    boost_cmd->add_option("--axis", bt_axis, "boost axis (1 or 2)")->capture_default_str();
    boost_cmd->add_flag("--with-spinor", bt_with_spinor, "also boost the spinor at --k1/--k2/--m/--branch");
    boost_cmd->add_option("--k1", bt_k1, "");
    boost_cmd->add_option("--k2", bt_k2, "");
    boost_cmd->add_option("--m", bt_m, "");
    boost_cmd->add_option("--branch", bt_branch, "");

    // parity
    auto* parity_cmd = app.add_subcommand("parity", "parity operator, optionally applied to a spinor");
    std::string pa_rep = "-";
    double pa_phi = 0.0;
    bool pa_with_spinor = false;
    double pa_k1 = 0.0, pa_k2 = 0.0, pa_m = 0.0;
    std::string pa_branch = "+";
    parity_cmd->add_option("--rep", pa_rep, "representation document");
    parity_cmd->add_option("--phi", pa_phi, "global phase")->capture_default_str();
    parity_cmd->add_flag("--with-spinor", pa_with_spinor, "also apply P to the spinor at --k1/--k2/--m/--branch");
    parity_cmd->add_option("--k1", pa_k1, "");
    parity_cmd->add_option("--k2", pa_k2, "");
    parity_cmd->add_option("--m", pa_m, "");
    parity_cmd->add_option("--branch", pa_branch, "");

    // intertwine
    auto* inter_cmd = app.add_subcommand("intertwine", "similarity transform between two representations");
    std::string in_a, in_b;
    inter_cmd->add_option("repA", in_a, "first document")->required();
    inter_cmd->add_option("repB", in_b, "second document")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid evaluation, CSV on stdout");
    std::string sw_kind;
    std::string sw_k1 = "0", sw_k2 = "0", sw_m = "0", sw_theta = "-3:3:61", sw_t = "1e-6:1e-2:25";
    int sw_seeds = 1;
    sweep_cmd->add_option("--kind", sw_kind, "dispersion | covariance | normalization-degeneracy")->required();
    sweep_cmd->add_option("--k1", sw_k1, "range spec value or min:max:count");
    sweep_cmd->add_option("--k2", sw_k2, "range spec");
    sweep_cmd->add_option("--m", sw_m, "range spec");
    sweep_cmd->add_option("--theta", sw_theta, "rapidity range spec");
    sweep_cmd->add_option("--seeds", sw_seeds, "number of random representations");
    sweep_cmd->add_option("--t", sw_t, "degeneracy family parameter range (geometric)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build_cmd->parsed()) {
            bo.seed = seed;
            emit(to_json(build_from_options(bo)), quiet);
        } else if (check_cmd->parsed()) {
            const RepDocument doc = load_rep(check_input);
            VerificationReport report = check_properties(doc.rep, tol);
            report.merge(so3_validate(doc.rep.params, tol > 1e-10 ? tol : 1e-10));
            if (output == "csv") {
                if (!quiet) {
                    std::cout << "name,residual,tolerance,passed\n";
                    for (const auto& c : report.checks)
                        std::cout << c.name << ',' << csv_cell(c.residual) << ','
                                  << csv_cell(c.tolerance) << ',' << (c.passed ? 1 : 0) << '\n';
                }
            } else {
                emit(to_json(report), quiet);
            }
            return report.passed() ? 0 : 3;
        } else if (spinor_cmd->parsed()) {
            const RepDocument doc = load_rep(sp_rep);
            const PlaneWaveSolution sol = make_spinor(doc.rep, sp_k1, sp_k2, sp_m, sp_branch);
            emit(to_json(sol, doc.rep), quiet);
        } else if (boost_cmd->parsed()) {
            const RepDocument doc = load_rep(bt_rep);
            BoostOp b;
            try {
                b = boost_operator(doc.rep, bt_theta, bt_axis);
            } catch (const std::invalid_argument& e) {
                fail(2, "rapidity-overflow", e.what());
            }
            json j = to_json(b);
            j["covariance"] = to_json(covariance_check(doc.rep, b, tol));
            if (bt_with_spinor) {
                const PlaneWaveSolution sol = make_spinor(doc.rep, bt_k1, bt_k2, bt_m, bt_branch);
                j["input_spinor"] = to_json(sol, doc.rep);
                j["boosted_spinor"] = to_json(boost_spinor(b, sol), doc.rep);
            }
            emit(j, quiet);
        } else if (parity_cmd->parsed()) {
            const RepDocument doc = load_rep(pa_rep);
            const ParityOp p = parity_operator(doc.rep, pa_phi);
            json j = to_json(p);
            if (pa_with_spinor) {
                const PlaneWaveSolution sol = make_spinor(doc.rep, pa_k1, pa_k2, pa_m, pa_branch);
                j["input_spinor"] = to_json(sol, doc.rep);
                const Vec2 pu = parity_apply(p, sol);
                j["parity_spinor"] = json::array(
                    {json::array({pu[0].real(), pu[0].imag()}), json::array({pu[1].real(), pu[1].imag()})});
            }
            emit(j, quiet);
        } else if (inter_cmd->parsed()) {
            const RepDocument da = load_rep(in_a);
            const RepDocument db = load_rep(in_b);
            const double itol = tol < 1e-9 ? 1e-9 : tol;
            try {
                const IntertwinerResult res = find_intertwiner(da.rep, db.rep, itol);
                emit(to_json(res), quiet);
            } catch (const InconsistencyError& e) {
                fail(3, "inequivalent", e.what());
            } catch (const DegenerateSolutionError& e) {
                fail(4, "degenerate-solution", e.what());
            }
        } else if (sweep_cmd->parsed()) {
            run_sweep(sw_kind, sw_k1, sw_k2, sw_m, sw_theta, sw_seeds, sw_t, seed,
                      output.empty() ? "csv" : output, quiet);
        }
        return 0;
    } catch (const CliError& e) {
        json err;
        err["error"] = e.code;
        err["message"] = e.message;
        std::cerr << err.dump() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 4;
    }
}

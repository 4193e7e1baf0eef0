#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamma2p1 {

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Structured pass/fail record with per-check residuals.
struct VerificationReport {
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    void add(std::string name, double residual, double tolerance) {
        checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.residual);
        return r;
    }

    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
};

/// Construction rejected because the input failed validation.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, VerificationReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const VerificationReport& report() const { return report_; }

private:
    VerificationReport report_;
};

/// A quantity that must hold by construction failed to, numerically.
class InconsistencyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A solver produced a structurally unusable solution (e.g. singular intertwiner).
class DegenerateSolutionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gamma2p1

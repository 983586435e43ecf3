#include "spinorlab/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace spinorlab {

bool VerificationReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CheckResult& VerificationReport::add(std::string id, std::string identity, double residual,
                                     double tol, std::string note) {
    checks.push_back({std::move(id), std::move(identity), residual, tol, residual <= tol,
                      std::move(note)});
    return checks.back();
}

CheckResult& VerificationReport::addExact(std::string id, std::string identity, bool ok,
                                          std::string note) {
    checks.push_back({std::move(id), std::move(identity), ok ? 0.0 : 1.0, 0.0, ok,
                      std::move(note)});
    return checks.back();
}

void VerificationReport::absorb(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json toJson(const CheckResult& c) {
    nlohmann::json j;
    j["id"] = c.id;
    j["identity"] = c.identity;
    j["residual"] = c.residual;
    j["tol"] = c.tol;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

nlohmann::json toJson(const VerificationReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) j["checks"].push_back(toJson(c));
    return j;
}

nlohmann::json toJson(const Complex& z) {
    // +0.0 normalizes the negative zeros that signed arithmetic leaves behind
    return nlohmann::json::array({z.real() + 0.0, z.imag() + 0.0});
}

nlohmann::json toJson(const MatrixC& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::string toText(const VerificationReport& r, bool withTiming) {
    std::ostringstream os;
    os << "suite " << r.suite << "  seed=" << r.seed << "  samples=" << r.samples
       << "  tol=" << r.tolerance << "\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.id << "  " << c.identity
           << "  residual=" << c.residual;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    os << (r.pass() ? "PASS" : "FAIL");
    if (withTiming) os << "  (" << r.seconds << " s)";
    os << "\n";
    return os.str();
}

}  // namespace spinorlab

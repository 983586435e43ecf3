#pragma once

// Structured results of identity checks.  A check records the identity in
// formula form, the worst residual seen, the tolerance it was held to, and
// free-form notes (discovered phases, sign conventions, comparison tables).
// Reports serialize to JSON deterministically; wall time is kept out of the
// serialized form so fixed-seed runs are byte-identical.

#include "spinorlab/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace spinorlab {

struct CheckResult {
    std::string id;         // stable slug, e.g. "majorana/biorthonormal"
    std::string identity;   // the identity in formula form
    double residual = 0.0;  // max residual observed
    double tol = 0.0;
    bool pass = false;
    std::string note;       // optional finding
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    double tolerance = 0.0;
    std::vector<CheckResult> checks;
    double seconds = 0.0;   // excluded from JSON

    bool pass() const;

    // residual-vs-tolerance check
    CheckResult& add(std::string id, std::string identity, double residual, double tol,
                     std::string note = "");
    // boolean check (exact arithmetic); residual reported as 0 or 1
    CheckResult& addExact(std::string id, std::string identity, bool ok,
                          std::string note = "");
    void absorb(const VerificationReport& other);   // append checks
};

nlohmann::json toJson(const CheckResult& c);
nlohmann::json toJson(const VerificationReport& r);
std::string toText(const VerificationReport& r, bool withTiming = false);

// complex numbers serialize as [re, im]; matrices row-major, for golden-file
// comparisons of the fixed tables
nlohmann::json toJson(const Complex& z);
nlohmann::json toJson(const MatrixC& m);

}  // namespace spinorlab

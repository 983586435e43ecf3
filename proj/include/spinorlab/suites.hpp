#pragma once

// Seeded randomized verification suites, one per module, shared by the CLI
// and the acceptance tests.  Fixed seed and configuration give byte-identical
// JSON output.

#include "spinorlab/algebra.hpp"
#include "spinorlab/report.hpp"

#include <nlohmann/json_fwd.hpp>

#include <random>

namespace spinorlab {

struct RunConfig {
    std::uint64_t seed = 7;
    int samples = 1000;
    double tol = kDefaultTol;
};

// m in [0.1, 10], |p| in [0, pMaxFactor * m], isotropic direction
class MomentumSampler {
public:
    explicit MomentumSampler(std::uint64_t seed) : rng_(seed) {}
    FourMomentum sample(double mMin = 0.1, double mMax = 10.0, double pMaxFactor = 10.0);
    double uniform(double lo, double hi);
    Vec3 direction();

private:
    std::mt19937_64 rng_;
};

VerificationReport runDiracSuite(const RunConfig& cfg);
VerificationReport runMajoranaSuite(const RunConfig& cfg);
VerificationReport runFockSuite(const RunConfig& cfg);
VerificationReport runMaxwellSuite(const RunConfig& cfg);
VerificationReport runWeinbergSuite(const RunConfig& cfg);
VerificationReport runModeexpandSuite(const RunConfig& cfg);

std::vector<VerificationReport> runSuites(const std::string& suite, const RunConfig& cfg);
bool knownSuite(const std::string& suite);
nlohmann::json suitesToJson(const std::vector<VerificationReport>& reports,
                            const RunConfig& cfg);

}  // namespace spinorlab

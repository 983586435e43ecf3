// spinorlab command line: construct spinors, run identity suites, print
// dispersion-root tables.  Exit codes: 0 all pass, 1 identity failure,
// 2 usage error.

#include "spinorlab/dirac.hpp"
#include "spinorlab/majorana.hpp"
#include "spinorlab/maxwell.hpp"
#include "spinorlab/modeexpand.hpp"
#include "spinorlab/suites.hpp"
#include "spinorlab/weinberg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>

namespace {

using namespace spinorlab;

nlohmann::json complexJson(const Complex& z) {
    return nlohmann::json::array({z.real() + 0.0, z.imag() + 0.0});
}

nlohmann::json vectorJson(const VectorC& v) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) j.push_back(complexJson(v[i]));
    return j;
}

std::string formatComplex(const Complex& z) {
    std::ostringstream os;
    os << std::setprecision(10) << z.real();
    if (z.imag() >= 0)
        os << " + " << z.imag() << "i";
    else
        os << " - " << -z.imag() << "i";
    return os.str();
}

Vec3 parseVec3(const std::string& s) {
    Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    is >> v.x() >> c1 >> v.y() >> c2 >> v.z();
    if (is.fail() || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("--p", "expected px,py,pz");
    return v;
}

double defaultTol() {
    if (const char* env = std::getenv("SPINORLAB_TOL")) {
        const double v = std::atof(env);
        if (v > 0.0) return v;
    }
    return kDefaultTol;
}

struct SpinorArgs {
    std::string kind;
    std::string sigma = "+1/2";
    std::string conjClass = "S";
    std::string eta = "up";
    std::string momentum = "0,0,0";
    double mass = 0.0;
    std::string basis = "standard";
    std::string format = "text";
};

int runSpinor(const SpinorArgs& a) {
    const Vec3 pv = parseVec3(a.momentum);
    const FourMomentum p(a.mass, pv);
    VectorC value, crossCheck;
    std::string label;

    const auto sigmaHalf = [&]() -> double {
        if (a.sigma == "+1/2" || a.sigma == "0.5" || a.sigma == "+0.5") return +0.5;
        if (a.sigma == "-1/2" || a.sigma == "-0.5") return -0.5;
        throw CLI::ValidationError("--sigma", "expected +1/2 or -1/2");
    };
    const auto sigmaOne = [&]() -> int {
        if (a.sigma == "+1" || a.sigma == "1") return +1;
        if (a.sigma == "0") return 0;
        if (a.sigma == "-1") return -1;
        throw CLI::ValidationError("--sigma", "expected +1, 0 or -1");
    };
    const auto basisOf = [&]() -> SpinorBasis {
        if (a.basis == "standard") return SpinorBasis::standard;
        if (a.basis == "chiral") return SpinorBasis::chiral;
        if (a.basis == "helicity") return SpinorBasis::helicity;
        throw CLI::ValidationError("--basis", "expected standard, chiral or helicity");
    };
    const auto classOf = [&]() -> ConjClass {
        if (a.conjClass == "S") return ConjClass::S;
        if (a.conjClass == "A") return ConjClass::A;
        throw CLI::ValidationError("--class", "expected S or A");
    };
    const auto etaOf = [&]() -> Eta {
        if (a.eta == "up") return Eta::up;
        if (a.eta == "down") return Eta::down;
        throw CLI::ValidationError("--eta", "expected up or down");
    };

    if (a.kind == "u") {
        const SpinorBasis b = basisOf();
        value = uSpinor(p, sigmaHalf(), b).components;
        crossCheck = uSpinorViaBoost(p, sigmaHalf(), b).components;
        label = "u_" + a.sigma + " (" + a.basis + ")";
    } else if (a.kind == "v") {
        const SpinorBasis b = basisOf();
        value = vSpinor(p, sigmaHalf(), b).components;
        const GammaBasis gb = gammaBasisFor(b);
        crossCheck = gamma(5, gb) * uSpinorViaBoost(p, sigmaHalf(), b).components;
        label = "v_" + a.sigma + " (" + a.basis + ")";
    } else if (a.kind == "lambda") {
        value = lambdaSpinor(classOf(), etaOf(), p).components;
        crossCheck = lambdaViaBoost(classOf(), etaOf(), p).components;
        label = "lambda^" + a.conjClass + "_" + a.eta;
    } else if (a.kind == "rho") {
        value = rhoSpinor(classOf(), etaOf(), p).components;
        crossCheck = rhoViaBoost(classOf(), etaOf(), p).components;
        label = "rho^" + a.conjClass + "_" + a.eta;
    } else if (a.kind == "u1") {
        value = u1Spinor(p, sigmaOne()).components;
        crossCheck = u1ViaBoost(p, sigmaOne(), BivectorRep::standard).components;
        label = "u_" + a.sigma + " (spin 1)";
    } else if (a.kind == "v1") {
        value = v1Spinor(p, sigmaOne()).components;
        const Bivector boost = u1ViaBoost(p, sigmaOne(), BivectorRep::standard);
        MatrixC g5 = MatrixC::Zero(6, 6);
        g5.block(0, 3, 3, 3) = MatrixC::Identity(3, 3);
        g5.block(3, 0, 3, 3) = MatrixC::Identity(3, 3);
        crossCheck = g5 * boost.components;
        label = "v_" + a.sigma + " (spin 1)";
    } else {
        throw CLI::ValidationError("--kind", "expected u, v, lambda, rho, u1 or v1");
    }

    const double diff = (value - crossCheck).cwiseAbs().maxCoeff();
    if (a.format == "json") {
        nlohmann::json j;
        j["kind"] = a.kind;
        j["label"] = label;
        j["momentum"] = {pv.x(), pv.y(), pv.z()};
        j["mass"] = a.mass;
        j["components"] = vectorJson(value);
        j["closedFormReference"] = vectorJson(crossCheck);
        j["maxDiff"] = diff;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << label << "  p = (" << pv.x() << ", " << pv.y() << ", " << pv.z()
                  << "), m = " << a.mass << "\n";
        std::cout << std::left << std::setw(36) << "  constructed" << "closed-form reference\n";
        for (int i = 0; i < value.size(); ++i)
            std::cout << "  " << std::left << std::setw(34) << formatComplex(value[i])
                      << formatComplex(crossCheck[i]) << "\n";
        std::cout << "max |difference| = " << diff << "\n";
    }
    return diff <= 1e-9 ? 0 : 1;
}

int runVerify(const std::string& suite, const RunConfig& cfg, const std::string& format) {
    if (!knownSuite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    const auto reports = runSuites(suite, cfg);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (format == "json") {
        std::cout << suitesToJson(reports, cfg).dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << toText(r, true);
    }
    double total = 0.0;
    for (const auto& r : reports) total += r.seconds;
    std::cerr << "wall time " << total << " s\n";
    return pass ? 0 : 1;
}

int runDispersion(const std::string& model, double A, double B, double alpha, double beta,
                  const std::string& momentum, double mass, const std::string& format) {
    const Vec3 pv = parseVec3(momentum);
    nlohmann::json j;
    j["model"] = model;
    std::ostringstream text;
    int exitCode = 0;
    if (model == "maxwell") {
        const auto roots = clusterRoots(rsDeterminant(pv).roots(), 1e-6);
        text << "Det[E - S.p] roots (|p| = " << pv.norm() << "):\n";
        j["roots"] = nlohmann::json::array();
        for (const auto& root : roots) {
            const std::string cls = std::abs(root.value) < 1e-9 ? "acausal-E0" : "causal";
            j["roots"].push_back({{"E", complexJson(root.value)},
                                  {"multiplicity", root.multiplicity},
                                  {"class", cls}});
            text << "  E = " << formatComplex(root.value) << "  x" << root.multiplicity << "  ["
                 << cls << "]\n";
        }
    } else if (model == "barut") {
        const auto spectrum = barutMassSpectrum(alpha, beta, mass);
        j["roots"] = spectrum.masses;
        if (!spectrum.note.empty()) j["note"] = spectrum.note;
        text << "positive mass roots:";
        for (double w : spectrum.masses) text << " " << w;
        if (!spectrum.note.empty()) text << "  (" << spectrum.note << ")";
        text << "\n";
    } else if (model == "wth") {
        const DispersionResult d = dispersionSpectrum(A, B, pv, mass);
        j["degree"] = d.degree;
        j["roots"] = nlohmann::json::array();
        text << "degree " << d.degree << " determinant, roots:\n";
        for (size_t i = 0; i < d.roots.size(); ++i) {
            j["roots"].push_back({{"E", complexJson(d.roots[i].value)},
                                  {"multiplicity", d.roots[i].multiplicity},
                                  {"class", d.classification[i]}});
            text << "  E = " << formatComplex(d.roots[i].value) << "  x"
                 << d.roots[i].multiplicity << "  [" << d.classification[i] << "]\n";
        }
        j["allRelativistic"] = d.allRelativistic;
        text << (d.allRelativistic ? "all roots satisfy E^2 = p^2 + m^2\n"
                                   : "non-relativistic branches flagged\n");
    } else {
        std::cerr << "unknown model: " << model << "\n";
        return 2;
    }
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return exitCode;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spinorlab: builds momentum-space spinor objects and machine-checks the "
        "identities they satisfy"};
    app.require_subcommand(1);

    SpinorArgs sa;
    CLI::App* spinor = app.add_subcommand("spinor", "print a spinor next to its closed form");
    spinor->add_option("--kind", sa.kind, "u | v | lambda | rho | u1 | v1")->required();
    spinor->add_option("--sigma", sa.sigma, "+1/2, -1/2 (or +1, 0, -1 for spin 1)");
    spinor->add_option("--class", sa.conjClass, "S | A");
    spinor->add_option("--eta", sa.eta, "up | down");
    spinor->add_option("--p", sa.momentum, "px,py,pz");
    spinor->add_option("--m", sa.mass, "mass > 0")->required();
    spinor->add_option("--basis", sa.basis, "standard | chiral | helicity");
    spinor->add_option("--format", sa.format, "text | json");

    std::string suite = "all";
    RunConfig cfg;
    cfg.tol = defaultTol();
    std::string verifyFormat = "json";
    CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", suite,
                       "dirac | majorana | fock | maxwell | weinberg | modeexpand | all");
    verify->add_option("--samples", cfg.samples, "random momenta per suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--format", verifyFormat, "json | text");

    std::string model, dMomentum = "0,0,1";
    double A = 1.0, B = 2.0, alpha = 0.0, beta = 1.0, dMass = 1.0;
    std::string dFormat = "text";
    CLI::App* dispersion = app.add_subcommand("dispersion", "root tables of dispersion relations");
    dispersion->add_option("--model", model, "wth | barut | maxwell")->required();
    dispersion->add_option("--A", A, "wth quadratic coefficient");
    dispersion->add_option("--B", B, "wth mass coefficient");
    dispersion->add_option("--alpha", alpha, "barut second-derivative coefficient");
    dispersion->add_option("--beta", beta, "barut mass coefficient");
    dispersion->add_option("--p", dMomentum, "px,py,pz");
    dispersion->add_option("--m", dMass, "mass");
    dispersion->add_option("--format", dFormat, "text | json");

    std::string reportFormat = "json";
    RunConfig reportCfg;
    reportCfg.tol = defaultTol();
    CLI::App* report = app.add_subcommand(
        "report", "aggregated run of every suite, including the printed-table comparisons");
    report->add_option("--samples", reportCfg.samples, "random momenta per suite")
        ->check(CLI::PositiveNumber);
    report->add_option("--seed", reportCfg.seed, "RNG seed");
    report->add_option("--format", reportFormat, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    try {
        if (spinor->parsed()) return runSpinor(sa);
        if (verify->parsed()) return runVerify(suite, cfg, verifyFormat);
        if (dispersion->parsed())
            return runDispersion(model, A, B, alpha, beta, dMomentum, dMass, dFormat);
        if (report->parsed()) return runVerify("all", reportCfg, reportFormat);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}

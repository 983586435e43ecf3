#include "spinorlab/suites.hpp"

#include "spinorlab/dirac.hpp"
#include "spinorlab/fockalg.hpp"
#include "spinorlab/majorana.hpp"
#include "spinorlab/maxwell.hpp"
#include "spinorlab/modeexpand.hpp"
#include "spinorlab/poly.hpp"
#include "spinorlab/weinberg.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace spinorlab {

namespace {

const Complex I{0.0, 1.0};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

FourMomentum MomentumSampler::sample(double mMin, double mMax, double pMaxFactor) {
    const double m = uniform(mMin, mMax);
    const double pmag = uniform(0.0, pMaxFactor * m);
    return FourMomentum(m, pmag * direction());
}

double MomentumSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vec3 MomentumSampler::direction() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
}

VerificationReport runDiracSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "dirac";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = cfg.tol;
    MomentumSampler sampler(cfg.seed);

    const SpinorBasis bases[3] = {SpinorBasis::standard, SpinorBasis::chiral,
                                  SpinorBasis::helicity};
    double worstResidual = 0.0, worstGram = 0.0, worstParity = 0.0, worstInvolution = 0.0;
    double worstMatrixForm = 0.0, worstDual = 0.0;
    double minHelicityCommutator = 1e300;
    const MatrixC id2 = MatrixC::Identity(2, 2);
    for (int i = 0; i < cfg.samples; ++i) {
        const FourMomentum p = sampler.sample();
        for (SpinorBasis basis : bases) {
            for (double sigma : {+0.5, -0.5}) {
                worstResidual = std::max(worstResidual, diracResidual(uSpinor(p, sigma, basis)));
                worstResidual = std::max(worstResidual, diracResidual(vSpinor(p, sigma, basis)));
            }
            const GramMatrices g = gramNormalization(p, basis);
            worstGram = std::max({worstGram, maxAbsDiff(g.ubar_u, id2),
                                  maxAbsDiff(g.vbar_v, -id2), maxAbs(g.ubar_v)});
        }
        for (double sigma : {+0.5, -0.5}) {
            const Bispinor u = uSpinor(p, sigma, SpinorBasis::standard);
            const Bispinor v = vSpinor(p, sigma, SpinorBasis::standard);
            worstParity = std::max(worstParity,
                                   (parityApply(u).components - u.components).norm());
            worstParity = std::max(worstParity,
                                   (parityApply(v).components + v.components).norm());
            worstInvolution = std::max(
                worstInvolution, (parityApply(parityApply(u)).components - u.components).norm());
            worstDual = std::max(worstDual,
                                 (uSpinorViaBoost(p, sigma, SpinorBasis::chiral).components -
                                  uSpinor(p, sigma, SpinorBasis::chiral).components)
                                     .norm());
        }
        // matrix form (-+m, p0 + sigma.p; p0 - sigma.p, -+m) on chiral u/v
        MatrixC block = MatrixC::Zero(4, 4);
        block.block(0, 2, 2, 2) = p.p0() * id2 + pauliDot(p.p());
        block.block(2, 0, 2, 2) = p.p0() * id2 - pauliDot(p.p());
        const MatrixC mId = p.mass() * MatrixC::Identity(4, 4);
        worstMatrixForm = std::max(
            worstMatrixForm,
            ((block - mId) * uSpinor(p, 0.5, SpinorBasis::chiral).components).norm());
        worstMatrixForm = std::max(
            worstMatrixForm,
            ((block + mId) * vSpinor(p, -0.5, SpinorBasis::chiral).components).norm());
        // helicity states are not parity eigenstates
        if (p.pNorm() > 0.0) {
            const Bispinor uh = uSpinor(p, +0.5, SpinorBasis::helicity);
            MatrixC h = MatrixC::Zero(4, 4);
            h.block(0, 0, 2, 2) = pauliDot(p.nHat());
            h.block(2, 2, 2, 2) = pauliDot(p.nHat());
            const MatrixC g0 = gamma(0, GammaBasis::chiral);
            // [P, h] psi = gamma^0 h(-p) psi(-p) - h(p) gamma^0 psi(-p)
            const VectorC atRev = uSpinor(p.reversed3(), +0.5, SpinorBasis::helicity).components;
            const VectorC comm = g0 * (-h) * atRev - h * (g0 * atRev);
            minHelicityCommutator =
                std::min(minHelicityCommutator, comm.norm() / uh.components.norm());
        }
    }
    r.add("dirac/residuals", "(gamma.p -+ m) psi = 0 for u, v in three bases", worstResidual,
          cfg.tol);
    r.add("dirac/gram", "ubar u = +delta, vbar v = -delta, ubar v = 0", worstGram, cfg.tol);
    r.add("dirac/parity", "P u = +u, P v = -v", worstParity, cfg.tol);
    r.add("dirac/parity-involution", "P P psi = psi", worstInvolution, cfg.tol);
    r.add("dirac/matrix-form", "(-+m, p0 + sigma.p; p0 - sigma.p, -+m) psi = 0",
          worstMatrixForm, cfg.tol);
    r.add("dirac/dual-construction", "closed forms equal the Wigner-boost construction",
          worstDual, cfg.tol);
    r.addExact("dirac/helicity-not-parity", "[P, h] u_h != 0", minHelicityCommutator > 0.1,
               "smallest commutator norm ratio seen: " + std::to_string(minHelicityCommutator));

    // two-mass spectrum of the second-order extension
    const auto barut = barutMassSpectrum(1.0, 1.0, 1.0);
    const double golden = 0.5 * (std::sqrt(5.0) + 1.0);
    double barutResidual = 1.0;
    if (barut.masses.size() == 2)
        barutResidual = std::max(std::abs(barut.masses[0] - (golden - 1.0)),
                                 std::abs(barut.masses[1] - golden));
    // determinant-scan oracle at the reported roots
    double detAtRoots = 0.0;
    for (double w : barut.masses) {
        const MatrixC op = w * gamma(0, GammaBasis::chiral) +
                           (1.0 * w * w / 1.0 - 1.0) * MatrixC::Identity(4, 4);
        detAtRoots = std::max(detAtRoots, std::abs(op.determinant()));
    }
    r.add("dirac/barut-roots", "alpha=1, beta=m gives W = m (sqrt5 -+ 1)/2", barutResidual,
          1e-8);
    r.add("dirac/barut-det-oracle", "Det[gamma.p + alpha p^2/m - beta] = 0 at the roots",
          detAtRoots, 1e-7);
    r.seconds = watch.seconds();
    return r;
}

VerificationReport runMajoranaSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "majorana";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = cfg.tol;
    MomentumSampler sampler(cfg.seed);

    const ConjClass classes[2] = {ConjClass::S, ConjClass::A};
    const Eta etas[2] = {Eta::up, Eta::down};

    double worstConj = 0.0, worstRelations = 0.0, worstBiorth = 0.0, worstParity = 0.0;
    double worstConnection = 0.0, worstDual = 0.0, worstGauge = 0.0, worstCoupled = 0.0;
    double worstXi = 0.0, worstPhaseVanish = 0.0;
    double minHelicityGap = 1e300;
    bool parityPhaseConstant = true;
    Complex parityPhase{1.0, 0.0};
    bool conventionUnique = true;

    for (int i = 0; i < cfg.samples; ++i) {
        const FourMomentum p = sampler.sample();
        for (ConjClass c : classes)
            for (Eta e : etas) {
                const MajoranaSpinor lam = lambdaSpinor(c, e, p);
                const MajoranaSpinor rho = rhoSpinor(c, e, p);
                worstConj = std::max({worstConj, selfConjugacyResidual(lam),
                                      selfConjugacyResidual(rho)});
                worstDual = std::max(
                    worstDual,
                    (lam.components - lambdaViaBoost(c, e, p).components).norm());
                worstDual = std::max(
                    worstDual, (rho.components - rhoViaBoost(c, e, p).components).norm());
                const ParityImage par = parityMap(lam);
                worstParity = std::max(worstParity, par.residual);
                if (std::abs(par.phase - parityPhase) > 1e-6) parityPhaseConstant = false;
                // gauge transform preserves the conjugacy class
                const double alpha = sampler.uniform(0.0, 2.0 * M_PI);
                worstGauge = std::max(worstGauge,
                                      selfConjugacyResidual(chiralGaugeTransform(lam, alpha)));
                worstGauge = std::max(worstGauge,
                                      selfConjugacyResidual(chiralGaugeTransform(rho, alpha)));
                // not helicity eigenstates
                MatrixC h = MatrixC::Zero(4, 4);
                h.block(0, 0, 2, 2) = pauliDot(p.nHat());
                h.block(2, 2, 2, 2) = pauliDot(p.nHat());
                for (double s : {+1.0, -1.0})
                    minHelicityGap =
                        std::min(minHelicityGap, ((h - s * MatrixC::Identity(4, 4)) *
                                                  lam.components).norm() /
                                                     lam.components.norm());
            }
        for (const auto& c : rhoLambdaRelations(p, cfg.tol).checks)
            worstRelations = std::max(worstRelations, c.residual);
        const BiorthGrams g = biorthonormalGrams(p);
        worstBiorth = std::max({worstBiorth,
                                maxAbsDiff(g.lambdaGram, expectedLambdaGram(p.mass())),
                                maxAbsDiff(g.rhoGram, expectedRhoGram(p.mass()))});
        const BiorthGrams gq = biorthonormalGrams(p, M_PI / 4.0, M_PI / 4.0);
        for (const auto& [row, col] : {std::pair{0, 1}, {1, 0}, {2, 3}, {3, 2}})
            worstPhaseVanish = std::max({worstPhaseVanish, std::abs(gq.lambdaGram(row, col)),
                                         std::abs(gq.rhoGram(row, col))});
        worstConnection = std::max(worstConnection, connectionCheck(p).residual);
        const VerificationReport coupled = dynamicalResiduals(p, cfg.tol);
        for (const auto& c : coupled.checks) {
            if (c.id == "coupled/convention" && !c.pass) conventionUnique = false;
            worstCoupled = std::max(worstCoupled, c.id == "coupled/convention" ? 0.0 : c.residual);
        }
        for (const auto& c : xiProperty(p, cfg.tol).checks)
            worstXi = std::max(worstXi, c.residual);
    }

    r.add("majorana/self-conjugacy", "C lambda^{S,A} = +-lambda^{S,A}, C rho^{S,A} = +-rho^{S,A}",
          worstConj, cfg.tol);
    r.add("majorana/rho-lambda", "rho^S_up = -i lambda^A_down and partners", worstRelations,
          cfg.tol);
    r.add("majorana/biorthonormal", "lambdabar lambda products follow the +-im pattern",
          worstBiorth, cfg.tol);
    {
        std::ostringstream note;
        note << "overall phase " << parityPhase.real() << (parityPhase.imag() < 0 ? "-" : "+")
             << std::abs(parityPhase.imag()) << "i, constant across samples: "
             << (parityPhaseConstant ? "yes" : "NO");
        r.add("majorana/parity-swap", "P lambda^{S,A} = rho^{A,S}, P rho^{S,A} = lambda^{A,S}",
              worstParity, cfg.tol, note.str());
    }
    {
        const ConnectionCheck cc = connectionCheck(FourMomentum(2.0, Vec3(0.3, -0.2, 0.6)));
        std::ostringstream note;
        note << "calibration constant " << cc.calibration.real();
        if (std::abs(cc.calibration.imag()) > 1e-12) note << " + " << cc.calibration.imag() << "i";
        note << " (sqrt(m) at m=2 is " << std::sqrt(2.0) << "), |det| = " << cc.detMagnitude;
        r.add("majorana/connection", "(lambda^S, lambda^A) = (1/2)[1 i -1 i; ...] (u, v)",
              worstConnection, 1e-9, note.str());
    }
    r.add("majorana/dual-construction", "printed closed forms equal the boosted rest spinors",
          worstDual, cfg.tol);
    r.add("majorana/gauge-invariance",
          "(cos a -+ i gamma^5 sin a) preserves self/anti-self conjugacy", worstGauge, cfg.tol);
    r.addExact("majorana/not-helicity", "lambda, rho are not helicity eigenstates",
               minHelicityGap > 0.1,
               "smallest |(h - s)lambda| / |lambda| seen: " + std::to_string(minHelicityGap));
    r.add("majorana/biorth-phase", "general 2-spinor phases scale the +-im products by cos(theta1+theta2)",
          worstPhaseVanish, cfg.tol,
          "at theta1 + theta2 = pi/2 the pattern products vanish while cross-class products "
          "grow as m sin, so bi-orthonormality needs theta1 + theta2 = 0 or pi");
    r.addExact("majorana/coupled-convention",
               "one frequency-sign assignment zeroes the coupled system", conventionUnique,
               "lambda^S, rho^A positive frequency; lambda^A, rho^S negative");
    r.add("majorana/coupled-residuals",
          "gamma.p lambda^S = m rho^A (+ partners) and both 8-component forms", worstCoupled,
          cfg.tol);
    r.add("majorana/xi-property", "Xi Lambda_{R,L} Xi^-1 = Lambda_{R,L}^* and the four lambda maps",
          worstXi, cfg.tol);

    const MasslessLimitResult ml = masslessLimit();
    r.absorb(ml.report);
    r.seconds = watch.seconds();
    return r;
}

VerificationReport runFockSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "fock";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = 0.0;   // exact phase arithmetic

    r.absorb(fock::composeReport(FourMomentum(1.0, Vec3(0, 0, 1))));
    r.absorb(fock::simultaneousEigenstateSearch());

    using fock::Generator;
    using fock::Phase8;
    const auto gens = fock::generatorSet();
    const auto states = fock::stateBasis();
    bool bijective = true;
    const std::array<fock::SymmetryMap, 4> maps{fock::spaceInversion(), fock::chargeConjugation(),
                                                fock::chargeConjugationAlt(),
                                                fock::timeReversal()};
    for (const auto& map : maps) {
        const auto inv = map.inverse(gens);
        for (const auto& g : gens) {
            const auto [ph, t] = map.apply(g);
            const auto [ph2, back] = inv.apply(t);
            Phase8 total = map.antiunitary ? ph.conj() * ph2 : ph * ph2;
            // applying the inverse after the map must return the generator
            if (!(back == g) || total != Phase8::one()) bijective = false;
        }
        for (const auto& key : states) {
            const auto s = fock::FockStateVector::ket(key);
            if (!(inv.apply(map.apply(s)) == s)) bijective = false;
        }
    }
    r.addExact("fock/bijection", "every symmetry map composed with its inverse is the identity",
               bijective);

    // stability of the commute/anticommute classification under p -> -p relabel
    const auto flipped = fock::stateBasis({-1, +1});
    r.addExact("fock/relabel-stability",
               "commute/anticommute classification is stable under p -> -p",
               fock::composeCheck(fock::chargeConjugation(), fock::spaceInversion(), flipped) ==
                       fock::ComposeRelation::commute &&
                   fock::composeCheck(fock::chargeConjugationAlt(), fock::spaceInversion(),
                                      flipped) == fock::ComposeRelation::anticommute);

    // antiunitarity: coefficients conjugate
    {
        const fock::StateKey key{+1, Eta::up, +1};
        const auto scaled = fock::FockStateVector::ket(key, Phase8::i());
        const auto lhs = fock::timeReversal().apply(scaled);
        const auto rhs = fock::timeReversal().apply(fock::FockStateVector::ket(key))
                             .scaled(Phase8::i().conj());
        r.addExact("fock/antiunitary", "V^T (c |state>) = conj(c) V^T |state>", lhs == rhs);
    }

    // bracket selection rule
    {
        using fock::Species;
        const Generator aUp{Species::a, false, Eta::up, +1};
        const Generator adagDown{Species::a, true, Eta::down, +1};
        const Generator adagUp{Species::a, true, Eta::up, +1};
        const Generator bdagDown{Species::b, true, Eta::down, +1};
        const Generator adagDownOther{Species::a, true, Eta::down, -1};
        const bool ok = fock::bracket(aUp, adagDown).nonzero &&
                        !fock::bracket(aUp, adagUp).nonzero &&
                        !fock::bracket(aUp, bdagDown).nonzero &&
                        !fock::bracket(aUp, adagDownOther).nonzero;
        r.addExact("fock/bracket", "[a_eta'(p'), a+_eta(p)] = (2pi)^3 2E delta3 delta_{eta,-eta'}",
                   ok, "nonzero only across opposite eta, same species and momentum");
    }

    // time-reversal spin matrix
    {
        const MatrixC s = fock::timeReversalSpinMatrix();
        const bool unitary =
            maxAbsDiff(s * s.adjoint(), MatrixC::Identity(4, 4)) == 0.0;
        const bool signature =
            maxAbsDiff(s * s.conjugate(), -MatrixC::Identity(4, 4)) == 0.0;
        r.addExact("fock/time-reversal-signature",
                   "S(T) = diag(Theta, Theta) is unitary with S conj(S) = -1",
                   unitary && signature);
    }
    r.seconds = watch.seconds();
    return r;
}

VerificationReport runMaxwellSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "maxwell";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = cfg.tol;
    MomentumSampler sampler(cfg.seed);

    // root multiset of Det[E -+ S.p]
    double worstRoots = 0.0;
    const int rootSamples = std::min(cfg.samples, 100);
    for (int i = 0; i < rootSamples; ++i) {
        const Vec3 k = sampler.uniform(0.05, 3.0) * sampler.direction();
        const auto roots = clusterRoots(rsDeterminant(k).roots(), 1e-6);
        if (roots.size() != 3) {
            worstRoots = 1.0;
            break;
        }
        worstRoots = std::max({worstRoots, std::abs(roots[0].value - Complex(-k.norm())),
                               std::abs(roots[1].value), std::abs(roots[2].value - Complex(k.norm()))});
    }
    r.add("maxwell/rs-roots", "Det[E -+ S.p] has roots {0, +|p|, -|p|}", worstRoots, 1e-12,
          "causal E = +-|p| plus the acausal E = 0 branch");

    // exact factorization identity on integer data
    bool exactInts = true;
    std::mt19937_64 intRng(cfg.seed);
    std::uniform_int_distribution<int> pick(-6, 6);
    for (int i = 0; i < 50; ++i) {
        const Vec3 p(pick(intRng), pick(intRng), pick(intRng));
        const double energy = pick(intRng), m = pick(intRng);
        Eigen::Vector3cd psi;
        psi << Complex(pick(intRng), pick(intRng)), Complex(pick(intRng), pick(intRng)),
            Complex(pick(intRng), pick(intRng));
        const Eigen::Vector3cd res = kgFactorizationSpin1(energy, p, m, psi);
        const double factor = energy * energy - p.squaredNorm() - m * m;
        if (maxAbs(res - factor * psi) != 0.0) exactInts = false;
        const MatrixC sp = spin1Dot(p);
        const MatrixC ppT = p.cast<Complex>() * p.cast<Complex>().transpose();
        if (maxAbsDiff(sp * sp, p.squaredNorm() * MatrixC::Identity(3, 3) - ppT) != 0.0)
            exactInts = false;
    }
    r.addExact("maxwell/kg-factorization",
               "(E - S.p)(E + S.p)psi - p(p.psi) - m^2 psi = (E^2 - p^2 - m^2) psi",
               exactInts, "bitwise on integer data");
    r.addExact("maxwell/sp-squared", "(S.p)^2 = p^2 - p p^T", exactInts);

    // off-shell residual equals the scalar factor for real kinematics too
    double worstFactor = 0.0;
    for (int i = 0; i < rootSamples; ++i) {
        const Vec3 p = sampler.uniform(0.0, 3.0) * sampler.direction();
        const double energy = sampler.uniform(-3.0, 3.0);
        const double m = sampler.uniform(0.0, 2.0);
        Eigen::Vector3cd psi;
        psi << Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1)),
            Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1)),
            Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1));
        const double factor = energy * energy - p.squaredNorm() - m * m;
        worstFactor = std::max(worstFactor,
                               maxAbs(kgFactorizationSpin1(energy, p, m, psi) - factor * psi));
    }
    r.add("maxwell/kg-offshell", "off-shell residual is (E^2 - p^2 - m^2) psi", worstFactor,
          1e-12);

    // canonical light wave and stationary fields solve the chi = 0 system
    {
        FieldTriple wave{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(), 0.0, Vec3(0, 0, 1),
                         1.0};
        wave.efield << 1.0, 0.0, 0.0;
        wave.bfield << 0.0, 1.0, 0.0;
        const double res1 = maxwellResidual(wave).maxAbs();
        FieldTriple still{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(), 0.0,
                          Vec3::Zero(), 0.0};
        still.bfield << 0.0, 0.0, 1.0;
        const double res2 = maxwellResidual(still).maxAbs();
        r.add("maxwell/light-wave", "transverse wave with w = |k| and chi = 0 solves the system",
              std::max(res1, res2), 1e-14, "plus the stationary uniform field at E = 0");
    }

    // linearity of the residual evaluator
    double worstLinear = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Vec3 k = sampler.direction();
        const double w = sampler.uniform(-2, 2);
        const auto randomTriple = [&]() {
            FieldTriple f{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(),
                          Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1)), k, w};
            for (int j = 0; j < 3; ++j) {
                f.efield[j] = Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1));
                f.bfield[j] = Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1));
            }
            return f;
        };
        const FieldTriple f1 = randomTriple();
        FieldTriple f2 = randomTriple();
        FieldTriple sum = f1;
        sum.efield += f2.efield;
        sum.bfield += f2.bfield;
        sum.chi += f2.chi;
        const auto r1 = maxwellResidual(f1), r2 = maxwellResidual(f2),
                   rs = maxwellResidual(sum);
        worstLinear = std::max(
            worstLinear,
            std::max(maxAbs(rs.curlE - r1.curlE - r2.curlE),
                     std::max(maxAbs(rs.curlB - r1.curlB - r2.curlB),
                              std::max(std::abs(rs.divE - r1.divE - r2.divE),
                                       std::abs(rs.divB - r1.divB - r2.divB)))));
    }
    r.add("maxwell/residual-linearity", "the residual map is linear in the field triple",
          worstLinear, 1e-13);

    // two-mass chiral dispersion
    {
        double worst = 0.0;
        const double m1 = 1.2, m2 = 0.7;
        const double expected = m1 * m1 - m2 * m2;
        bool degenerate = true;
        for (int i = 0; i < 10; ++i) {
            const double pmag = 0.2 + 0.35 * i;
            const ChiralDispersion d = chiralMassDispersion(m1, m2, pmag);
            worst = std::max(worst, std::abs(d.effectiveMassSquared - expected));
            for (const auto& root : d.roots)
                if (root.multiplicity != 2) degenerate = false;
        }
        r.add("maxwell/chiral-mass", "Det[gamma.p + m1 + m2 gamma^5] = 0 at E^2 = p^2 + m1^2 - m2^2",
              worst, 1e-8, "effective mass^2 momentum independent");
        r.addExact("maxwell/chiral-degeneracy", "each root of the quartic has multiplicity 2",
                   degenerate);
        const ChiralDispersion dirac = chiralMassDispersion(m1, 0.0, 0.9);
        double worstDirac = 1.0;
        for (const auto& root : dirac.roots)
            worstDirac = std::min(worstDirac,
                                  std::abs(root.value - Complex(std::sqrt(0.81 + m1 * m1))));
        r.add("maxwell/chiral-dirac-limit", "m2 = 0 reduces to E = +-sqrt(p^2 + m1^2)",
              worstDirac, 1e-9);
    }
    r.seconds = watch.seconds();
    return r;
}

VerificationReport runWeinbergSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "weinberg";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = cfg.tol;
    MomentumSampler sampler(cfg.seed);

    // degree of the dispersion determinant at generic (A, B)
    {
        const DispersionResult generic = dispersionSpectrum(2.0, 3.0, Vec3(0.7, -0.4, 1.1), 1.0);
        std::ostringstream note;
        note << "generic (A,B) = (2,3); root branches E^2 - p^2 in {m^2 B/(A+1), m^2 B/(A-1)}";
        r.addExact("weinberg/degree-12", "the dispersion determinant has degree 12 in E",
                   generic.degree == 12, note.str());
    }

    // Tucker-Hammer point: every root relativistic, no E = 0 roots
    double worstShell = 0.0;
    bool anyZero = false;
    int rootTotal = 0;
    const int dispSamples = std::min(cfg.samples, 40);
    for (int i = 0; i < dispSamples; ++i) {
        const double m = sampler.uniform(0.5, 2.0);
        const Vec3 p = sampler.uniform(0.1, 3.0 * m) * sampler.direction();
        const DispersionResult d = dispersionSpectrum(1.0, 2.0, p, m);
        rootTotal = 0;
        for (size_t j = 0; j < d.roots.size(); ++j) {
            const Complex e = d.roots[j].value;
            worstShell = std::max(worstShell,
                                  std::abs(e * e - Complex(p.squaredNorm() + m * m)) / (m * m));
            rootTotal += d.roots[j].multiplicity;
            if (d.classification[j] == "acausal-E0") anyZero = true;
        }
    }
    {
        std::ostringstream note;
        note << "degree drops to 6 at A = 1 (root multiplicity total " << rootTotal
             << ", not 12): the second branch becomes constant";
        r.add("weinberg/th-on-shell", "B/(A+1) = 1 at (A,B) = (1,2): every root has E^2 = p^2 + m^2",
              worstShell, 1e-8, note.str());
        r.addExact("weinberg/no-acausal", "no E = 0 root at nonzero momentum", !anyZero,
                   "unlike the massless S.p system");
    }

    // pure Weinberg operator keeps a non-relativistic branch
    {
        const DispersionResult w01 = dispersionSpectrum(0.0, 1.0, Vec3(0.9, 0.2, -0.5), 1.0);
        bool flagged = false;
        for (const auto& cls : w01.classification)
            if (cls == "other") flagged = true;
        r.addExact("weinberg/weinberg-branch",
                   "(A,B) = (0,1) keeps a flagged non-relativistic branch E^2 = p^2 - m^2",
                   flagged && w01.degree == 12);
    }

    // sign-convention oracle for the Tucker-Hammer parameters
    {
        const THParams th = tuckerHammerParams(FourMomentum(1.3, Vec3(0.4, -0.7, 0.9)));
        std::ostringstream note;
        note << "confirmed (A,B) = (" << th.A << "," << th.B << ")";
        r.addExact("weinberg/th-params", "momentum-space image of the printed operator is (1,2)",
                   th.A == 1.0 && th.B == 2.0 && th.residual <= 1e-9, note.str());
    }

    // printed u columns annihilated; v picks the mass-sign-flipped branch
    double worstU = 0.0, worstV = 0.0, worstCoupled = 0.0, worstDual = 0.0;
    bool parityOk = true;
    for (int i = 0; i < std::min(cfg.samples, 200); ++i) {
        const FourMomentum p = sampler.sample(0.3, 3.0, 4.0);
        const EuclideanMomentum q = EuclideanMomentum::onShell(p);
        const MatrixC opU = wthOperator(q, 1.0, 2.0, p.mass(), BivectorRep::standard);
        const MatrixC opV = wthOperator(q, 1.0, 0.0, p.mass(), BivectorRep::standard);
        for (int sigma : {+1, 0, -1}) {
            const Bivector u = u1Spinor(p, sigma);
            const Bivector v = v1Spinor(p, sigma);
            worstU = std::max(worstU, (opU * u.components).norm());
            worstV = std::max(worstV, (opV * v.components).norm());
            worstCoupled = std::max(worstCoupled, coupledResidual(p, u).maxAbs());
            worstDual = std::max(
                worstDual,
                (u1ViaBoost(p, sigma, BivectorRep::standard).components - u.components).norm());
            if (bosonParity(u) != +1 || bosonParity(v) != -1) parityOk = false;
        }
    }
    r.add("weinberg/u-annihilation", "[gamma_ab p_a p_b + p.p + 2m^2] u_sigma(p) = 0", worstU,
          1e-9);
    r.add("weinberg/v-branch", "v = gamma_5 u solves the operator with B = A - 1", worstV, 1e-9,
          "the energy-sign-flipped branch");
    r.add("weinberg/coupled", "PiBar Phi = m^2 Xi and Pi Xi = m^2 Phi on u bivectors",
          worstCoupled, 1e-9);
    r.add("weinberg/dual-construction", "printed columns equal the Wigner-boost construction",
          worstDual, 1e-9);
    r.addExact("weinberg/boson-parity", "parity +1 for u_sigma, -1 for v_sigma", parityOk);
    {
        const Bivector u = u1Spinor(FourMomentum(1.0, Vec3(0.3, 0.4, 0.5)), +1);
        const BivectorFamily mixed = [](const FourMomentum& q) {
            return VectorC(u1Spinor(q, +1).components + v1Spinor(q, +1).components);
        };
        r.addExact("weinberg/mixed-parity", "u + v is not a parity eigenstate",
                   !bosonParity(mixed, u.p).has_value());
    }

    // Pi covariance under random boosts
    double worstCov = 0.0;
    for (int i = 0; i < std::min(cfg.samples, 100); ++i) {
        const FourMomentum q = sampler.sample(0.5, 2.0, 2.0);
        const double extraRapidity = sampler.uniform(0.0, 1.2);
        const Vec3 axis = sampler.direction();
        // boost the four-momentum
        const double e2 = q.absEnergy() * std::cosh(extraRapidity) +
                          q.p().dot(axis) * std::sinh(extraRapidity);
        const Vec3 p2 = q.p() + axis * ((std::cosh(extraRapidity) - 1.0) * q.p().dot(axis) +
                                        q.absEnergy() * std::sinh(extraRapidity));
        const FourMomentum boosted(q.mass(), p2);
        if (std::abs(boosted.absEnergy() - e2) > 1e-9) continue;
        for (double spin : {0.5, 1.0}) {
            const MatrixC d = spin == 0.5 ? expPauliHalf(extraRapidity, axis)
                                          : expSpin1(extraRapidity, axis, SpinBasis::spherical);
            const MatrixC lhs = d * piMatrix(q, spin) * d.adjoint();
            const MatrixC rhs = piMatrix(boosted, spin);
            worstCov = std::max(worstCov, maxAbsDiff(lhs, rhs) / maxAbs(rhs));
        }
    }
    r.add("weinberg/pi-covariance", "D(L) Pi(q) D(L)+ = Pi(L q) for pure boosts", worstCov,
          1e-9);

    // rest-frame value and the inverse pair
    {
        const FourMomentum rest(1.7, Vec3::Zero());
        const double m2 = 1.7 * 1.7;
        double worst = maxAbsDiff(piMatrix(rest, 1.0), m2 * MatrixC::Identity(3, 3));
        const FourMomentum q(1.1, Vec3(0.5, -0.8, 0.2));
        worst = std::max(worst, maxAbsDiff(piMatrix(q, 1.0) * piBarMatrix(q, 1.0),
                                           std::pow(q.mass(), 4.0) * MatrixC::Identity(3, 3)));
        r.add("weinberg/pi-rest", "Pi(0) = m^{2s} and Pi PiBar = m^{4s}", worst, 1e-9);
    }
    r.seconds = watch.seconds();
    return r;
}

VerificationReport runModeexpandSuite(const RunConfig& cfg) {
    Stopwatch watch;
    VerificationReport r;
    r.suite = "modeexpand";
    r.seed = cfg.seed;
    r.samples = cfg.samples;
    r.tolerance = cfg.tol;
    MomentumSampler sampler(cfg.seed);

    double worstGram = 0.0, worstPartner = 0.0, worstThreeMom = 0.0, worstCompose = 0.0;
    double worstSpin1 = 0.0, worstTetrad = 0.0, worstReflect = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        FourMomentum k = sampler.sample();
        if (k.pNorm() < 1e-6) k = FourMomentum(k.mass(), Vec3(0, 0, 0.5 * k.mass()));
        const auto rep = diracCrossGramReport(k, cfg.tol);
        for (const auto& c : rep.checks) {
            if (c.id == "cross-gram/identity") worstGram = std::max(worstGram, c.residual);
            if (c.id == "cross-gram/partner") worstPartner = std::max(worstPartner, c.residual);
            if (c.id == "cross-gram/three-momentum-variant")
                worstThreeMom = std::max(worstThreeMom, c.residual);
            if (c.id == "cross-gram/self-consistency")
                worstCompose = std::max(worstCompose, c.residual);
        }
        const Spin1Reflection refl = spin1Reflection(k);
        worstSpin1 = std::max(worstSpin1, maxAbsDiff(refl.crossGram,
                                                     k.mass() * k.mass() * refl.reflection));
        worstReflect = std::max(
            worstReflect,
            maxAbsDiff(refl.reflection * refl.reflection, MatrixC::Identity(3, 3)));
        const auto tet = polarizationTetrad(k, TetradFrame::helicity);
        MatrixC gramT(4, 4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                gramT(a, b) = minkowskiDot(tet[a].eps.conjugate(), tet[b].eps);
        MatrixC metric = MatrixC::Zero(4, 4);
        metric(0, 0) = 1;
        metric(1, 1) = metric(2, 2) = metric(3, 3) = -1;
        worstTetrad = std::max(worstTetrad, maxAbsDiff(gramT, metric));
    }
    r.add("modeexpand/cross-gram", "vbar_mu(k) u_lambda(-k) = -i m (sigma.n)", worstGram,
          cfg.tol, "four-momentum reversal; 3-momentum-only reversal gives |k| sigma.n instead");
    r.add("modeexpand/cross-gram-partner", "ubar_mu(-k) v_lambda(k) = +i m (sigma.n)",
          worstPartner, cfg.tol);
    r.add("modeexpand/cross-gram-3mom", "the 3-momentum-only variant equals |k| (sigma.n)",
          worstThreeMom, cfg.tol);
    r.add("modeexpand/self-consistency", "(i sigma.n)(-i sigma.n) = 1", worstCompose,
          8.0 * kTableTol);
    r.add("modeexpand/spin1-cross-gram", "ubar_sigma(k) u_lambda(-k) = m^2 [1 - 2(S.n)^2]",
          worstSpin1, 1e-8, "supports the reflection relation a(k) = [1 - 2(S.n)^2] a(-k)");
    r.add("modeexpand/reflection-involution", "[1 - 2(S.n)^2]^2 = 1", worstReflect,
          32.0 * std::numeric_limits<double>::epsilon(),
          "algebraically exact; machine rounding only for generic directions");
    {
        // exact on axis directions
        const MatrixC sz = spin1Dot(Vec3(0, 0, 1), SpinBasis::spherical);
        const MatrixC rz = MatrixC::Identity(3, 3) - 2.0 * sz * sz;
        r.addExact("modeexpand/reflection-axis", "R(z) = diag(-1, 1, -1), R^2 = 1 bitwise",
                   maxAbsDiff(rz * rz, MatrixC::Identity(3, 3)) == 0.0 &&
                       rz(0, 0) == Complex(-1.0) && rz(1, 1) == Complex(1.0) &&
                       rz(2, 2) == Complex(-1.0));
    }
    r.absorb(vectorMatrixReport(FourMomentum(1.3, Vec3(0.4, -0.7, 0.9))));

    // frequency splitting partitions the sample set
    {
        std::vector<ModeSample> samples;
        int positives = 0, negatives = 0;
        for (int i = 0; i < 40; ++i) {
            const int sign = sampler.uniform(0, 1) < 0.5 ? +1 : -1;
            (sign > 0 ? positives : negatives)++;
            samples.push_back({FourMomentum(sampler.uniform(0.1, 2.0),
                                            sampler.direction() * sampler.uniform(0.0, 3.0), sign),
                               Complex(sampler.uniform(-1, 1), sampler.uniform(-1, 1))});
        }
        samples.push_back({FourMomentum(0.0, Vec3::Zero()), Complex(1.0, 0.0)});
        const FrequencySplit split = frequencySplit(samples);
        const bool partition =
            split.positive.size() == static_cast<size_t>(positives) &&
            split.negative.size() == static_cast<size_t>(negatives) &&
            split.quarantined.size() == 1 &&
            split.positive.size() + split.negative.size() + split.quarantined.size() ==
                samples.size();
        r.addExact("modeexpand/frequency-split", "theta(k0) + theta(-k0) partitions the samples",
                   partition, "E = 0 sample quarantined: " + split.diagnostic);
        bool reflected = true;
        for (const auto& s : split.negative)
            if (s.k.p0() <= 0.0) reflected = false;
        r.addExact("modeexpand/negative-branch", "phi^-(k) = theta(k0) phi(-k) re-indexes to +E",
                   reflected);
    }
    r.seconds = watch.seconds();
    return r;
}

std::vector<VerificationReport> runSuites(const std::string& suite, const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    const bool all = suite == "all";
    if (all || suite == "dirac") out.push_back(runDiracSuite(cfg));
    if (all || suite == "majorana") out.push_back(runMajoranaSuite(cfg));
    if (all || suite == "fock") out.push_back(runFockSuite(cfg));
    if (all || suite == "maxwell") out.push_back(runMaxwellSuite(cfg));
    if (all || suite == "weinberg") out.push_back(runWeinbergSuite(cfg));
    if (all || suite == "modeexpand") out.push_back(runModeexpandSuite(cfg));
    return out;
}

bool knownSuite(const std::string& suite) {
    for (const char* name : {"all", "dirac", "majorana", "fock", "maxwell", "weinberg",
                             "modeexpand"})
        if (suite == name) return true;
    return false;
}

nlohmann::json suitesToJson(const std::vector<VerificationReport>& reports,
                            const RunConfig& cfg) {
    nlohmann::json j;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["tolerance"] = cfg.tol;
    bool pass = true;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
        j["suites"].push_back(toJson(r));
        pass = pass && r.pass();
    }
    j["pass"] = pass;
    return j;
}

}  // namespace spinorlab

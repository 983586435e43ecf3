#include <doctest.h>

#include "spinorlab/majorana.hpp"
#include "spinorlab/dirac.hpp"

#include <random>

using namespace spinorlab;

namespace {
const Complex I{0.0, 1.0};

FourMomentum randomOnShell(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double m = 0.1 + 4.9 * std::abs(u(rng));
    return FourMomentum(m, Vec3(u(rng), u(rng), u(rng)) * 4.0 * m);
}

VectorC col(Complex a, Complex b, Complex c, Complex d) {
    VectorC v(4);
    v << a, b, c, d;
    return v;
}
}  // namespace

TEST_CASE("charge conjugation matrix matches the printed table") {
    MatrixC printed(4, 4);
    printed << 0, 0, 0, -I,
               0, 0, I, 0,
               0, I, 0, 0,
               -I, 0, 0, 0;
    CHECK(maxAbsDiff(chargeConjugationMatrix(), printed) == 0.0);

    // involution for any overall phase
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        VectorC psi(4);
        for (int i = 0; i < 4; ++i) psi[i] = Complex(u(rng), u(rng));
        const double theta = 1.3 * u(rng);
        CHECK((chargeConjugate(chargeConjugate(psi, theta), theta) - psi).norm() < 1e-14);
    }
}

TEST_CASE("charge-conjugation operator value") {
    const ChargeConjugation c;
    CHECK(c.antilinear);
    CHECK(maxAbsDiff(c.matrixPart, chargeConjugationMatrix()) == 0.0);
    const MajoranaSpinor lam = lambdaSpinor(ConjClass::S, Eta::up,
                                            FourMomentum(1.2, Vec3(0.3, -0.1, 0.8)));
    CHECK((c.apply(lam.components) - lam.components).norm() <= 1e-12);
    // a nonzero phase rotates the eigenvalue but C stays an involution
    const ChargeConjugation rotated(0.9);
    CHECK((rotated.apply(rotated.apply(lam.components)) - lam.components).norm() < 1e-13);
}

TEST_CASE("rest tables") {
    const double m = 2.0;   // sqrt(m/2) = 1
    CHECK((lambdaRest(ConjClass::S, Eta::up, m).components - col(0, I, 1, 0)).norm() < 1e-15);
    CHECK((lambdaRest(ConjClass::S, Eta::down, m).components - col(-I, 0, 0, 1)).norm() < 1e-15);
    CHECK((lambdaRest(ConjClass::A, Eta::up, m).components - col(0, -I, 1, 0)).norm() < 1e-15);
    CHECK((lambdaRest(ConjClass::A, Eta::down, m).components - col(I, 0, 0, 1)).norm() < 1e-15);
    CHECK((rhoRest(ConjClass::S, Eta::up, m).components - col(1, 0, 0, -I)).norm() < 1e-15);
    CHECK((rhoRest(ConjClass::S, Eta::down, m).components - col(0, 1, I, 0)).norm() < 1e-15);
    CHECK((rhoRest(ConjClass::A, Eta::up, m).components - col(1, 0, 0, I)).norm() < 1e-15);
    CHECK((rhoRest(ConjClass::A, Eta::down, m).components - col(0, 1, -I, 0)).norm() < 1e-15);
}

TEST_CASE("rest columns satisfy the defining 2-spinor relation") {
    // lambda = (+-i Theta phi_L^*, phi_L) with phi_L in sqrt(m/2){(1,0),(0,1)}
    MatrixC theta(2, 2);
    theta << 0, -1, 1, 0;
    const double m = 1.4;
    for (ConjClass c : {ConjClass::S, ConjClass::A})
        for (Eta e : {Eta::up, Eta::down}) {
            VectorC phi(2);
            phi << (e == Eta::up ? 1.0 : 0.0), (e == Eta::up ? 0.0 : 1.0);
            phi *= std::sqrt(m / 2.0);
            const double sign = c == ConjClass::S ? 1.0 : -1.0;
            VectorC expected(4);
            expected.segment(0, 2) = sign * I * (theta * phi.conjugate());
            expected.segment(2, 2) = phi;
            CHECK((lambdaRest(c, e, m).components - expected).norm() < 1e-15);
        }
}

TEST_CASE("printed boosted columns along z") {
    const double m = 1.1, pz = 1.9;
    const FourMomentum p(m, Vec3(0, 0, pz));
    const double e = p.absEnergy();
    const double f = 1.0 / (2.0 * std::sqrt(e + m));
    const double pm = e - pz + m;
    CHECK((lambdaSpinor(ConjClass::S, Eta::up, p).components -
           f * col(0, I * pm, pm, 0)).norm() < 1e-14);
    const double pp = e + pz + m;
    CHECK((rhoSpinor(ConjClass::A, Eta::up, p).components -
           f * col(pp, 0, 0, I * pp)).norm() < 1e-14);
}

TEST_CASE("self/anti-self conjugacy at random momenta") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const FourMomentum p = randomOnShell(rng);
        for (ConjClass c : {ConjClass::S, ConjClass::A})
            for (Eta e : {Eta::up, Eta::down}) {
                CHECK(selfConjugacyResidual(lambdaSpinor(c, e, p)) <= 1e-10);
                CHECK(selfConjugacyResidual(rhoSpinor(c, e, p)) <= 1e-10);
            }
    }
}

TEST_CASE("boost path agrees with the printed closed forms") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        const FourMomentum p = randomOnShell(rng);
        for (ConjClass c : {ConjClass::S, ConjClass::A})
            for (Eta e : {Eta::up, Eta::down}) {
                CHECK((lambdaSpinor(c, e, p).components -
                       lambdaViaBoost(c, e, p).components).norm() <= 1e-10);
                CHECK((rhoSpinor(c, e, p).components -
                       rhoViaBoost(c, e, p).components).norm() <= 1e-10);
            }
    }
    // p = 0 reduces to the rest tables
    const FourMomentum rest(1.7, Vec3::Zero());
    CHECK((lambdaSpinor(ConjClass::S, Eta::down, rest).components -
           lambdaRest(ConjClass::S, Eta::down, 1.7).components).norm() < 1e-14);
}

TEST_CASE("rho-lambda relations") {
    const FourMomentum rest(1.0, Vec3::Zero());
    REQUIRE(rhoLambdaRelations(rest).pass());
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto rep = rhoLambdaRelations(randomOnShell(rng));
        CHECK(rep.pass());
        CHECK(rep.checks.size() == 4);
    }
}

TEST_CASE("parity swaps family and class with no phase") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const FourMomentum p = randomOnShell(rng);
        const auto img = parityMap(lambdaSpinor(ConjClass::S, Eta::up, p));
        CHECK(img.residual <= 1e-10);
        CHECK(std::abs(img.phase - Complex(1.0)) < 1e-10);
        CHECK(img.mapped.family == Family::rho);
        CHECK(img.mapped.conjClass == ConjClass::A);

        // involution
        const MajoranaSpinor lam = lambdaSpinor(ConjClass::A, Eta::down, p);
        const MatrixC g0 = gamma(0, GammaBasis::chiral);
        const VectorC twice =
            g0 * (g0 * lambdaSpinor(ConjClass::A, Eta::down, p.reversed3().reversed3())
                          .components);
        CHECK((twice - lam.components).norm() < 1e-14);
    }
}

TEST_CASE("bi-orthonormal products") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 30; ++t) {
        const FourMomentum p = randomOnShell(rng);
        const BiorthGrams g = biorthonormalGrams(p);
        CHECK(maxAbsDiff(g.lambdaGram, expectedLambdaGram(p.mass())) <= 1e-10);
        CHECK(maxAbsDiff(g.rhoGram, expectedRhoGram(p.mass())) <= 1e-10);
        // spot values
        CHECK(std::abs(g.lambdaGram(0, 1) - (-I * p.mass())) <= 1e-10);
        CHECK(std::abs(g.rhoGram(3, 2) - (I * p.mass())) <= 1e-10);
        // phase footnote: the +-im products carry cos(theta1 + theta2)
        const double t1 = 0.4, t2 = 0.9;
        const BiorthGrams gp = biorthonormalGrams(p, t1, t2);
        CHECK(std::abs(gp.lambdaGram(0, 1) - (-I * p.mass() * std::cos(t1 + t2))) <= 1e-10);
    }
}

TEST_CASE("coupled system and the 8-component forms") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        const auto rep = dynamicalResiduals(randomOnShell(rng));
        CHECK(rep.pass());
        for (const auto& c : rep.checks)
            if (c.id == "coupled/convention")
                CHECK(c.note.find("assignments passing: 1") != std::string::npos);
    }
}

TEST_CASE("connection to the Dirac spinors") {
    const MatrixC m = connectionMatrix();
    CHECK(m(0, 2) == Complex(-0.5));   // entry (1,3) of the printed matrix
    CHECK(std::abs(std::abs(m.determinant()) - 1.0) < 1e-14);
    CHECK(maxAbsDiff(m * m.adjoint(), MatrixC::Identity(4, 4)) < 1e-14);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        const FourMomentum p = randomOnShell(rng);
        const ConnectionCheck cc = connectionCheck(p);
        CHECK(cc.residual <= 1e-9);
        CHECK(std::abs(cc.calibration - Complex(std::sqrt(p.mass()))) < 1e-9);
    }
}

TEST_CASE("chiral phase transformation preserves the class") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const FourMomentum p = randomOnShell(rng);
    const MajoranaSpinor lam = lambdaSpinor(ConjClass::S, Eta::up, p);

    // alpha = 0 is the identity
    CHECK((chiralGaugeTransform(lam, 0.0).components - lam.components).norm() == 0.0);

    for (int t = 0; t < 20; ++t) {
        const double alpha = u(rng);
        CHECK(selfConjugacyResidual(chiralGaugeTransform(lam, alpha)) <= 1e-10);
        CHECK(selfConjugacyResidual(
                  chiralGaugeTransform(rhoSpinor(ConjClass::A, Eta::down, p), alpha)) <=
              1e-10);
    }

    // alpha = pi/2 is the pure -i gamma^5 action
    const VectorC extreme = chiralGaugeTransform(lam, M_PI / 2.0).components;
    CHECK((extreme + I * gamma(5, GammaBasis::chiral) * lam.components).norm() < 1e-14);
}

TEST_CASE("azimuthal-phase conjugation identities") {
    SUBCASE("p in the x-z plane: Xi is the identity") {
        const FourMomentum p(1.0, Vec3(0.8, 0.0, 0.5));
        CHECK(maxAbsDiff(xiMatrix(p), MatrixC::Identity(2, 2)) < 1e-15);
        CHECK(xiProperty(p).pass());
    }

    SUBCASE("random momenta") {
        std::mt19937_64 rng(15);
        for (int t = 0; t < 30; ++t) {
            const auto rep = xiProperty(randomOnShell(rng));
            CHECK(rep.pass());
        }
    }

    SUBCASE("the -i lambda_S^* map, explicitly") {
        const FourMomentum p(1.3, Vec3(0.5, 1.1, -0.7));
        const MatrixC xi = xiMatrix(p);
        MatrixC t2 = MatrixC::Zero(4, 4);
        t2.block(0, 0, 2, 2) = I * xi;
        t2.block(2, 2, 2, 2) = -I * xi;
        for (Eta e : {Eta::up, Eta::down}) {
            const VectorC ls = lambdaHelicity(ConjClass::S, e, p).components;
            CHECK((t2 * ls + I * ls.conjugate()).norm() <= 1e-10);
        }
    }
}

TEST_CASE("massless limit of the helicity-built spinors") {
    const auto res = masslessLimit();
    CHECK(res.report.pass());
    REQUIRE(res.ratioUpDown.size() == 5);
    // ratio at m/E = 1e-8 is tiny; the opposite-eta species survives
    CHECK(res.ratioUpDown.back() <= 1e-3);
    // halving m/E halves the ratio: the fitted log-log slope is 1
    CHECK(res.fittedExponent == doctest::Approx(1.0).epsilon(1e-3));
}

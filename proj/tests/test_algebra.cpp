#include <doctest.h>

#include "spinorlab/algebra.hpp"
#include "spinorlab/report.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace spinorlab;

namespace {
const Complex I{0.0, 1.0};

FourMomentum randomMomentum(std::mt19937_64& rng, double mMin = 0.1, double mMax = 5.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double m = mMin + (mMax - mMin) * std::abs(u(rng));
    return FourMomentum(m, Vec3(u(rng), u(rng), u(rng)) * 3.0 * m);
}
}  // namespace

TEST_CASE("pauli matrices") {
    MatrixC expected(2, 2);
    expected << 1, 0, 0, -1;
    CHECK(maxAbsDiff(pauli(3), expected) == 0.0);
    CHECK(maxAbsDiff(pauli(1) * pauli(2), I * pauli(3)) == 0.0);
    for (int i = 1; i <= 3; ++i) {
        CHECK(maxAbsDiff(pauli(i), pauli(i).adjoint()) == 0.0);
        CHECK(std::abs(pauli(i).trace()) == 0.0);
        CHECK(maxAbsDiff(pauli(i) * pauli(i), MatrixC::Identity(2, 2)) == 0.0);
    }
    const Vec3 n = Vec3(1, 1, 1).normalized();
    CHECK(maxAbsDiff(pauliDot(n) * pauliDot(n), MatrixC::Identity(2, 2)) < 1e-15);
    CHECK_THROWS_AS(pauli(0), std::invalid_argument);
    CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("spin-1 matrices") {
    const auto s = spin1Matrices();
    CHECK(s[0](1, 2) == -I);   // (S_1)_23 = -i eps_123
    CHECK(maxAbsDiff(commutator(s[0], s[1]), I * s[2]) == 0.0);
    CHECK(maxAbsDiff(s[0] * s[0] + s[1] * s[1] + s[2] * s[2],
                     2.0 * MatrixC::Identity(3, 3)) == 0.0);

    Eigen::ComplexEigenSolver<MatrixC> es(s[2]);
    std::vector<double> ev;
    for (int i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()[i].real());
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(0.0));
    CHECK(ev[2] == doctest::Approx(1.0));
}

TEST_CASE("spherical spin-1 representation is conjugate to the cartesian one") {
    const auto cart = spin1Matrices(SpinBasis::cartesian);
    const auto sph = spin1Matrices(SpinBasis::spherical);
    const MatrixC v = sphericalBasisMatrix();
    CHECK(maxAbsDiff(v * v.adjoint(), MatrixC::Identity(3, 3)) < 1e-15);
    for (int i = 0; i < 3; ++i) {
        CHECK(maxAbsDiff(v.adjoint() * cart[i] * v, sph[i]) < 1e-15);
        CHECK(maxAbsDiff(commutator(sph[i], sph[(i + 1) % 3]), I * sph[(i + 2) % 3]) < 1e-15);
    }
    MatrixC s3(3, 3);
    s3 << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    CHECK(maxAbsDiff(sph[2], s3) == 0.0);
}

TEST_CASE("gamma tables and the Clifford relation") {
    MatrixC g0std(4, 4);
    g0std << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1;
    CHECK(maxAbsDiff(gamma(0, GammaBasis::standard), g0std) < 1e-15);

    // chiral gamma^0 is the antidiagonal block form
    const MatrixC g0ch = gamma(0, GammaBasis::chiral);
    CHECK(maxAbs(g0ch.block(0, 0, 2, 2)) == 0.0);
    CHECK(maxAbsDiff(g0ch.block(0, 2, 2, 2), MatrixC::Identity(2, 2)) == 0.0);
    CHECK(maxAbsDiff(g0ch.block(2, 0, 2, 2), MatrixC::Identity(2, 2)) == 0.0);

    const double metric[4] = {1.0, -1.0, -1.0, -1.0};
    for (GammaBasis basis : {GammaBasis::chiral, GammaBasis::standard})
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const MatrixC lhs = anticommutator(gamma(mu, basis), gamma(nu, basis));
                const MatrixC rhs =
                    (mu == nu ? 2.0 * metric[mu] : 0.0) * MatrixC::Identity(4, 4);
                CHECK(maxAbsDiff(lhs, rhs) <= 1e-12);
            }

    for (GammaBasis basis : {GammaBasis::chiral, GammaBasis::standard})
        CHECK(maxAbsDiff(gamma(5, basis), I * gamma(0, basis) * gamma(1, basis) *
                                              gamma(2, basis) * gamma(3, basis)) < 1e-15);

    // the fixed unitary takes the chiral table to the standard one
    const MatrixC u = basisChange();
    CHECK(maxAbsDiff(u * u.adjoint(), MatrixC::Identity(4, 4)) < 1e-15);
    for (int mu : {0, 1, 2, 3, 5})
        CHECK(maxAbsDiff(u * gamma(mu, GammaBasis::chiral) * u.adjoint(),
                         gamma(mu, GammaBasis::standard)) < 1e-15);

    CHECK_THROWS_AS(gamma(4, GammaBasis::chiral), std::invalid_argument);
    CHECK_THROWS_AS(gamma(-1, GammaBasis::standard), std::invalid_argument);
}

TEST_CASE("symmetric 6x6 gamma tables") {
    const MatrixC g44 = bmwGamma(4, 4);
    CHECK(maxAbsDiff(g44.block(0, 3, 3, 3), MatrixC::Identity(3, 3)) == 0.0);
    CHECK(maxAbsDiff(g44.block(3, 0, 3, 3), MatrixC::Identity(3, 3)) == 0.0);
    CHECK(maxAbs(g44.block(0, 0, 3, 3)) == 0.0);

    const auto s = spin1Matrices();
    const MatrixC g12 = bmwGamma(1, 2);
    CHECK(maxAbsDiff(g12.block(0, 3, 3, 3), MatrixC(-s[0] * s[1] - s[1] * s[0])) == 0.0);

    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu)
            CHECK(maxAbsDiff(bmwGamma(mu, nu), bmwGamma(nu, mu)) == 0.0);
    CHECK_THROWS_AS(bmwGamma(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bmwGamma(1, 5), std::invalid_argument);
}

TEST_CASE("matrix tables serialize to frozen JSON") {
    CHECK(toJson(gamma(0, GammaBasis::standard)).dump() ==
          "[[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]],"
          "[[0.0,0.0],[1.0,0.0],[0.0,0.0],[0.0,0.0]],"
          "[[0.0,0.0],[0.0,0.0],[-1.0,0.0],[0.0,0.0]],"
          "[[0.0,0.0],[0.0,0.0],[0.0,0.0],[-1.0,0.0]]]");
    CHECK(toJson(pauli(2)).dump() ==
          "[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]");
    CHECK(toJson(spin1Matrices()[2]).dump() ==
          "[[[0.0,0.0],[0.0,-1.0],[0.0,0.0]],"
          "[[0.0,1.0],[0.0,0.0],[0.0,0.0]],"
          "[[0.0,0.0],[0.0,0.0],[0.0,0.0]]]");
}

TEST_CASE("four-momentum kinematics") {
    const FourMomentum p(1.5, Vec3(0.3, -0.4, 1.2));
    CHECK(p.absEnergy() * p.absEnergy() - p.p().squaredNorm() ==
          doctest::Approx(1.5 * 1.5).epsilon(1e-14));
    CHECK((p.pR() * p.pL()).imag() == doctest::Approx(0.0));
    CHECK((p.pR() * p.pL()).real() == doctest::Approx(0.3 * 0.3 + 0.4 * 0.4));
    CHECK(p.pPlus() == doctest::Approx(p.absEnergy() + 1.2));

    const FourMomentum rest(2.0, Vec3::Zero());
    CHECK(rest.nHat() == Vec3(0, 0, 1));
    CHECK(rest.phi() == 0.0);

    const FourMomentum lower(1.0, Vec3(0, 0, 1), -1);
    CHECK(lower.p0() < 0.0);
    CHECK(lower.reversed4().p0() > 0.0);
    CHECK_THROWS_AS(FourMomentum(-1.0, Vec3::Zero()), std::invalid_argument);
}

TEST_CASE("boost matrices") {
    std::mt19937_64 rng(11);

    SUBCASE("rest frame gives the identity") {
        const FourMomentum rest(1.0, Vec3::Zero());
        CHECK(maxAbsDiff(boostMatrix(LorentzRep::halfRight, rest),
                         MatrixC::Identity(2, 2)) == 0.0);
        CHECK(maxAbsDiff(boostMatrix(LorentzRep::halfLeft, rest),
                         MatrixC::Identity(2, 2)) == 0.0);
        CHECK(maxAbsDiff(boostMatrix(LorentzRep::oneRight, rest),
                         MatrixC::Identity(3, 3)) == 0.0);
        CHECK(maxAbsDiff(boostMatrix(LorentzRep::oneLeft, rest),
                         MatrixC::Identity(3, 3)) == 0.0);
    }

    SUBCASE("z-boost closed form") {
        const FourMomentum p(2.0, Vec3(0, 0, 3.0));
        const double pPlus = p.absEnergy() + 3.0;
        const double pMinus = p.absEnergy() - 3.0;
        MatrixC expected(2, 2);
        expected << std::sqrt(pPlus / 2.0), 0, 0, std::sqrt(pMinus / 2.0);
        CHECK(maxAbsDiff(boostMatrix(LorentzRep::halfRight, p), expected) < 1e-14);

        // spectral oracle: exp(2 (sigma/2).phi) has eigenvalues p^+-/m
        const MatrixC square = boostMatrix(LorentzRep::halfRight, p) *
                               boostMatrix(LorentzRep::halfLeft, p).inverse();
        Eigen::ComplexEigenSolver<MatrixC> es(square);
        std::vector<double> ev{es.eigenvalues()[0].real(), es.eigenvalues()[1].real()};
        std::sort(ev.begin(), ev.end());
        CHECK(ev[0] == doctest::Approx(pMinus / 2.0).epsilon(1e-12));
        CHECK(ev[1] == doctest::Approx(pPlus / 2.0).epsilon(1e-12));
    }

    SUBCASE("group property along an axis") {
        const Vec3 n = Vec3(0.6, -0.3, 1.0).normalized();
        for (LorentzRep rep : {LorentzRep::halfRight, LorentzRep::oneLeft}) {
            const MatrixC a = boostMatrix(rep, BoostParams{0.7, n});
            const MatrixC b = boostMatrix(rep, BoostParams{0.45, n});
            const MatrixC ab = boostMatrix(rep, BoostParams{1.15, n});
            CHECK(maxAbsDiff(a * b, ab) <= 1e-10);
        }
    }

    SUBCASE("hermitian, positive definite, inverse-adjoint duality") {
        for (int trial = 0; trial < 50; ++trial) {
            const FourMomentum p = randomMomentum(rng);
            const MatrixC lr = boostMatrix(LorentzRep::halfRight, p);
            const MatrixC ll = boostMatrix(LorentzRep::halfLeft, p);
            CHECK(maxAbsDiff(lr, lr.adjoint()) < 1e-12);
            CHECK(maxAbsDiff(ll.inverse(), lr.adjoint()) <= 1e-10);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lr);
            CHECK(es.eigenvalues().minCoeff() > 0.0);
        }
    }

    SUBCASE("massless momentum is rejected") {
        CHECK_THROWS_AS(boostMatrix(LorentzRep::halfRight, FourMomentum(0.0, Vec3(0, 0, 1))),
                        std::invalid_argument);
    }

    SUBCASE("spin-1 exponential against a brute-force series") {
        const Vec3 n = Vec3(0.2, 0.9, -0.4).normalized();
        const double theta = 0.8;
        const MatrixC sn = spin1Dot(n);
        MatrixC series = MatrixC::Identity(3, 3);
        MatrixC term = MatrixC::Identity(3, 3);
        for (int k = 1; k < 40; ++k) {
            term = (term * (theta * sn) / double(k)).eval();
            series += term;
        }
        CHECK(maxAbsDiff(expSpin1(theta, n), series) < 1e-13);
    }
}

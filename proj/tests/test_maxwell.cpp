#include <doctest.h>

#include "spinorlab/maxwell.hpp"

#include <random>

using namespace spinorlab;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("transverse light wave solves the chi = 0 system") {
    FieldTriple f{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(), 0.0, Vec3(0, 0, 1), 1.0};
    f.efield << 1, 0, 0;
    f.bfield << 0, 1, 0;
    CHECK(maxwellResidual(f).maxAbs() == 0.0);
}

TEST_CASE("stationary uniform field solves the system at E = 0") {
    FieldTriple f{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(), 0.0, Vec3::Zero(), 0.0};
    f.bfield << 0, 0, 1;
    CHECK(maxwellResidual(f).maxAbs() == 0.0);
}

TEST_CASE("residuals match an independent componentwise evaluation") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        FieldTriple f{Eigen::Vector3cd::Zero(), Eigen::Vector3cd::Zero(),
                      Complex(u(rng), u(rng)), Vec3(u(rng), u(rng), u(rng)), u(rng)};
        for (int i = 0; i < 3; ++i) {
            f.efield[i] = Complex(u(rng), u(rng));
            f.bfield[i] = Complex(u(rng), u(rng));
        }
        const MaxwellResiduals r = maxwellResidual(f);

        // duplicate evaluation path, written out component by component
        const double kx = f.k.x(), ky = f.k.y(), kz = f.k.z(), w = f.omega;
        const Complex re = f.chi.real(), im = f.chi.imag();
        const Complex curlEx = I * (ky * f.efield[2] - kz * f.efield[1]);
        const Complex curlEy = I * (kz * f.efield[0] - kx * f.efield[2]);
        const Complex curlEz = I * (kx * f.efield[1] - ky * f.efield[0]);
        CHECK(std::abs(r.curlE[0] - (curlEx - I * w * f.bfield[0] - I * kx * im)) < 1e-14);
        CHECK(std::abs(r.curlE[1] - (curlEy - I * w * f.bfield[1] - I * ky * im)) < 1e-14);
        CHECK(std::abs(r.curlE[2] - (curlEz - I * w * f.bfield[2] - I * kz * im)) < 1e-14);
        const Complex curlBx = I * (ky * f.bfield[2] - kz * f.bfield[1]);
        CHECK(std::abs(r.curlB[0] - (curlBx + I * w * f.efield[0] - I * kx * re)) < 1e-14);
        const Complex divE =
            I * (kx * f.efield[0] + ky * f.efield[1] + kz * f.efield[2]) - I * w * re;
        CHECK(std::abs(r.divE - divE) < 1e-14);
        const Complex divB =
            I * (kx * f.bfield[0] + ky * f.bfield[1] + kz * f.bfield[2]) + I * w * im;
        CHECK(std::abs(r.divB - divB) < 1e-14);
    }
}

TEST_CASE("Riemann-Silberstein evolution matrices") {
    const Vec3 k(0, 0, 2.0);
    const auto pair = rsEvolutionMatrices(k);
    CHECK(maxAbsDiff(pair[0], 2.0 * spin1Dot(Vec3(0, 0, 1))) == 0.0);
    CHECK(maxAbsDiff(pair[1], -pair[0]) == 0.0);

    // Det[E - S.k] = E^3 - E |k|^2: verified at 5 sample energies, which
    // pins a degree-3 polynomial uniquely
    const Vec3 kk(0.7, -1.1, 0.4);
    const PolynomialC det = rsDeterminant(kk);
    for (double e : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
        const Complex expected = e * e * e - e * kk.squaredNorm();
        CHECK(std::abs(det.eval(e) - expected) < 1e-10);
    }
    auto roots = clusterRoots(det.roots(), 1e-9);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0].value - Complex(-kk.norm())) < 1e-12);
    CHECK(std::abs(roots[1].value) < 1e-12);
    CHECK(std::abs(roots[2].value - Complex(kk.norm())) < 1e-12);

    // the zero mode is longitudinal
    Eigen::JacobiSVD<MatrixC> svd(spin1Dot(kk), Eigen::ComputeFullV);
    const VectorC null = svd.matrixV().col(2);
    Eigen::Vector3cd cross;
    const Eigen::Vector3cd kc = kk.cast<Complex>();
    cross << kc.y() * null[2] - kc.z() * null[1], kc.z() * null[0] - kc.x() * null[2],
        kc.x() * null[1] - kc.y() * null[0];
    CHECK(cross.norm() < 1e-12);
}

TEST_CASE("Klein-Gordon factorization for spin 1") {
    SUBCASE("on shell the residual vanishes") {
        const Vec3 p(0.6, -0.2, 0.9);
        const double m = 1.2;
        const double e = std::sqrt(p.squaredNorm() + m * m);
        Eigen::Vector3cd psi;
        psi << Complex(0.3, 1.0), Complex(-0.4, 0.2), Complex(0.8, -0.6);
        CHECK(kgFactorizationSpin1(e, p, m, psi).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("off shell the residual is the scalar factor") {
        const Vec3 p(1, 2, -2);
        Eigen::Vector3cd psi;
        psi << Complex(1, 1), Complex(2, -1), Complex(0, 3);
        const double e = 4.0, m = 3.0;
        const double factor = e * e - p.squaredNorm() - m * m;
        CHECK((kgFactorizationSpin1(e, p, m, psi) - factor * psi).cwiseAbs().maxCoeff() ==
              0.0);
    }
    SUBCASE("massless on the light cone recovers the Maxwell-like system") {
        const Vec3 p(0.3, 0.4, 1.2);
        Eigen::Vector3cd psi;
        psi << Complex(0.5, 0.1), Complex(0.2, 0.9), Complex(-0.7, 0.4);
        CHECK(kgFactorizationSpin1(p.norm(), p, 0.0, psi).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("two-mass chiral dispersion") {
    SUBCASE("m2 = 0 is the usual massive branch") {
        const ChiralDispersion d = chiralMassDispersion(1.5, 0.0, 0.8);
        CHECK(d.effectiveMassSquared == doctest::Approx(1.5 * 1.5).epsilon(1e-10));
        bool foundPositive = false;
        for (const auto& root : d.roots)
            if (std::abs(root.value - Complex(std::sqrt(0.64 + 2.25))) < 1e-9)
                foundPositive = true;
        CHECK(foundPositive);
    }
    SUBCASE("m1 = 0 gives a negative effective mass squared, momentum independent") {
        const double m2 = 0.9;
        for (double pm : {1.0, 1.7, 2.4, 5.0}) {
            const ChiralDispersion d = chiralMassDispersion(0.0, m2, pm);
            CHECK(d.effectiveMassSquared == doctest::Approx(-m2 * m2).epsilon(1e-8));
        }
    }
    SUBCASE("each root is doubly degenerate") {
        const ChiralDispersion d = chiralMassDispersion(1.1, 0.4, 0.6);
        REQUIRE(d.roots.size() == 2);
        CHECK(d.roots[0].multiplicity == 2);
        CHECK(d.roots[1].multiplicity == 2);
    }
}

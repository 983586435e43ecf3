#include "spinorlab/maxwell.hpp"

#include <cmath>

namespace spinorlab {

namespace {
const Complex I{0.0, 1.0};

// (ik) x v, written out: Eigen's complex cross() conjugates its result
Eigen::Vector3cd crossIK(const Vec3& k, const Eigen::Vector3cd& v) {
    Eigen::Vector3cd out;
    out << k.y() * v.z() - k.z() * v.y(),
           k.z() * v.x() - k.x() * v.z(),
           k.x() * v.y() - k.y() * v.x();
    return I * out;
}
}  // namespace

double MaxwellResiduals::maxAbs() const {
    double m = std::max(curlE.cwiseAbs().maxCoeff(), curlB.cwiseAbs().maxCoeff());
    m = std::max(m, std::abs(divE));
    m = std::max(m, std::abs(divB));
    return m;
}

MaxwellResiduals maxwellResidual(const FieldTriple& f) {
    const Complex reChi = f.chi.real();
    const Complex imChi = f.chi.imag();
    const Eigen::Vector3cd kc = f.k.cast<Complex>();
    MaxwellResiduals r;
    // curl E = -dB/dt + grad Im chi
    r.curlE = crossIK(f.k, f.efield) - (I * f.omega * f.bfield + I * kc * imChi);
    // curl B = +dE/dt + grad Re chi
    r.curlB = crossIK(f.k, f.bfield) - (-I * f.omega * f.efield + I * kc * reChi);
    // div E = -d(Re chi)/dt
    r.divE = I * (kc.x() * f.efield.x() + kc.y() * f.efield.y() + kc.z() * f.efield.z()) -
             I * f.omega * reChi;
    // div B = +d(Im chi)/dt
    r.divB = I * (kc.x() * f.bfield.x() + kc.y() * f.bfield.y() + kc.z() * f.bfield.z()) +
             I * f.omega * imChi;
    return r;
}

RSVector rsVector(const Eigen::Vector3cd& e, const Eigen::Vector3cd& b) {
    return {e + I * b, e - I * b};
}

std::array<MatrixC, 2> rsEvolutionMatrices(const Vec3& k) {
    const MatrixC sk = spin1Dot(k);
    return {sk, MatrixC(-sk)};
}

PolynomialC rsDeterminant(const Vec3& k) {
    const MatrixC sk = spin1Dot(k);
    const auto det = [&sk](Complex e) {
        return MatrixC(e * MatrixC::Identity(3, 3) - sk).determinant();
    };
    const double scale = std::max(1.0, 2.0 * k.norm());
    return PolynomialC::interpolate(det, 4, scale);
}

Eigen::Vector3cd kgFactorizationSpin1(double energy, const Vec3& p, double m,
                                     const Eigen::Vector3cd& psi) {
    const MatrixC sp = spin1Dot(p);
    const MatrixC id = MatrixC::Identity(3, 3);
    const VectorC v = psi;
    const VectorC lhs = (energy * id - sp) * ((energy * id + sp) * v);
    const Complex pDotPsi = p.x() * psi.x() + p.y() * psi.y() + p.z() * psi.z();
    Eigen::Vector3cd out;
    for (int i = 0; i < 3; ++i) out[i] = lhs[i] - p[i] * pDotPsi - m * m * psi[i];
    return out;
}

ChiralDispersion chiralMassDispersion(double m1, double m2, double pMag) {
    const Vec3 p(0, 0, pMag);
    const MatrixC id = MatrixC::Identity(4, 4);
    const auto det = [&](Complex e) {
        // gamma.p at symbolic energy e
        MatrixC g = e * gamma(0, GammaBasis::chiral) - pMag * gamma(3, GammaBasis::chiral);
        g += m1 * id + m2 * gamma(5, GammaBasis::chiral);
        return g.determinant();
    };
    const double scale = std::max({1.0, 2.0 * pMag, 2.0 * std::abs(m1), 2.0 * std::abs(m2)});
    const PolynomialC poly = PolynomialC::interpolate(det, 5, scale);
    ChiralDispersion out;
    out.roots = clusterRoots(poly.roots(), 1e-6);
    // E^2 - p^2 from any root; momentum independence is checked by callers
    if (!out.roots.empty()) {
        const Complex e = out.roots.front().value;
        out.effectiveMassSquared = (e * e).real() - pMag * pMag;
    } else {
        out.effectiveMassSquared = 0.0;
    }
    return out;
}

}  // namespace spinorlab

#pragma once

// The Maxwell-like system obtained from Klein-Gordon factorization (with the
// extra gradient of a complex scalar chi), Riemann-Silberstein evolution
// generators +-(S.k), and the causal/acausal root structure of
// Det[E -+ S.p].  Plane-wave ansatz throughout: nabla -> ik, d/dt -> -i w.

#include "spinorlab/algebra.hpp"
#include "spinorlab/poly.hpp"

#include <array>

namespace spinorlab {

struct FieldTriple {
    Eigen::Vector3cd efield;
    Eigen::Vector3cd bfield;
    Complex chi;        // Re/Im parts enter the source terms literally
    Vec3 k;
    double omega;
};

struct MaxwellResiduals {
    Eigen::Vector3cd curlE;   // curl E + dB/dt - grad Im chi
    Eigen::Vector3cd curlB;   // curl B - dE/dt - grad Re chi
    Complex divE;             // div E + d(Re chi)/dt
    Complex divB;             // div B - d(Im chi)/dt
    double maxAbs() const;
};

MaxwellResiduals maxwellResidual(const FieldTriple& f);

// evolution generators of phi = E + iB and xi = E - iB
struct RSVector {
    Eigen::Vector3cd phi;
    Eigen::Vector3cd xi;
};
RSVector rsVector(const Eigen::Vector3cd& e, const Eigen::Vector3cd& b);
std::array<MatrixC, 2> rsEvolutionMatrices(const Vec3& k);   // {+S.k, -S.k}

// Det[E I - S.k] as a polynomial in E (degree 3): E^3 - E |k|^2
PolynomialC rsDeterminant(const Vec3& k);

// (E - S.p)(E + S.p) psi - p (p.psi) - m^2 psi; equals (E^2 - p^2 - m^2) psi
Eigen::Vector3cd kgFactorizationSpin1(double energy, const Vec3& p, double m,
                                     const Eigen::Vector3cd& psi);

struct ChiralDispersion {
    std::vector<ClusteredRoot> roots;   // E values with multiplicities
    double effectiveMassSquared;        // E^2 - p^2, momentum independent
};
// roots of Det[gamma.p + m1 + m2 gamma^5] in E at fixed |p|
ChiralDispersion chiralMassDispersion(double m1, double m2, double pMag);

}  // namespace spinorlab

#pragma once

// Dirac u/v spinors in the standard, chiral and helicity bases, their
// normalizations and parity behaviour, the matrix form of the momentum-space
// equation, and the two-mass dispersion of the second-order (Barut-type)
// extension.
//
// Normalization: ubar u = +delta, vbar v = -delta (rest spinors are unit
// columns, boosted columns carry sqrt((E+m)/2m) prefactors).  Negative
// energy sign on the momentum evaluates the same closed forms on the lower
// sheet, where sqrt((p0+m)/2m) continues to i sqrt((E-m)/2m).

#include "spinorlab/algebra.hpp"

#include <string>
#include <vector>

namespace spinorlab {

enum class SpinorBasis { chiral, standard, helicity };

// gamma table used to evaluate residuals/conjugates in a given spinor basis;
// helicity-labelled spinors keep chiral components.
GammaBasis gammaBasisFor(SpinorBasis basis);

struct Bispinor {
    VectorC components;   // 4
    SpinorBasis basis;
    FourMomentum p;
    char kind;            // 'u' or 'v'
    double sigma;         // +-1/2 (spin or helicity label)
};

// sigma = +-1/2; requires m > 0
Bispinor uSpinor(const FourMomentum& p, double sigma, SpinorBasis basis);
Bispinor vSpinor(const FourMomentum& p, double sigma, SpinorBasis basis);

// independent path: Wigner boosts of the rest 2-spinor stacked (right, left)
Bispinor uSpinorViaBoost(const FourMomentum& p, double sigma, SpinorBasis basis);

// sigma.n eigen-2-spinors, full-angle convention: chi+ = (cos t/2, e^{i phi} sin t/2),
// chi- = (-sin t/2 e^{-i phi}, cos t/2).
VectorC helicityTwoSpinor(const Vec3& nHat, int h);
// Same eigenvectors with the symmetric half-angle phases e^{-+ i phi/2};
// under n -> -n these map onto i * (opposite helicity), which is the
// convention the azimuthal-phase identities of the Majorana sector assume.
VectorC helicityTwoSpinorHalfAngle(const Vec3& nHat, int h);

// u/v pairs labelled by helicity +-1/2; requires |p| > 0.
std::vector<Bispinor> helicitySpinors(const FourMomentum& p);

// gamma.p -+ m in the tagged basis (massSign +1 -> u-type operator gamma.p - m)
struct DiracOperator {
    MatrixC matrix;
    FourMomentum p;
    int massSign;
    SpinorBasis basis;
};
DiracOperator diracOperator(const FourMomentum& p, int massSign, SpinorBasis basis);

// residual of the governing equation for this spinor: (gamma.p -+ m) psi
double diracResidual(const Bispinor& psi);

struct GramMatrices {
    MatrixC ubar_u;   // 2x2 over (sigma, sigma')
    MatrixC vbar_v;
    MatrixC ubar_v;
};
GramMatrices gramNormalization(const FourMomentum& p, SpinorBasis basis);

// gamma^0 psi(-p); u -> +u, v -> -v
Bispinor parityApply(const Bispinor& psi);

struct BarutSpectrum {
    std::vector<double> masses;   // positive roots W
    std::string note;
};

// Positive roots of Det[gamma.p + alpha p^2 / m - beta] = 0 at rest, p^2 = W^2.
// Bracketed scan over W in (0, 10 m], bisection per branch W = +-(beta - alpha W^2/m).
BarutSpectrum barutMassSpectrum(double alpha, double beta, double m);

}  // namespace spinorlab

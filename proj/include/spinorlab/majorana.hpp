#pragma once

// Self / anti-self charge-conjugate lambda and rho 4-spinors in the momentum
// representation: rest and boosted closed forms, the antilinear charge
// conjugation C = -e^{i theta} gamma^2 K, parity and rho<->lambda maps,
// bi-orthonormal products, the coupled first-order system and its
// 8-component form, chiral phase transformations, and the azimuthal-phase
// (Xi) conjugation identities.
//
// Everything lives in the chiral basis.  Construction: lambda = (+-i Theta
// phi_L^*, phi_L), rho = (phi_R, -+i Theta phi_R^*), Theta = -i sigma_2,
// with phi built from sigma_3 eigenspinors scaled by sqrt(m/2); the printed
// closed forms below correspond to the phase choice theta_1 = theta_2 = 0.

#include "spinorlab/algebra.hpp"
#include "spinorlab/report.hpp"

#include <array>
#include <optional>

namespace spinorlab {

enum class Family { lambda, rho };
enum class ConjClass { S, A };

struct MajoranaSpinor {
    VectorC components;   // 4, chiral basis
    Family family;
    ConjClass conjClass;
    Eta eta;
    FourMomentum p;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

// -e^{i theta} gamma^2 conj(psi); an involution for every theta
VectorC chargeConjugate(const VectorC& psi, double theta = 0.0);
MatrixC chargeConjugationMatrix(double theta = 0.0);   // the linear part

// the antilinear operator as a value: matrix part composed with conjugation
struct ChargeConjugation {
    double theta = 0.0;
    MatrixC matrixPart;
    bool antilinear = true;

    explicit ChargeConjugation(double phase = 0.0)
        : theta(phase), matrixPart(chargeConjugationMatrix(phase)) {}
    VectorC apply(const VectorC& psi) const { return matrixPart * psi.conjugate(); }
};

// residual of C psi = +psi (class S) or C psi = -psi (class A)
double selfConjugacyResidual(const MajoranaSpinor& s);

MajoranaSpinor lambdaRest(ConjClass c, Eta e, double m, double theta1 = 0.0,
                          double theta2 = 0.0);
MajoranaSpinor rhoRest(ConjClass c, Eta e, double m, double theta1 = 0.0,
                       double theta2 = 0.0);

// printed closed forms (entries in p^+-, p_{r,l})
MajoranaSpinor lambdaSpinor(ConjClass c, Eta e, const FourMomentum& p,
                            double theta1 = 0.0, double theta2 = 0.0);
MajoranaSpinor rhoSpinor(ConjClass c, Eta e, const FourMomentum& p,
                         double theta1 = 0.0, double theta2 = 0.0);

// independent construction path: blockwise Wigner boost of the rest spinor
MajoranaSpinor lambdaViaBoost(ConjClass c, Eta e, const FourMomentum& p,
                              double theta1 = 0.0, double theta2 = 0.0);
MajoranaSpinor rhoViaBoost(ConjClass c, Eta e, const FourMomentum& p,
                           double theta1 = 0.0, double theta2 = 0.0);

// lambda built from helicity eigen-2-spinors (half-angle phase convention);
// the Xi identities and the massless limit are stated for this construction.
MajoranaSpinor lambdaHelicity(ConjClass c, Eta e, const FourMomentum& p);

// gamma^0 psi(-p); swaps family lambda<->rho and class S<->A, eta fixed.
// Returns the mapped spinor and the target labels it should equal.
struct ParityImage {
    MajoranaSpinor mapped;       // gamma^0 psi(-p), labels = expected target
    Complex phase;               // measured ratio against the printed target
    double residual;             // after dividing out the phase
};
ParityImage parityMap(const MajoranaSpinor& s);

// the four printed identities rho^S_up = -i lambda^A_down etc.
VerificationReport rhoLambdaRelations(const FourMomentum& p, double tol = kDefaultTol);

// 4x4 Dirac-conjugate Gram within the lambda family and within the rho
// family, rows/cols ordered (S up, S down, A up, A down)
struct BiorthGrams {
    MatrixC lambdaGram;
    MatrixC rhoGram;
};
BiorthGrams biorthonormalGrams(const FourMomentum& p, double theta1 = 0.0,
                               double theta2 = 0.0);
MatrixC expectedLambdaGram(double m);   // +-im pattern
MatrixC expectedRhoGram(double m);

// Momentum-space residuals of the coupled system
//   i gamma.d lambda^S = m rho^A,   i gamma.d rho^A = m lambda^S,
//   i gamma.d lambda^A = -m rho^S,  i gamma.d rho^S = -m lambda^A,
// searching all 2^4 frequency-sign assignments; the surviving assignment and
// the residuals of both 8-component forms are recorded.
VerificationReport dynamicalResiduals(const FourMomentum& p, double tol = kDefaultTol);

// 8x8 Gamma^mu = offdiag(gamma^mu, gamma^mu) contracted with p
MatrixC bigGammaDotP(const FourMomentum& p);

// the printed 1/2 {1, i, ...} matrix taking (u_+, u_-, v_+, v_-) to
// (lambda^S_up, lambda^S_down, lambda^A_up, lambda^A_down)
MatrixC connectionMatrix();

struct ConnectionCheck {
    Complex calibration;   // global constant fixed at the rest frame
    double residual;       // max componentwise residual at p
    double detMagnitude;   // |det| of the printed matrix
};
ConnectionCheck connectionCheck(const FourMomentum& p);

// (cos a -+ i gamma^5 sin a) psi: minus for lambda, plus for rho
MajoranaSpinor chiralGaugeTransform(const MajoranaSpinor& s, double alpha);

// Xi = diag(e^{i phi}, e^{-i phi}) for the azimuth of p
MatrixC xiMatrix(const FourMomentum& p);
VerificationReport xiProperty(const FourMomentum& p, double tol = kDefaultTol);

struct MasslessLimitResult {
    VerificationReport report;
    std::vector<double> massOverE;
    std::vector<double> ratioUpDown;   // |lambda^S_up| / |lambda^S_down|
    double fittedExponent;             // log-log slope of the ratio
};
MasslessLimitResult masslessLimit(Eta e = Eta::up);

}  // namespace spinorlab

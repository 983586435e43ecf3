#pragma once

// The 2(2S+1) spin-1 sector: Pi matrices and their boost covariance, the
// generalized operator gamma_{ab} p_a p_b + A p.p + B m^2 built on the
// symmetric 6x6 tables, its degree-12 dispersion determinant, the explicit
// 6-component solutions, and boson/antiboson parity.
//
// Euclidean labels are used inside the operator (p_4 = iE); everything else
// stays in diag(+,-,-,-).  Two stackings of the 6-component object appear:
// the printed gamma_{mu nu} act on (Phi, Xi) ("weinberg" stacking), while
// the printed u_sigma columns live in the parity-diagonal ("standard")
// stacking; bivectorBasisChange() connects them.  Spin-1 labels are the
// spherical (+1, 0, -1) components.

#include "spinorlab/algebra.hpp"
#include "spinorlab/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spinorlab {

enum class BivectorRep { weinberg, standard };

struct Bivector {
    VectorC components;   // 6: (upper triple, lower triple)
    BivectorRep rep;
    FourMomentum p;
    char kind;            // 'u' or 'v'
    int sigma;            // +1, 0, -1
};

struct EuclideanMomentum {
    Vec3 p;
    double energy;        // p4 = i * energy

    Complex p4() const { return {0.0, energy}; }
    Complex dot() const { return Complex(p.squaredNorm() - energy * energy, 0.0); }
    static EuclideanMomentum onShell(const FourMomentum& q) { return {q.p(), q.p0()}; }
};

// m^{2s} exp(+-2 Theta qhat.S), tanh Theta = |q|/E
MatrixC piMatrix(const FourMomentum& q, double spin,
                 SpinBasis basis = SpinBasis::spherical);
MatrixC piBarMatrix(const FourMomentum& q, double spin,
                    SpinBasis basis = SpinBasis::spherical);

// 6x6 involution connecting the two stackings (same form as the Dirac one)
MatrixC bivectorBasisChange();

// gamma_{ab} p_a p_b + A (p.p) + B m^2 on the requested stacking
MatrixC wthOperator(const EuclideanMomentum& q, double A, double B, double m,
                    BivectorRep rep = BivectorRep::weinberg,
                    SpinBasis basis = SpinBasis::spherical);

// printed 6-component columns (standard stacking); v = gamma_5 u
Bivector u1Spinor(const FourMomentum& p, int sigma);
Bivector v1Spinor(const FourMomentum& p, int sigma);

// independent path: Wigner boosts of the rest bivector (m/sqrt2)(e, e)
Bivector u1ViaBoost(const FourMomentum& p, int sigma,
                    BivectorRep rep = BivectorRep::standard);

Bivector toRep(const Bivector& b, BivectorRep rep);

// residuals of PiBar(p) Phi = m^2 Xi and Pi(p) Xi = m^2 Phi
struct CoupledResidual {
    VectorC first;    // PiBar Phi - m^2 Xi
    VectorC second;   // Pi Xi - m^2 Phi
    double maxAbs() const;
};
CoupledResidual coupledResidual(const FourMomentum& p, const Bivector& psi);

struct DispersionResult {
    PolynomialC detPoly;
    int degree = 0;
    std::vector<ClusteredRoot> roots;        // E roots with multiplicities
    std::vector<std::string> classification; // relativistic | acausal-E0 | other
    bool allRelativistic = false;
    bool anyAcausalZero = false;
};
// determinant in E by Chebyshev interpolation (13 nodes, rescaled on
// ill-conditioning), roots clustered into multiplicities and classified
// against E^2 = p^2 + m^2
DispersionResult dispersionSpectrum(double A, double B, const Vec3& pvec, double m,
                                    double classifyTol = -1.0);

// confirms which (A, B) sign choice of the momentum-space image of
// [gamma dd + dd - 2 m^2] annihilates the printed u columns
struct THParams {
    double A;
    double B;
    double residual;
};
THParams tuckerHammerParams(const FourMomentum& probe);

// +1 / -1 / nullopt (not an eigenstate); parity = gamma_44 with p -> -p,
// fixed to +1 on rest-frame u.  The family form evaluates arbitrary
// momentum-indexed 6-component objects (standard stacking), so mixed
// combinations can be tested too.
using BivectorFamily = std::function<VectorC(const FourMomentum&)>;
std::optional<int> bosonParity(const BivectorFamily& family, const FourMomentum& p,
                               double tol = kDefaultTol);
std::optional<int> bosonParity(const Bivector& psi, double tol = kDefaultTol);

}  // namespace spinorlab

#pragma once

// Small complex linear algebra shared by all modules: the fixed matrix
// tables (Pauli, spin-1, Dirac gamma in two bases, the symmetric 6x6
// gamma_{mu nu}), on-shell four-momenta and the finite Lorentz boost
// matrices exp(+-S.phi) for the (S,0) and (0,S) representations.
//
// Conventions: metric diag(+,-,-,-), natural units c = hbar = 1.
// Chiral basis: gamma^0 antidiagonal, gamma^5 = diag(1,1,-1,-1), spinors
// stacked as (right, left).  The standard (parity) basis is reached by the
// fixed unitary basisChange(): gamma^0 = diag(1,1,-1,-1) there.

#include <Eigen/Dense>
#include <complex>
#include <array>
#include <stdexcept>

namespace spinorlab {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kTableTol = 1e-12;

// max |a_ij - b_ij|
double maxAbsDiff(const MatrixC& a, const MatrixC& b);
double maxAbs(const MatrixC& a);
bool approxEqual(const MatrixC& a, const MatrixC& b, double tol = kDefaultTol);

MatrixC commutator(const MatrixC& a, const MatrixC& b);
MatrixC anticommutator(const MatrixC& a, const MatrixC& b);

// On-shell four-momentum: energy is derived, E = sign * sqrt(p^2 + m^2).
// The sign covers the negative-frequency sheet used by the mode-expansion
// checks; everything else runs with sign = +1.
class FourMomentum {
public:
    FourMomentum(double mass, const Vec3& p, int energySign = +1);

    double mass() const { return m_; }
    const Vec3& p() const { return p_; }
    double px() const { return p_.x(); }
    double py() const { return p_.y(); }
    double pz() const { return p_.z(); }
    int energySign() const { return sign_; }

    double absEnergy() const;          // +sqrt(p^2 + m^2)
    double p0() const;                 // signed energy
    double pNorm() const { return p_.norm(); }
    Vec3 nHat() const;                 // p/|p|, (0,0,1) at rest

    // p^+- = p0 +- pz, p_{r,l} = px +- i py
    double pPlus() const { return p0() + pz(); }
    double pMinus() const { return p0() - pz(); }
    Complex pR() const { return {px(), py()}; }
    Complex pL() const { return {px(), -py()}; }

    // p0 + m without the m - E cancellation on the lower sheet
    double p0PlusM() const;

    double theta() const;              // polar angle of p
    double phi() const;                // azimuth, 0 when px = py = 0

    FourMomentum reversed3() const;    // p -> -p, same energy sign
    FourMomentum reversed4() const;    // p -> -p and energy sign flipped

private:
    double m_;
    Vec3 p_;
    int sign_;
};

// Boost parameters: cosh(phi) = E/m, sinh(phi) = |p|/m.
struct BoostParams {
    double rapidity = 0.0;
    Vec3 axis = Vec3(0, 0, 1);

    static BoostParams fromMomentum(const FourMomentum& p);
};

enum class GammaBasis { chiral, standard };

// chiral-helicity label carried by the Majorana-like spinors and the
// Fock-space generators
enum class Eta { up, down };

// Spin-1 matrix flavour: cartesian is (S_i)_jk = -i eps_ijk; spherical is
// the angular-momentum representation on the (+1, 0, -1) components.  The
// two are conjugate by sphericalBasisMatrix().
enum class SpinBasis { cartesian, spherical };

enum class LorentzRep { halfRight, halfLeft, oneRight, oneLeft };  // (1/2,0), (0,1/2), (1,0), (0,1)

MatrixC pauli(int i);                          // i in 1..3, 2x2
std::array<MatrixC, 3> spin1Matrices(SpinBasis basis = SpinBasis::cartesian);
MatrixC sphericalBasisMatrix();                // 3x3 unitary, v_cart = V v_sph

MatrixC pauliDot(const Vec3& v);               // sigma . v
MatrixC spin1Dot(const Vec3& v, SpinBasis basis = SpinBasis::cartesian);

// mu in 0..3 or 5
MatrixC gamma(int mu, GammaBasis basis);
MatrixC gammaDotP(const FourMomentum& p, GammaBasis basis);   // gamma^mu p_mu
MatrixC basisChange();                         // U with U gamma_chiral U^dag = gamma_standard

// Symmetric 6x6 matrices, Euclidean labels 1..4 (4 timelike), built on the
// chiral (upper/lower) stacking of the two spin-1 triples.
MatrixC bmwGamma(int mu, int nu, SpinBasis basis = SpinBasis::cartesian);

MatrixC boostMatrix(LorentzRep rep, const BoostParams& b,
                    SpinBasis basis = SpinBasis::cartesian);
MatrixC boostMatrix(LorentzRep rep, const FourMomentum& p,
                    SpinBasis basis = SpinBasis::cartesian);

// exp(theta * S.n) closed forms
MatrixC expPauliHalf(double theta, const Vec3& nHat);   // exp(theta sigma.n / 2)
MatrixC expSpin1(double theta, const Vec3& nHat, SpinBasis basis = SpinBasis::cartesian);

}  // namespace spinorlab

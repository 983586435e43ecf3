#include "spinorlab/algebra.hpp"

#include <cmath>

namespace spinorlab {

namespace {
const Complex I{0.0, 1.0};
}

double maxAbsDiff(const MatrixC& a, const MatrixC& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("maxAbsDiff: shape mismatch");
    return (a - b).cwiseAbs().maxCoeff();
}

double maxAbs(const MatrixC& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool approxEqual(const MatrixC& a, const MatrixC& b, double tol) {
    return maxAbsDiff(a, b) <= tol;
}

MatrixC commutator(const MatrixC& a, const MatrixC& b) { return a * b - b * a; }
MatrixC anticommutator(const MatrixC& a, const MatrixC& b) { return a * b + b * a; }

FourMomentum::FourMomentum(double mass, const Vec3& p, int energySign)
    : m_(mass), p_(p), sign_(energySign) {
    if (mass < 0.0) throw std::invalid_argument("FourMomentum: negative mass");
    if (energySign != 1 && energySign != -1)
        throw std::invalid_argument("FourMomentum: energy sign must be +1 or -1");
}

double FourMomentum::absEnergy() const { return std::sqrt(p_.squaredNorm() + m_ * m_); }
double FourMomentum::p0() const { return sign_ * absEnergy(); }

Vec3 FourMomentum::nHat() const {
    const double n = p_.norm();
    if (n == 0.0) return Vec3(0, 0, 1);
    return p_ / n;
}

double FourMomentum::theta() const {
    const double n = p_.norm();
    if (n == 0.0) return 0.0;
    return std::acos(std::clamp(p_.z() / n, -1.0, 1.0));
}

double FourMomentum::phi() const {
    if (p_.x() == 0.0 && p_.y() == 0.0) return 0.0;
    return std::atan2(p_.y(), p_.x());
}

FourMomentum FourMomentum::reversed3() const { return {m_, -p_, sign_}; }
FourMomentum FourMomentum::reversed4() const { return {m_, -p_, -sign_}; }

double FourMomentum::p0PlusM() const {
    if (sign_ > 0) return absEnergy() + m_;
    return -p_.squaredNorm() / (absEnergy() + m_);   // m - E, cancellation-free
}

BoostParams BoostParams::fromMomentum(const FourMomentum& p) {
    if (p.mass() <= 0.0)
        throw std::invalid_argument("BoostParams: rapidity diverges at m = 0");
    BoostParams b;
    b.axis = p.nHat();
    b.rapidity = std::asinh(p.pNorm() / p.mass());
    return b;
}

MatrixC pauli(int i) {
    const Complex negI{0.0, -1.0};   // avoids the -0.0 real part of -I
    MatrixC s(2, 2);
    switch (i) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, negI, I, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli: axis must be 1..3");
    }
    return s;
}

MatrixC sphericalBasisMatrix() {
    // columns are e_{+1}, e_0, e_{-1} in cartesian components
    const double r = 1.0 / std::sqrt(2.0);
    MatrixC v(3, 3);
    v << -r, 0, r,
         -I * r, 0, -I * r,
         0, 1, 0;
    return v;
}

std::array<MatrixC, 3> spin1Matrices(SpinBasis basis) {
    std::array<MatrixC, 3> s;
    for (auto& m : s) m = MatrixC::Zero(3, 3);
    const Complex negI{0.0, -1.0};
    if (basis == SpinBasis::cartesian) {
        // (S_i)_jk = -i eps_ijk
        s[0] << 0, 0, 0,
                0, 0, negI,
                0, I, 0;
        s[1] << 0, 0, I,
                0, 0, 0,
                negI, 0, 0;
        s[2] << 0, negI, 0,
                I, 0, 0,
                0, 0, 0;
    } else {
        // angular-momentum representation on the (+1, 0, -1) components;
        // conjugate to the cartesian set by sphericalBasisMatrix()
        const double r = 1.0 / std::sqrt(2.0);
        const Complex negIr{0.0, -r};
        s[0] << 0, r, 0,
                r, 0, r,
                0, r, 0;
        s[1] << 0, negIr, 0,
                I * r, 0, negIr,
                0, I * r, 0;
        s[2] << 1, 0, 0,
                0, 0, 0,
                0, 0, -1;
    }
    return s;
}

MatrixC pauliDot(const Vec3& v) {
    return v.x() * pauli(1) + v.y() * pauli(2) + v.z() * pauli(3);
}

MatrixC spin1Dot(const Vec3& v, SpinBasis basis) {
    const auto s = spin1Matrices(basis);
    return v.x() * s[0] + v.y() * s[1] + v.z() * s[2];
}

MatrixC gamma(int mu, GammaBasis basis) {
    // both tables are written out so the entries stay exact integers; the
    // U-conjugation relation between them is a test, not the construction
    MatrixC g = MatrixC::Zero(4, 4);
    const MatrixC id2 = MatrixC::Identity(2, 2);
    const bool chiral = basis == GammaBasis::chiral;
    if (mu == 0) {
        if (chiral) {
            g.block(0, 2, 2, 2) = id2;
            g.block(2, 0, 2, 2) = id2;
        } else {
            g.block(0, 0, 2, 2) = id2;
            g.block(2, 2, 2, 2) = -id2;
        }
    } else if (mu >= 1 && mu <= 3) {
        const MatrixC s = pauli(mu);
        if (chiral) {
            g.block(0, 2, 2, 2) = -s;
            g.block(2, 0, 2, 2) = s;
        } else {
            g.block(0, 2, 2, 2) = s;
            g.block(2, 0, 2, 2) = -s;
        }
    } else if (mu == 5) {
        if (chiral) {
            g.block(0, 0, 2, 2) = id2;
            g.block(2, 2, 2, 2) = -id2;
        } else {
            g.block(0, 2, 2, 2) = id2;
            g.block(2, 0, 2, 2) = id2;
        }
    } else {
        throw std::invalid_argument("gamma: index must be 0..3 or 5");
    }
    return g;
}

MatrixC basisChange() {
    MatrixC u = MatrixC::Zero(4, 4);
    const double r = 1.0 / std::sqrt(2.0);
    const MatrixC id2 = MatrixC::Identity(2, 2);
    u.block(0, 0, 2, 2) = r * id2;
    u.block(0, 2, 2, 2) = r * id2;
    u.block(2, 0, 2, 2) = r * id2;
    u.block(2, 2, 2, 2) = -r * id2;
    return u;
}

MatrixC gammaDotP(const FourMomentum& p, GammaBasis basis) {
    MatrixC g = p.p0() * gamma(0, basis);
    const Vec3 v = p.p();
    for (int i = 1; i <= 3; ++i) g -= v[i - 1] * gamma(i, basis);
    return g;
}

MatrixC bmwGamma(int mu, int nu, SpinBasis basis) {
    if (mu < 1 || mu > 4 || nu < 1 || nu > 4)
        throw std::invalid_argument("bmwGamma: indices must be 1..4");
    MatrixC g = MatrixC::Zero(6, 6);
    const MatrixC id3 = MatrixC::Identity(3, 3);
    const auto s = spin1Matrices(basis);
    if (mu == 4 && nu == 4) {
        g.block(0, 3, 3, 3) = id3;
        g.block(3, 0, 3, 3) = id3;
    } else if (mu == 4 || nu == 4) {
        const int i = (mu == 4) ? nu : mu;
        g.block(0, 3, 3, 3) = I * s[i - 1];
        g.block(3, 0, 3, 3) = -I * s[i - 1];
    } else {
        const MatrixC block =
            (mu == nu ? id3 : MatrixC::Zero(3, 3)) - s[mu - 1] * s[nu - 1] - s[nu - 1] * s[mu - 1];
        g.block(0, 3, 3, 3) = block;
        g.block(3, 0, 3, 3) = block;
    }
    return g;
}

MatrixC expPauliHalf(double theta, const Vec3& nHat) {
    const MatrixC sn = pauliDot(nHat);
    return std::cosh(theta / 2.0) * MatrixC::Identity(2, 2) + std::sinh(theta / 2.0) * sn;
}

MatrixC expSpin1(double theta, const Vec3& nHat, SpinBasis basis) {
    // (S.n)^3 = S.n for |n| = 1
    const MatrixC sn = spin1Dot(nHat, basis);
    return MatrixC::Identity(3, 3) + std::sinh(theta) * sn +
           (std::cosh(theta) - 1.0) * sn * sn;
}

MatrixC boostMatrix(LorentzRep rep, const BoostParams& b, SpinBasis basis) {
    switch (rep) {
        case LorentzRep::halfRight: return expPauliHalf(b.rapidity, b.axis);
        case LorentzRep::halfLeft: return expPauliHalf(-b.rapidity, b.axis);
        case LorentzRep::oneRight: return expSpin1(b.rapidity, b.axis, basis);
        case LorentzRep::oneLeft: return expSpin1(-b.rapidity, b.axis, basis);
    }
    throw std::logic_error("boostMatrix: bad rep");
}

MatrixC boostMatrix(LorentzRep rep, const FourMomentum& p, SpinBasis basis) {
    return boostMatrix(rep, BoostParams::fromMomentum(p), basis);
}

}  // namespace spinorlab

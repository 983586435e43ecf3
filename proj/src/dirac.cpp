#include "spinorlab/dirac.hpp"

#include <cmath>

namespace spinorlab {

namespace {

const Complex I{0.0, 1.0};

// sqrt((p0 + m)/2m), continued to the lower energy sheet
Complex normFactor(const FourMomentum& p) {
    return std::sqrt(Complex(p.p0PlusM(), 0.0) / (2.0 * p.mass()));
}

VectorC standardColumn(const FourMomentum& p, char kind, double sigma) {
    const Complex n = normFactor(p);
    const Complex d = Complex(p.p0PlusM(), 0.0);
    VectorC c(4);
    if (kind == 'u') {
        if (sigma > 0)
            c << 1.0, 0.0, p.pz() / d, p.pR() / d;
        else
            c << 0.0, 1.0, p.pL() / d, -p.pz() / d;
    } else {
        if (sigma > 0)
            c << p.pz() / d, p.pR() / d, 1.0, 0.0;
        else
            c << p.pL() / d, -p.pz() / d, 0.0, 1.0;
    }
    return n * c;
}

void requireMassive(const FourMomentum& p, const char* who) {
    if (p.mass() <= 0.0) throw std::invalid_argument(std::string(who) + ": requires m > 0");
}

}  // namespace

GammaBasis gammaBasisFor(SpinorBasis basis) {
    return basis == SpinorBasis::standard ? GammaBasis::standard : GammaBasis::chiral;
}

Bispinor uSpinor(const FourMomentum& p, double sigma, SpinorBasis basis) {
    requireMassive(p, "uSpinor");
    if (basis == SpinorBasis::helicity) {
        if (p.pNorm() == 0.0)
            throw std::invalid_argument("uSpinor: helicity label undefined at p = 0");
        const VectorC chi = helicityTwoSpinor(p.nHat(), sigma > 0 ? +1 : -1);
        const MatrixC lr = boostMatrix(LorentzRep::halfRight, p);
        const MatrixC ll = boostMatrix(LorentzRep::halfLeft, p);
        VectorC c(4);
        c.segment(0, 2) = lr * chi;
        c.segment(2, 2) = ll * chi;
        c /= std::sqrt(2.0);
        return {c, basis, p, 'u', sigma};
    }
    VectorC c = standardColumn(p, 'u', sigma);
    if (basis == SpinorBasis::chiral) c = (basisChange().adjoint() * c).eval();
    return {c, basis, p, 'u', sigma};
}

Bispinor vSpinor(const FourMomentum& p, double sigma, SpinorBasis basis) {
    requireMassive(p, "vSpinor");
    if (basis == SpinorBasis::helicity) {
        Bispinor u = uSpinor(p, sigma, basis);
        u.components = (gamma(5, GammaBasis::chiral) * u.components).eval();
        u.kind = 'v';
        return u;
    }
    VectorC c = standardColumn(p, 'v', sigma);
    if (basis == SpinorBasis::chiral) c = (basisChange().adjoint() * c).eval();
    return {c, basis, p, 'v', sigma};
}

Bispinor uSpinorViaBoost(const FourMomentum& p, double sigma, SpinorBasis basis) {
    requireMassive(p, "uSpinorViaBoost");
    VectorC chi(2);
    if (basis == SpinorBasis::helicity)
        chi = helicityTwoSpinor(p.nHat(), sigma > 0 ? +1 : -1);
    else
        chi = sigma > 0 ? (VectorC(2) << 1.0, 0.0).finished()
                        : (VectorC(2) << 0.0, 1.0).finished();
    VectorC c(4);
    c.segment(0, 2) = boostMatrix(LorentzRep::halfRight, p) * chi;
    c.segment(2, 2) = boostMatrix(LorentzRep::halfLeft, p) * chi;
    c /= std::sqrt(2.0);
    if (basis == SpinorBasis::standard) c = (basisChange() * c).eval();
    return {c, basis, p, 'u', sigma};
}

VectorC helicityTwoSpinor(const Vec3& nHat, int h) {
    const double t = std::acos(std::clamp(nHat.z(), -1.0, 1.0));
    const double ph = (nHat.x() == 0.0 && nHat.y() == 0.0) ? 0.0 : std::atan2(nHat.y(), nHat.x());
    VectorC chi(2);
    if (h > 0)
        chi << std::cos(t / 2), std::exp(I * ph) * std::sin(t / 2);
    else
        chi << -std::exp(-I * ph) * std::sin(t / 2), std::cos(t / 2);
    return chi;
}

VectorC helicityTwoSpinorHalfAngle(const Vec3& nHat, int h) {
    const double t = std::acos(std::clamp(nHat.z(), -1.0, 1.0));
    const double ph = (nHat.x() == 0.0 && nHat.y() == 0.0) ? 0.0 : std::atan2(nHat.y(), nHat.x());
    VectorC chi(2);
    if (h > 0)
        chi << std::exp(-I * ph / 2.0) * std::cos(t / 2), std::exp(I * ph / 2.0) * std::sin(t / 2);
    else
        chi << -std::exp(-I * ph / 2.0) * std::sin(t / 2), std::exp(I * ph / 2.0) * std::cos(t / 2);
    return chi;
}

std::vector<Bispinor> helicitySpinors(const FourMomentum& p) {
    requireMassive(p, "helicitySpinors");
    if (p.pNorm() == 0.0)
        throw std::invalid_argument("helicitySpinors: helicity undefined at p = 0");
    return {uSpinor(p, +0.5, SpinorBasis::helicity), uSpinor(p, -0.5, SpinorBasis::helicity),
            vSpinor(p, +0.5, SpinorBasis::helicity), vSpinor(p, -0.5, SpinorBasis::helicity)};
}

DiracOperator diracOperator(const FourMomentum& p, int massSign, SpinorBasis basis) {
    return {gammaDotP(p, gammaBasisFor(basis)) -
                static_cast<double>(massSign) * p.mass() * MatrixC::Identity(4, 4),
            p, massSign, basis};
}

double diracResidual(const Bispinor& psi) {
    const int massSign = psi.kind == 'u' ? +1 : -1;
    return (diracOperator(psi.p, massSign, psi.basis).matrix * psi.components).norm();
}

GramMatrices gramNormalization(const FourMomentum& p, SpinorBasis basis) {
    const MatrixC g0 = gamma(0, gammaBasisFor(basis));
    std::vector<Bispinor> us{uSpinor(p, +0.5, basis), uSpinor(p, -0.5, basis)};
    std::vector<Bispinor> vs{vSpinor(p, +0.5, basis), vSpinor(p, -0.5, basis)};
    GramMatrices out{MatrixC(2, 2), MatrixC(2, 2), MatrixC(2, 2)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            out.ubar_u(a, b) = us[a].components.adjoint() * g0 * us[b].components;
            out.vbar_v(a, b) = vs[a].components.adjoint() * g0 * vs[b].components;
            out.ubar_v(a, b) = us[a].components.adjoint() * g0 * vs[b].components;
        }
    return out;
}

Bispinor parityApply(const Bispinor& psi) {
    // psi is treated as c times its labelled family member; parity maps the
    // family to gamma^0 psi(-p) and the coefficient rides along, so applying
    // twice is the identity
    const auto build = [&](const FourMomentum& q) {
        return psi.kind == 'u' ? uSpinor(q, psi.sigma, psi.basis)
                               : vSpinor(q, psi.sigma, psi.basis);
    };
    const VectorC canonical = build(psi.p).components;
    const Complex coeff = (canonical.adjoint() * psi.components)(0) / canonical.squaredNorm();
    Bispinor out = psi;
    out.components =
        (coeff * gamma(0, gammaBasisFor(psi.basis)) * build(psi.p.reversed3()).components)
            .eval();
    return out;
}

BarutSpectrum barutMassSpectrum(double alpha, double beta, double m) {
    if (m <= 0.0) throw std::invalid_argument("barutMassSpectrum: requires m > 0");
    // Det[gamma.p + alpha p^2/m - beta] = (W^2 - (beta - alpha W^2/m)^2)^2 at
    // p = (W, 0); zeros are zeros of either linear-in-W branch below.
    const auto branch = [&](double w, int s) {
        return w - s * (beta - alpha * w * w / m);
    };
    BarutSpectrum out;
    const int samples = 10000;
    const double top = 10.0 * m;
    for (int s : {+1, -1}) {
        double prevW = top / samples * 1e-6;
        double prevF = branch(prevW, s);
        for (int k = 1; k <= samples; ++k) {
            const double w = top * k / samples;
            const double f = branch(w, s);
            if (prevF == 0.0) out.masses.push_back(prevW);
            if (prevF * f < 0.0) {
                double lo = prevW, hi = w;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (branch(lo, s) * branch(mid, s) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                out.masses.push_back(0.5 * (lo + hi));
            }
            prevW = w;
            prevF = f;
        }
    }
    // merge the branches: coincident roots count once
    std::sort(out.masses.begin(), out.masses.end());
    std::vector<double> merged;
    for (double w : out.masses)
        if (merged.empty() || std::abs(w - merged.back()) > 1e-8 * m) merged.push_back(w);
    out.masses = merged;
    if (out.masses.empty())
        out.note = "no positive root of W = +-(beta - alpha W^2/m) in (0, 10m]";
    return out;
}

}  // namespace spinorlab

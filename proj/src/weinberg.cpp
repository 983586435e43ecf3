#include "spinorlab/weinberg.hpp"

#include <cmath>
#include <limits>

namespace spinorlab {

namespace {

const Complex I{0.0, 1.0};

void requireMassive(const FourMomentum& p, const char* who) {
    if (p.mass() <= 0.0) throw std::invalid_argument(std::string(who) + ": requires m > 0");
}

double rapidityOf(const FourMomentum& q) {
    return std::asinh(q.pNorm() / q.mass());   // cosh = E/m, tanh = |p|/E
}

MatrixC gamma5Bivector(BivectorRep rep) {
    MatrixC g = MatrixC::Zero(6, 6);
    const MatrixC id3 = MatrixC::Identity(3, 3);
    if (rep == BivectorRep::standard) {
        g.block(0, 3, 3, 3) = id3;
        g.block(3, 0, 3, 3) = id3;
    } else {
        g.block(0, 0, 3, 3) = id3;
        g.block(3, 3, 3, 3) = -id3;
    }
    return g;
}

}  // namespace

MatrixC piMatrix(const FourMomentum& q, double spin, SpinBasis basis) {
    requireMassive(q, "piMatrix");
    const double theta = rapidityOf(q);
    if (spin == 0.5) return q.mass() * expPauliHalf(2.0 * theta, q.nHat());
    if (spin == 1.0)
        return q.mass() * q.mass() * expSpin1(2.0 * theta, q.nHat(), basis);
    throw std::invalid_argument("piMatrix: spin must be 1/2 or 1");
}

MatrixC piBarMatrix(const FourMomentum& q, double spin, SpinBasis basis) {
    requireMassive(q, "piBarMatrix");
    const double theta = rapidityOf(q);
    if (spin == 0.5) return q.mass() * expPauliHalf(-2.0 * theta, q.nHat());
    if (spin == 1.0)
        return q.mass() * q.mass() * expSpin1(-2.0 * theta, q.nHat(), basis);
    throw std::invalid_argument("piBarMatrix: spin must be 1/2 or 1");
}

MatrixC bivectorBasisChange() {
    MatrixC w = MatrixC::Zero(6, 6);
    const double r = 1.0 / std::sqrt(2.0);
    const MatrixC id3 = MatrixC::Identity(3, 3);
    w.block(0, 0, 3, 3) = r * id3;
    w.block(0, 3, 3, 3) = r * id3;
    w.block(3, 0, 3, 3) = r * id3;
    w.block(3, 3, 3, 3) = -r * id3;
    return w;
}

MatrixC wthOperator(const EuclideanMomentum& q, double A, double B, double m,
                    BivectorRep rep, SpinBasis basis) {
    std::array<Complex, 5> pc{0.0, q.p.x(), q.p.y(), q.p.z(), q.p4()};
    MatrixC op = MatrixC::Zero(6, 6);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) op += pc[a] * pc[b] * bmwGamma(a, b, basis);
    op += (A * q.dot() + B * m * m) * MatrixC::Identity(6, 6);
    if (rep == BivectorRep::standard) {
        const MatrixC w = bivectorBasisChange();
        op = (w * op * w).eval();
    }
    return op;
}

Bivector u1Spinor(const FourMomentum& p, int sigma) {
    requireMassive(p, "u1Spinor");
    const double m = p.mass();
    const double pz = p.pz();
    const Complex pp = p.pR();   // px + i py
    const Complex pm = p.pL();
    const double d = p.p0PlusM();   // the columns continue to the lower sheet
    const double r2 = std::sqrt(2.0);
    VectorC c(6);
    switch (sigma) {
        case +1:
            c << m + (2.0 * pz * pz + pp * pm) / (2.0 * d),
                 pz * pp / (r2 * d),
                 pp * pp / (2.0 * d),
                 pz,
                 pp / r2,
                 0.0;
            break;
        case 0:
            c << pz * pm / (r2 * d),
                 m + pp * pm / d,
                 -pz * pp / (r2 * d),
                 pm / r2,
                 0.0,
                 pp / r2;
            break;
        case -1:
            c << pm * pm / (2.0 * d),
                 -pz * pm / (r2 * d),
                 m + (2.0 * pz * pz + pp * pm) / (2.0 * d),
                 0.0,
                 pm / r2,
                 -pz;
            break;
        default:
            throw std::invalid_argument("u1Spinor: sigma must be +1, 0 or -1");
    }
    return {c, BivectorRep::standard, p, 'u', sigma};
}

Bivector v1Spinor(const FourMomentum& p, int sigma) {
    Bivector u = u1Spinor(p, sigma);
    u.components = (gamma5Bivector(BivectorRep::standard) * u.components).eval();
    u.kind = 'v';
    return u;
}

Bivector u1ViaBoost(const FourMomentum& p, int sigma, BivectorRep rep) {
    requireMassive(p, "u1ViaBoost");
    const double theta = rapidityOf(p);
    VectorC rest = VectorC::Zero(3);
    rest[1 - sigma] = p.mass() / std::sqrt(2.0);
    VectorC c(6);
    c.segment(0, 3) = expSpin1(+theta, p.nHat(), SpinBasis::spherical) * rest;
    c.segment(3, 3) = expSpin1(-theta, p.nHat(), SpinBasis::spherical) * rest;
    Bivector out{c, BivectorRep::weinberg, p, 'u', sigma};
    return rep == BivectorRep::weinberg ? out : toRep(out, rep);
}

Bivector toRep(const Bivector& b, BivectorRep rep) {
    if (b.rep == rep) return b;
    Bivector out = b;
    out.components = (bivectorBasisChange() * b.components).eval();   // involution
    out.rep = rep;
    return out;
}

double CoupledResidual::maxAbs() const {
    return std::max(first.cwiseAbs().maxCoeff(), second.cwiseAbs().maxCoeff());
}

CoupledResidual coupledResidual(const FourMomentum& p, const Bivector& psi) {
    const Bivector chi = toRep(psi, BivectorRep::weinberg);
    const double m2 = p.mass() * p.mass();
    const VectorC phi = chi.components.segment(0, 3);
    const VectorC xi = chi.components.segment(3, 3);
    CoupledResidual r;
    r.first = piBarMatrix(p, 1.0) * phi - m2 * xi;
    r.second = piMatrix(p, 1.0) * xi - m2 * phi;
    return r;
}

DispersionResult dispersionSpectrum(double A, double B, const Vec3& pvec, double m,
                                    double classifyTol) {
    DispersionResult out;
    const double p2 = pvec.squaredNorm();
    if (classifyTol <= 0.0) classifyTol = 1e-8 * m * m;

    // scale nodes past the largest expected |E|
    double branch = 1.0;
    for (double den : {A + 1.0, A - 1.0})
        if (std::abs(den) > 1e-9) branch = std::max(branch, std::abs(B / den));
    double scale = 2.0 * std::sqrt(p2 + branch * m * m);

    const auto det = [&](Complex e) {
        const EuclideanMomentum q{pvec, 0.0};
        std::array<Complex, 5> pc{0.0, q.p.x(), q.p.y(), q.p.z(), I * e};
        MatrixC op = MatrixC::Zero(6, 6);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) op += pc[a] * pc[b] * bmwGamma(a, b, SpinBasis::spherical);
        op += (A * (p2 - e * e) + B * m * m) * MatrixC::Identity(6, 6);
        return op.determinant();
    };

    for (int attempt = 0; attempt < 3; ++attempt) {
        out.detPoly = PolynomialC::interpolate(det, 13, scale);
        // fit quality probe at off-node points
        double worst = 0.0, magnitude = 0.0;
        for (double x : {-0.83, -0.31, 0.47, 0.92}) {
            const Complex e{x * scale, 0.0};
            const Complex exact = det(e);
            worst = std::max(worst, std::abs(out.detPoly.eval(e) - exact));
            magnitude = std::max(magnitude, std::abs(exact));
        }
        if (worst <= 1e-8 * std::max(magnitude, 1e-300)) break;
        scale *= 2.0;   // re-sample with scaled nodes
    }

    const PolynomialC trimmed = out.detPoly.trimmed(1e-9);
    out.degree = trimmed.degree();
    std::vector<ClusteredRoot> clusters = clusterRoots(trimmed.roots(), 2e-4);

    // whether E = 0 solves the dispersion is decided by the exact determinant
    // value, not by root scatter: a high-multiplicity zero root scatters far
    // beyond any clustering tolerance
    double detScale = 0.0;
    for (double x : {0.31, 0.77, 1.0})
        detScale = std::max(detScale, std::abs(det(Complex(x * scale, 0.0))));
    const bool zeroRoot = std::abs(det(Complex(0.0))) <= 1e-10 * detScale;
    if (zeroRoot) {
        std::vector<ClusteredRoot> merged;
        ClusteredRoot zero{Complex(0.0), 0};
        for (const auto& c : clusters) {
            if (std::abs(c.value) <= 0.05 * scale)
                zero.multiplicity += c.multiplicity;
            else
                merged.push_back(c);
        }
        if (zero.multiplicity > 0) merged.push_back(zero);
        clusters = std::move(merged);
    }
    out.roots = clusters;

    out.allRelativistic = true;
    for (const auto& root : out.roots) {
        const Complex e = root.value;
        const double offShell = std::abs(e * e - Complex(p2 + m * m, 0.0));
        std::string cls;
        if (zeroRoot && e == Complex(0.0) && p2 > 0.0) {
            cls = "acausal-E0";
            out.anyAcausalZero = true;
            out.allRelativistic = false;
        } else if (offShell <= classifyTol) {
            cls = "relativistic";
        } else {
            cls = "other";
            out.allRelativistic = false;
        }
        out.classification.push_back(cls);
    }
    return out;
}

THParams tuckerHammerParams(const FourMomentum& probe) {
    // candidates from the two sign readings of each term
    const EuclideanMomentum q = EuclideanMomentum::onShell(probe);
    THParams best{0, 0, std::numeric_limits<double>::infinity()};
    for (double A : {+1.0, -1.0})
        for (double B : {+2.0, -2.0}) {
            const MatrixC op =
                wthOperator(q, A, B, probe.mass(), BivectorRep::standard);
            double worst = 0.0;
            for (int s : {+1, 0, -1})
                worst = std::max(worst, (op * u1Spinor(probe, s).components).norm());
            if (worst < best.residual) best = {A, B, worst};
        }
    return best;
}

std::optional<int> bosonParity(const BivectorFamily& family, const FourMomentum& p,
                               double tol) {
    MatrixC g44 = MatrixC::Zero(6, 6);
    g44.block(0, 0, 3, 3) = MatrixC::Identity(3, 3);
    g44.block(3, 3, 3, 3) = -MatrixC::Identity(3, 3);
    const VectorC value = family(p);
    const VectorC image = g44 * family(p.reversed3());
    const double scale = std::max(1.0, value.norm());
    if ((image - value).norm() <= tol * scale) return +1;
    if ((image + value).norm() <= tol * scale) return -1;
    return std::nullopt;
}

std::optional<int> bosonParity(const Bivector& psi, double tol) {
    const char kind = psi.kind;
    const int sigma = psi.sigma;
    const BivectorFamily family = [kind, sigma](const FourMomentum& q) {
        const Bivector b = kind == 'u' ? u1Spinor(q, sigma) : v1Spinor(q, sigma);
        return b.components;
    };
    return bosonParity(family, psi.p, tol);
}

}  // namespace spinorlab

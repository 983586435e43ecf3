#pragma once

// Mode-expansion machinery: theta-function frequency splitting, the Dirac
// cross-Gram vbar_mu(k) u_lambda(-k) linking b-dagger to a(-k), polarization
// tetrads for the vector field with the printed contraction matrices, and
// the spin-1 reflection [1 - 2(S.n)^2].
//
// "-k" means the reversed four-momentum: the closed spinor forms are
// continued to the negative-energy sheet (sqrt((p0+m)/2m) turns imaginary).
// With that convention the cross-Gram is -i m (sigma.n); reversing the
// 3-momentum only leaves |k| (sigma.n), which is reported for comparison.

#include "spinorlab/algebra.hpp"
#include "spinorlab/report.hpp"

#include <optional>
#include <vector>

namespace spinorlab {

struct ModeSample {
    FourMomentum k;      // either energy sign
    Complex amplitude;
};

struct FrequencySplit {
    std::vector<ModeSample> positive;
    std::vector<ModeSample> negative;     // re-indexed to +E, momentum reflected
    std::vector<ModeSample> quarantined;  // k0 = 0: outside the theta-split domain
    std::string diagnostic;
};
FrequencySplit frequencySplit(const std::vector<ModeSample>& samples);

enum class ReflectConvention { fourMomentum, threeMomentum };

// Lambda_{mu lambda}(k) = vbar_mu(k) u_lambda(-k), spinors normalized to
// ubar u = m delta
MatrixC diracCrossGram(const FourMomentum& k,
                       ReflectConvention conv = ReflectConvention::fourMomentum);
VerificationReport diracCrossGramReport(const FourMomentum& k, double tol = kDefaultTol);

enum class TetradFrame { helicity, canonical };
// labels in printed row order
enum class PolLabel { t00 = 0, p11 = 1, m11 = 2, z10 = 3 };

struct PolarizationVector {
    Eigen::Vector4cd eps;   // index 0 timelike
    FourMomentum k;
    PolLabel label;
};

// rest tetrad boosted along k: helicity frame aligns the spin triad with
// k-hat, canonical keeps the z-aligned spherical triad
std::array<PolarizationVector, 4> polarizationTetrad(
    const FourMomentum& k, TetradFrame frame = TetradFrame::helicity);

// Minkowski contraction a . eta . b (no conjugation)
Complex minkowskiDot(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b);

// contraction matrices of the two vector-field expansions, plus the
// elementwise comparison against the printed tables (agreement reported,
// not assumed; typos in the printed tables are expected findings)
struct VectorModeMatrices {
    MatrixC bMatrix;   // b+_sigma(k) = sum_lambda B[sigma][lambda] a_lambda(-k)
    MatrixC aMatrix;   // a_sigma(k) = sum_lambda A[sigma][lambda] a_lambda(-k)
    TetradFrame frame;
    ReflectConvention reflect;
};
VectorModeMatrices vectorModeMatrices(const FourMomentum& k, TetradFrame frame,
                                      ReflectConvention reflect);

MatrixC printedBMatrix(const FourMomentum& k);
MatrixC printedAMatrix(const FourMomentum& k);

// comparison over both frames and both reflection conventions
VerificationReport vectorMatrixReport(const FourMomentum& k);

// R = 1 - 2 (S.n)^2 (spherical components) and the bivector cross-Gram
// ubar_sigma(k) u_lambda(-k), which comes out m^2 R
struct Spin1Reflection {
    MatrixC reflection;
    MatrixC crossGram;
    Complex proportionality;   // fitted crossGram / reflection
    double deviation;
};
Spin1Reflection spin1Reflection(const FourMomentum& k);

}  // namespace spinorlab

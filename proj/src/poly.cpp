#include "spinorlab/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace spinorlab {

PolynomialC::PolynomialC(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

PolynomialC PolynomialC::interpolate(const std::function<Complex(Complex)>& f,
                                     int nodes, double scale) {
    if (nodes < 1) throw std::invalid_argument("interpolate: need at least one node");
    if (scale <= 0.0) throw std::invalid_argument("interpolate: scale must be positive");
    Eigen::VectorXd x(nodes);
    for (int k = 0; k < nodes; ++k)
        x[k] = scale * std::cos(M_PI * (2.0 * k + 1.0) / (2.0 * nodes));
    MatrixC vand(nodes, nodes);
    VectorC rhs(nodes);
    for (int r = 0; r < nodes; ++r) {
        Complex pw = 1.0;
        for (int c = 0; c < nodes; ++c) {
            vand(r, c) = pw;
            pw *= x[r];
        }
        rhs[r] = f(Complex(x[r], 0.0));
    }
    VectorC sol = vand.colPivHouseholderQr().solve(rhs);
    std::vector<Complex> coeffs(sol.data(), sol.data() + nodes);
    return PolynomialC(std::move(coeffs));
}

int PolynomialC::degree() const {
    const PolynomialC t = trimmed();
    return static_cast<int>(t.c_.size()) - 1;
}

Complex PolynomialC::leadingCoeff() const {
    const PolynomialC t = trimmed();
    return t.c_.empty() ? Complex(0) : t.c_.back();
}

Complex PolynomialC::eval(Complex x) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolynomialC PolynomialC::trimmed(double relTol) const {
    double top = 0.0;
    for (const auto& v : c_) top = std::max(top, std::abs(v));
    std::vector<Complex> out = c_;
    while (!out.empty() && std::abs(out.back()) <= relTol * top) out.pop_back();
    return PolynomialC(std::move(out));
}

std::vector<Complex> PolynomialC::roots() const {
    const PolynomialC t = trimmed();
    const int n = static_cast<int>(t.c_.size()) - 1;
    if (n < 1) return {};
    MatrixC comp = MatrixC::Zero(n, n);
    const Complex lead = t.c_.back();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -t.c_[i] / lead;
    Eigen::ComplexEigenSolver<MatrixC> es(comp, false);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + n};
}

std::vector<ClusteredRoot> clusterRoots(const std::vector<Complex>& roots, double tol) {
    std::vector<ClusteredRoot> out;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            const double scale = std::max(1.0, std::abs(roots[i]));
            if (std::abs(roots[j] - roots[i]) <= tol * scale) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        out.push_back({sum / static_cast<double>(count), count});
    }
    std::sort(out.begin(), out.end(), [](const ClusteredRoot& a, const ClusteredRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace spinorlab

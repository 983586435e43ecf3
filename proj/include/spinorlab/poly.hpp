#pragma once

// Univariate complex polynomials up to degree 12: interpolation through
// sampled determinant values, companion-matrix roots, and clustering of
// near-coincident roots into (value, multiplicity) pairs.  Multiple roots
// scatter under rounding; the cluster centroid restores them to first
// order, which is what the dispersion checks rely on.

#include "spinorlab/algebra.hpp"

#include <functional>
#include <vector>

namespace spinorlab {

class PolynomialC {
public:
    PolynomialC() = default;
    explicit PolynomialC(std::vector<Complex> coeffs);  // coeffs[k] * x^k

    // Fit the unique polynomial of degree <= nodes-1 through f at Chebyshev
    // nodes scaled to [-scale, scale].
    static PolynomialC interpolate(const std::function<Complex(Complex)>& f,
                                   int nodes, double scale);

    const std::vector<Complex>& coeffs() const { return c_; }
    int degree() const;                         // after trimming
    Complex leadingCoeff() const;
    Complex eval(Complex x) const;

    // Trim coefficients below relTol * max|coeff|.
    PolynomialC trimmed(double relTol = 1e-9) const;

    std::vector<Complex> roots() const;         // companion-matrix eigenvalues

private:
    std::vector<Complex> c_;
};

struct ClusteredRoot {
    Complex value;      // cluster centroid
    int multiplicity;
};

// Group roots whose mutual distance is below tol * max(1, |root|).
std::vector<ClusteredRoot> clusterRoots(const std::vector<Complex>& roots, double tol);

}  // namespace spinorlab

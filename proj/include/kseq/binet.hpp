#pragma once

// Numeric Binet evaluation through the roots of the core polynomial
// P(x) = x^k - t_1 x^{k-1} - ... - t_k.

#include <complex>
#include <string>
#include <vector>

namespace kseq {

struct RootSet {
    int k = 0;
    std::vector<double> tvals;
    std::vector<std::complex<double>> roots;
    // Minimum pairwise root distance.
    double separation = 0.0;
    // max_j |P(root_j)| / sum_m |c_m| |root_j|^m
    double residual = 0.0;
};

// Eigenvalues of the balanced numeric companion matrix, Newton-polished.
// Throws Error("degenerate") when t_k == 0 and Error("roots") on failure.
RootSet core_roots(int k, const std::vector<double>& tvals);

// Largest-modulus root (real part).
double dominant_root(const RootSet& roots);

// Ratio of the two Vandermonde-type determinants whose last rows are
// lambda^{m+k-2} and lambda^{k-1}; equals F_{k,m-1}(t).
double vandermonde_ratio(const RootSet& roots, long m);

// Binet evaluation of F_{k,n}(t). Throws Error("degenerate-spectrum") when two
// roots are closer than 1e-7 * max(1, max |root|), or when |P'| at a root is
// below 1e-7 of its term scale (clusters of three or more roots).
double binet_value(int k, long n, const std::vector<double>& tvals);

struct BinetRow {
    long n;
    double exact;
    double approx;
    double relerr;
};

struct BinetReport {
    int k = 0;
    std::vector<double> tvals;
    std::vector<BinetRow> per_n;
    double tolerance = 0.0;
    bool pass = false;
};

// Compares binet_value against exact rational evaluation of F_{k,n} for
// n = 0..n_max; relative error |approx - exact| / max(1, |exact|).
BinetReport binet_check(int k, const std::vector<double>& tvals, long n_max, double tol = 1e-8);

} // namespace kseq

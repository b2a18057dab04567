#include "kseq/binet.hpp"

#include "kseq/error.hpp"
#include "kseq/seqgen.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace kseq {

namespace {

using Complex = std::complex<double>;

constexpr double kSeparationFactor = 1e-7;
constexpr double kResidualLimit = 1e-9;
constexpr int kLaplaceMaxOrder = 6;

// Parlett-Reinsch balancing by powers of two.
void balance(Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    constexpr double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                col += std::abs(a(j, i));
                row += std::abs(a(i, j));
            }
            if (col == 0.0 || row == 0.0) continue;
            double g = row / radix;
            double f = 1.0;
            const double s = col + row;
            while (col < g) {
                f *= radix;
                col *= radix * radix;
            }
            g = row * radix;
            while (col > g) {
                f /= radix;
                col /= radix * radix;
            }
            if ((col + row) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

// Coefficients c_0..c_k of P, lowest degree first.
std::vector<double> core_coefficients(int k, const std::vector<double>& t) {
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    c[static_cast<std::size_t>(k)] = 1.0;
    for (int j = 1; j <= k; ++j) c[static_cast<std::size_t>(k - j)] = -t[static_cast<std::size_t>(j - 1)];
    return c;
}

Complex int_pow(Complex x, long e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1L) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

Complex horner(const std::vector<double>& c, Complex x) {
    Complex v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

Complex horner_derivative(const std::vector<double>& c, Complex x) {
    Complex v = 0.0;
    for (std::size_t m = c.size() - 1; m >= 1; --m) v = v * x + static_cast<double>(m) * c[m];
    return v;
}

double residual_of(const std::vector<double>& c, Complex x) {
    double scale = 0.0;
    const double r = std::abs(x);
    for (std::size_t m = 0; m < c.size(); ++m) scale += std::abs(c[m]) * std::pow(r, static_cast<double>(m));
    return std::abs(horner(c, x)) / std::max(scale, 1e-300);
}

Complex laplace_det(const std::vector<std::vector<Complex>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Complex sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Complex>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) minor[r - 1].push_back(a[r][j]);
            }
        }
        const Complex term = a[0][c] * laplace_det(minor);
        sum += (c % 2 == 0) ? term : -term;
    }
    return sum;
}

// |P'(x)| relative to the size of its terms.
double derivative_scale(const std::vector<double>& c, Complex x) {
    double scale = 0.0;
    const double r = std::abs(x);
    for (std::size_t m = 1; m < c.size(); ++m) scale += static_cast<double>(m) * std::abs(c[m]) * std::pow(r, static_cast<double>(m - 1));
    return std::abs(horner_derivative(c, x)) / std::max(scale, 1e-300);
}

void check_spectrum(const RootSet& rs) {
    double largest = 0.0;
    for (const auto& r : rs.roots) largest = std::max(largest, std::abs(r));
    if (rs.separation < kSeparationFactor * std::max(1.0, largest)) {
        throw Error("degenerate-spectrum", "core polynomial has (nearly) repeated roots");
    }
    // A root of multiplicity m comes back split by about eps^(1/m), so triple
    // roots slip past the distance test; P' still nearly vanishes there.
    const auto coeffs = core_coefficients(rs.k, rs.tvals);
    for (const auto& r : rs.roots) {
        if (derivative_scale(coeffs, r) < kSeparationFactor) {
            throw Error("degenerate-spectrum", "core polynomial has a root cluster");
        }
    }
}

} // namespace

RootSet core_roots(int k, const std::vector<double>& tvals) {
    if (k < 2) throw Error("order", "order k must be at least 2");
    if (tvals.size() != static_cast<std::size_t>(k)) throw Error("arity", "expected k parameter values");
    for (double v : tvals) {
        if (!std::isfinite(v)) throw Error("range", "parameters must be finite");
    }
    if (tvals.back() == 0.0) throw Error("degenerate", "t_k = 0 makes zero a root");

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    for (int r = 0; r + 1 < k; ++r) a(r, r + 1) = 1.0;
    for (int c = 0; c < k; ++c) a(k - 1, c) = tvals[static_cast<std::size_t>(k - 1 - c)];
    balance(a);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    if (solver.info() != Eigen::Success) throw Error("roots", "eigenvalue iteration did not converge");

    const auto coeffs = core_coefficients(k, tvals);
    RootSet rs;
    rs.k = k;
    rs.tvals = tvals;
    for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) {
        Complex x = solver.eigenvalues()[j];
        for (int step = 0; step < 3; ++step) {
            const Complex d = horner_derivative(coeffs, x);
            if (d == Complex(0.0)) break;
            const Complex y = x - horner(coeffs, x) / d;
            if (residual_of(coeffs, y) >= residual_of(coeffs, x)) break;
            x = y;
        }
        rs.roots.push_back(x);
        rs.residual = std::max(rs.residual, residual_of(coeffs, x));
    }
    if (rs.residual > kResidualLimit) throw Error("roots", "root residual too large");

    rs.separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
            rs.separation = std::min(rs.separation, std::abs(rs.roots[i] - rs.roots[j]));
        }
    }
    return rs;
}

double dominant_root(const RootSet& roots) {
    const auto it = std::max_element(roots.roots.begin(), roots.roots.end(),
                                     [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    return it->real();
}

double vandermonde_ratio(const RootSet& rs, long m) {
    check_spectrum(rs);
    const int k = rs.k;
    const long top = m + k - 2;
    if (top < 0) throw Error("range", "last-row exponent must be nonnegative");
    Complex value;
    if (k > kLaplaceMaxOrder) {
        // Partial fractions: sum_j lambda_j^{m+k-2} / P'(lambda_j).
        const auto coeffs = core_coefficients(k, rs.tvals);
        for (const auto& r : rs.roots) value += int_pow(r, top) / horner_derivative(coeffs, r);
    } else {
        const auto n = static_cast<std::size_t>(k);
        std::vector<std::vector<Complex>> vandermonde(n, std::vector<Complex>(n));
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t c = 0; c < n; ++c) vandermonde[row][c] = int_pow(rs.roots[c], static_cast<long>(row));
        }
        auto shifted = vandermonde;
        for (std::size_t c = 0; c < n; ++c) shifted[n - 1][c] = int_pow(rs.roots[c], top);
        value = laplace_det(shifted) / laplace_det(vandermonde);
    }
    if (std::abs(value.imag()) > 1e-6 * std::max(1.0, std::abs(value.real()))) {
        throw Error("roots", "Binet ratio kept an imaginary part");
    }
    return value.real();
}

double binet_value(int k, long n, const std::vector<double>& tvals) {
    if (n < 0) return 0.0;
    return vandermonde_ratio(core_roots(k, tvals), n + 1);
}

BinetReport binet_check(int k, const std::vector<double>& tvals, long n_max, double tol) {
    const RootSet rs = core_roots(k, tvals);
    std::vector<Rational> point;
    for (double v : tvals) point.emplace_back(v);
    BinetReport report;
    report.k = k;
    report.tvals = tvals;
    report.tolerance = tol;
    report.pass = true;
    for (long n = 0; n <= n_max; ++n) {
        const double exact = fib_poly(k, n).eval(std::span<const Rational>(point)).get_d();
        const double approx = vandermonde_ratio(rs, n + 1);
        const double relerr = std::abs(approx - exact) / std::max(1.0, std::abs(exact));
        report.per_n.push_back({n, exact, approx, relerr});
        if (!(relerr <= tol)) report.pass = false;
    }
    return report;
}

} // namespace kseq

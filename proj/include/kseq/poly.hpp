#pragma once

// Exact sparse multivariate polynomials in t_1..t_k over the integers, and the
// t_k-denominator extension ScaledPoly = num / t_k^d.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kseq {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector (e_1, ..., e_k); index 0 holds the exponent of t_1.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order with t_1 > t_2 > ... > t_k, largest first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
public:
    using TermMap = std::map<Exponents, Integer, GrlexGreater>;

    // The zero polynomial in `arity` variables.
    explicit Poly(std::size_t arity);

    static Poly constant(std::size_t arity, const Integer& c);
    // t_j^power, j is 1-based.
    static Poly variable(std::size_t arity, std::size_t j, std::uint32_t power = 1);
    static Poly monomial(std::size_t arity, Exponents e, const Integer& c);

    std::size_t arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Coefficient of the given monomial (zero when absent).
    Integer coefficient(const Exponents& e) const;
    bool is_constant() const;
    std::uint32_t total_degree() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Integer& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
    friend Poly operator*(const Integer& c, Poly a) { return a *= c; }
    friend Poly operator+(Poly a, const Integer& c) { return a += constant(a.arity(), c); }
    friend Poly operator-(Poly a, const Integer& c) { return a -= constant(a.arity(), c); }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b);

    // Partial derivative with respect to t_j (1-based).
    Poly derivative(std::size_t j) const;
    // Sum_j t_j * dp/dt_j.
    Poly euler_operator() const;
    // Replace t_j by an integer value.
    Poly substitute(std::size_t j, const Integer& value) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    // Smallest exponent of t_j over all terms (0 for the zero polynomial).
    std::uint32_t min_exponent(std::size_t j) const;
    Poly multiply_by_var(std::size_t j, std::uint32_t power) const;
    // Requires power <= min_exponent(j).
    Poly divide_by_var(std::size_t j, std::uint32_t power) const;

    // Exact division; throws Error("inexact") if divisor does not divide *this.
    Poly divide_exact(const Poly& divisor) const;

    // Canonical text, e.g. "t2^3 + 3*t2*t3 - 1".
    std::string to_string() const;

private:
    void check_arity(const Poly& other) const;
    void add_term(const Exponents& e, const Integer& c);

    std::size_t arity_;
    TermMap terms_;
};

// num / t_k^d with d minimal.
class ScaledPoly {
public:
    explicit ScaledPoly(std::size_t arity) : num_(arity), d_(0) {}
    ScaledPoly(Poly num, std::uint32_t d = 0);

    const Poly& numerator() const noexcept { return num_; }
    std::uint32_t denom_exp() const noexcept { return d_; }
    std::size_t arity() const noexcept { return num_.arity(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_poly() const noexcept { return d_ == 0; }

    // Throws Error("pole") when a denominator remains.
    const Poly& as_poly() const;

    // Numerator when written over t_k^d (requires d >= denom_exp()).
    Poly numerator_over(std::uint32_t d) const;

    ScaledPoly& operator+=(const ScaledPoly& other);
    ScaledPoly& operator-=(const ScaledPoly& other);
    ScaledPoly& operator*=(const ScaledPoly& other);
    ScaledPoly& operator*=(const Integer& c);

    friend ScaledPoly operator+(ScaledPoly a, const ScaledPoly& b) { return a += b; }
    friend ScaledPoly operator-(ScaledPoly a, const ScaledPoly& b) { return a -= b; }
    friend ScaledPoly operator*(ScaledPoly a, const ScaledPoly& b) { return a *= b; }
    friend ScaledPoly operator*(ScaledPoly a, const Integer& c) { return a *= c; }
    ScaledPoly operator-() const { return ScaledPoly(-num_, d_); }

    friend bool operator==(const ScaledPoly& a, const ScaledPoly& b);

    // Multiplicative inverse of a unit of the form +-t_k^c / t_k^d;
    // throws Error("inverse") for anything else.
    ScaledPoly inverse_unit() const;

    // Throws Error("pole") if d > 0 and t_k is zero at the point.
    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    // Per-term reduced rendering, e.g. "-t2^3/t3^2 + 3".
    std::string to_string() const;

private:
    void normalize();

    Poly num_;
    std::uint32_t d_;
};

} // namespace kseq

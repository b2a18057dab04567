#pragma once

// Square matrices of ScaledPoly entries: companion/generator matrices, their
// integer powers, the Perrin base matrix and the sequence windows.
//
// All row/column indices in this interface are 1-based so that entry (r, i)
// of a window reads as "row r, sequence i".

#include "kseq/poly.hpp"

#include <cstddef>
#include <vector>

namespace kseq {

class PolyMatrix {
public:
    // Zero matrix of dimension `dim` whose entries have `arity` variables.
    PolyMatrix(std::size_t dim, std::size_t arity);

    static PolyMatrix identity(std::size_t dim, std::size_t arity);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t arity() const noexcept { return arity_; }

    const ScaledPoly& operator()(std::size_t r, std::size_t c) const;
    ScaledPoly& operator()(std::size_t r, std::size_t c);

    std::vector<ScaledPoly> row(std::size_t r) const;
    // Largest denominator exponent over all entries.
    std::uint32_t denom_exp() const;
    bool is_polynomial() const { return denom_exp() == 0; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    // Plain text grid, one row per line, cells separated by " | ".
    std::string to_string() const;

private:
    std::size_t dim_;
    std::size_t arity_;
    std::vector<ScaledPoly> entries_;
};

enum class CompanionVariant { full, vdl };

// Superdiagonal identity with bottom row (t_k, ..., t_1), or (t_k, ..., t_2, 0).
PolyMatrix companion(int k, CompanionVariant variant);
// Closed-form inverse of companion(k, variant).
PolyMatrix companion_inverse(int k, CompanionVariant variant);

PolyMatrix mat_inverse(const PolyMatrix& m);
PolyMatrix mat_power(const PolyMatrix& m, long n);

// Row vector times matrix.
std::vector<ScaledPoly> row_times(const std::vector<ScaledPoly>& row, const PolyMatrix& m);

// (d_1, ..., d_k) with d_j = -j t_{k-j} for j <= k-2, d_{k-1} = 0, d_k = k.
std::vector<Poly> derivative_row(int k);

// R_(k): row r is derivative_row(k) * V_(k)^{-(k-r)}.
PolyMatrix perrin_base(int k);
// V_(k)^n.
PolyMatrix vdl_window(int k, long n);
// R_(k) V_(k)^n.
PolyMatrix perrin_window(int k, long n);

ScaledPoly mat_trace(const PolyMatrix& m);
// Fraction-free Bareiss elimination over the common-denominator numerators.
ScaledPoly mat_det(const PolyMatrix& m);

// S_{(n-r, 1^r)}(t): S_{(m)} = F_{k,m} for r = 0, otherwise
// (-1)^r sum_{j=r+1}^{n} t_j S_{(n-j)} with t_j = 0 beyond k.
Poly hook_entry(int k, long n, int r);

} // namespace kseq

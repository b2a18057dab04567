#include "kseq/matrix.hpp"

#include "kseq/error.hpp"
#include "kseq/seqgen.hpp"

#include <algorithm>
#include <sstream>

namespace kseq {

namespace {

void check_order(int k, int minimum) {
    if (k < minimum) {
        throw Error("order", "order k = " + std::to_string(k) + " is below " + std::to_string(minimum));
    }
}

std::size_t to_size(int k) { return static_cast<std::size_t>(k); }

// Bareiss elimination on a square grid of polynomials (destroys the input).
Poly bareiss_det(std::vector<std::vector<Poly>> a, std::size_t arity) {
    const std::size_t n = a.size();
    bool negate = false;
    Poly previous = Poly::constant(arity, 1);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (a[p][p].is_zero()) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && a[swap_row][p].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(arity);
            std::swap(a[p], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                Poly cross = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                a[i][j] = cross.divide_exact(previous);
            }
        }
        previous = a[p][p];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), entries_(dim * dim, ScaledPoly(arity)) {
    if (dim == 0) throw Error("shape", "matrix dimension must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t dim, std::size_t arity) {
    PolyMatrix m(dim, arity);
    for (std::size_t r = 1; r <= dim; ++r) m(r, r) = Poly::constant(arity, 1);
    return m;
}

const ScaledPoly& PolyMatrix::operator()(std::size_t r, std::size_t c) const {
    if (r < 1 || r > dim_ || c < 1 || c > dim_) throw Error("index", "matrix index out of range");
    return entries_[(r - 1) * dim_ + (c - 1)];
}

ScaledPoly& PolyMatrix::operator()(std::size_t r, std::size_t c) {
    if (r < 1 || r > dim_ || c < 1 || c > dim_) throw Error("index", "matrix index out of range");
    return entries_[(r - 1) * dim_ + (c - 1)];
}

std::vector<ScaledPoly> PolyMatrix::row(std::size_t r) const {
    std::vector<ScaledPoly> out;
    out.reserve(dim_);
    for (std::size_t c = 1; c <= dim_; ++c) out.push_back((*this)(r, c));
    return out;
}

std::uint32_t PolyMatrix::denom_exp() const {
    std::uint32_t d = 0;
    for (const auto& e : entries_) d = std::max(d, e.denom_exp());
    return d;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw Error("shape", "matrix dimensions differ");
    if (a.arity_ != b.arity_) throw Error("arity", "matrix entry arities differ");
    PolyMatrix out(a.dim_, a.arity_);
    for (std::size_t r = 1; r <= a.dim_; ++r) {
        for (std::size_t c = 1; c <= a.dim_; ++c) {
            ScaledPoly sum(a.arity_);
            for (std::size_t j = 1; j <= a.dim_; ++j) {
                const auto& x = a(r, j);
                const auto& y = b(j, c);
                if (x.is_zero() || y.is_zero()) continue;
                sum += x * y;
            }
            out(r, c) = std::move(sum);
        }
    }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
    std::vector<std::string> cells;
    cells.reserve(entries_.size());
    std::vector<std::size_t> width(dim_, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        cells.push_back(entries_[i].to_string());
        width[i % dim_] = std::max(width[i % dim_], cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const auto& cell = cells[r * dim_ + c];
            if (c > 0) os << " | ";
            os << cell;
            if (c + 1 < dim_) os << std::string(width[c] - cell.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

PolyMatrix companion(int k, CompanionVariant variant) {
    check_order(k, variant == CompanionVariant::full ? 2 : 3);
    const auto n = to_size(k);
    PolyMatrix m(n, n);
    for (std::size_t r = 1; r < n; ++r) m(r, r + 1) = Poly::constant(n, 1);
    // bottom row (t_k, t_{k-1}, ..., t_1)
    for (std::size_t c = 1; c <= n; ++c) {
        const std::size_t var = n - c + 1;
        if (var == 1 && variant == CompanionVariant::vdl) continue;
        m(n, c) = Poly::variable(n, var);
    }
    return m;
}

PolyMatrix companion_inverse(int k, CompanionVariant variant) {
    check_order(k, variant == CompanionVariant::full ? 2 : 3);
    const auto n = to_size(k);
    PolyMatrix m(n, n);
    // Rows 2..k shift down; row 1 solves the recurrence backward.
    for (std::size_t r = 2; r <= n; ++r) m(r, r - 1) = Poly::constant(n, 1);
    for (std::size_t j = 1; j < n; ++j) {
        const std::size_t var = n - j;
        if (var == 1 && variant == CompanionVariant::vdl) continue;
        m(1, j) = ScaledPoly(-Poly::variable(n, var), 1);
    }
    m(1, n) = ScaledPoly(Poly::constant(n, 1), 1);
    return m;
}

PolyMatrix mat_inverse(const PolyMatrix& m) {
    const auto n = m.dim();
    ScaledPoly det_inverse = mat_det(m).inverse_unit();
    PolyMatrix out(n, m.arity());
    if (n == 1) {
        out(1, 1) = det_inverse;
        return out;
    }
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            PolyMatrix minor(n - 1, m.arity());
            for (std::size_t i = 1, mi = 1; i <= n; ++i) {
                if (i == r) continue;
                for (std::size_t j = 1, mj = 1; j <= n; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = m(i, j);
                }
                ++mi;
            }
            ScaledPoly cofactor = mat_det(minor);
            if ((r + c) % 2 == 1) cofactor = -cofactor;
            out(c, r) = cofactor * det_inverse; // adjugate is the transpose
        }
    }
    return out;
}

PolyMatrix mat_power(const PolyMatrix& m, long n) {
    PolyMatrix base = n < 0 ? mat_inverse(m) : m;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    PolyMatrix result = PolyMatrix::identity(m.dim(), m.arity());
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::vector<ScaledPoly> row_times(const std::vector<ScaledPoly>& row, const PolyMatrix& m) {
    if (row.size() != m.dim()) throw Error("shape", "row length differs from matrix dimension");
    std::vector<ScaledPoly> out;
    out.reserve(m.dim());
    for (std::size_t c = 1; c <= m.dim(); ++c) {
        ScaledPoly sum(m.arity());
        for (std::size_t j = 1; j <= m.dim(); ++j) {
            if (row[j - 1].is_zero() || m(j, c).is_zero()) continue;
            sum += row[j - 1] * m(j, c);
        }
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<Poly> derivative_row(int k) {
    check_order(k, 3);
    const auto n = to_size(k);
    std::vector<Poly> d;
    d.reserve(n);
    for (std::size_t j = 1; j + 2 <= n; ++j) {
        d.push_back(Poly::variable(n, n - j) * Integer(-static_cast<long>(j)));
    }
    d.emplace_back(n);
    d.push_back(Poly::constant(n, k));
    return d;
}

PolyMatrix perrin_base(int k) {
    check_order(k, 3);
    const auto n = to_size(k);
    const PolyMatrix back = companion_inverse(k, CompanionVariant::vdl);
    PolyMatrix out(n, n);
    std::vector<ScaledPoly> row;
    for (auto& p : derivative_row(k)) row.emplace_back(std::move(p));
    for (std::size_t r = n; r >= 1; --r) {
        for (std::size_t c = 1; c <= n; ++c) out(r, c) = row[c - 1];
        if (r > 1) row = row_times(row, back);
    }
    return out;
}

PolyMatrix vdl_window(int k, long n) {
    if (n >= 0) return mat_power(companion(k, CompanionVariant::vdl), n);
    return mat_power(companion_inverse(k, CompanionVariant::vdl), -n);
}

PolyMatrix perrin_window(int k, long n) {
    return perrin_base(k) * vdl_window(k, n);
}

ScaledPoly mat_trace(const PolyMatrix& m) {
    ScaledPoly sum(m.arity());
    for (std::size_t r = 1; r <= m.dim(); ++r) sum += m(r, r);
    return sum;
}

ScaledPoly mat_det(const PolyMatrix& m) {
    const auto n = m.dim();
    const auto d = m.denom_exp();
    std::vector<std::vector<Poly>> grid(n);
    for (std::size_t r = 0; r < n; ++r) {
        grid[r].reserve(n);
        for (std::size_t c = 0; c < n; ++c) grid[r].push_back(m(r + 1, c + 1).numerator_over(d));
    }
    return ScaledPoly(bareiss_det(std::move(grid), m.arity()), static_cast<std::uint32_t>(n) * d);
}

Poly hook_entry(int k, long n, int r) {
    check_order(k, 2);
    if (r < 0 || n < 0 || r > n || r > k - 1) {
        throw Error("shape", "hook (n-r, 1^r) needs 0 <= r <= min(n, k-1)");
    }
    if (r == 0) return fib_poly(k, n);
    const auto arity = to_size(k);
    Poly sum(arity);
    const long upper = std::min<long>(n, k);
    for (long j = r + 1; j <= upper; ++j) {
        sum += Poly::variable(arity, static_cast<std::size_t>(j)) * fib_poly(k, n - j);
    }
    return r % 2 == 0 ? sum : -sum;
}

} // namespace kseq

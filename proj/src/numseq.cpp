#include "kseq/numseq.hpp"

#include "kseq/error.hpp"
#include "kseq/matrix.hpp"
#include "kseq/seqgen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace kseq {

namespace {

void check_order(int k) {
    if (k < 3) throw Error("order", "order k = " + std::to_string(k) + " is below 3");
}

void check_args(int k, int i, long n) {
    check_order(k);
    if (i < 1 || i > k) throw Error("index", "sequence index i must lie in 1..k");
    if (n < 1 - k) throw Error("range", "index n = " + std::to_string(n) + " lies below 1-k");
}

std::vector<Integer> boundary(NumFamily family, int k, int i) {
    std::vector<Integer> window(static_cast<std::size_t>(k), 0);
    switch (family) {
    case NumFamily::gokv:
        window[static_cast<std::size_t>(k - 2)] = 1; // v_{-1}
        break;
    case NumFamily::kso_kv:
        // 1 where i - n = k, i.e. at n = i - k, offset i - 1
        window[static_cast<std::size_t>(i - 1)] = 1;
        break;
    case NumFamily::gokr:
        window[0] = k - 2;
        for (int s = 1; s + 1 < k; ++s) window[static_cast<std::size_t>(s)] = -1;
        window[static_cast<std::size_t>(k - 1)] = k;
        break;
    case NumFamily::kso_kr: {
        const IntMatrix base = perrin_base_ones(k);
        for (int s = 0; s < k; ++s) {
            window[static_cast<std::size_t>(s)] = base(static_cast<std::size_t>(s + 1), static_cast<std::size_t>(i));
        }
        break;
    }
    }
    return window;
}

struct TableCache {
    std::mutex mutex;
    std::map<std::tuple<NumFamily, int, int>, IntSeqTable> tables;
};

TableCache& cache() {
    static TableCache c;
    return c;
}

const Integer& cached_value(NumFamily family, int k, int i, long n) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    auto [it, inserted] = c.tables.try_emplace({family, k, i});
    IntSeqTable& table = it->second;
    if (inserted) table = IntSeqTable{family, k, i, 1 - k, boundary(family, k, i)};
    while (table.last() < n) {
        const auto size = table.values.size();
        Integer next = 0;
        // order-k recurrence x_n = x_{n-2} + ... + x_{n-k}
        for (int j = 2; j <= k; ++j) next += table.values[size - static_cast<std::size_t>(j)];
        table.values.push_back(std::move(next));
    }
    return table.at(n);
}

} // namespace

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {
    if (dim == 0) throw Error("shape", "matrix dimension must be positive");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t r = 1; r <= dim; ++r) m(r, r) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) throw Error("shape", "matrix dimensions differ");
    const auto n = a.dim_;
    IntMatrix out(n);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t j = 1; j <= n; ++j) {
            const Integer& x = a(r, j);
            if (x == 0) continue;
            for (std::size_t c = 1; c <= n; ++c) {
                mpz_addmul(out(r, c).get_mpz_t(), x.get_mpz_t(), b(j, c).get_mpz_t());
            }
        }
    }
    return out;
}

Integer IntMatrix::det() const {
    // Integer Bareiss; every division is exact.
    std::vector<Integer> a = entries_;
    const auto n = dim_;
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    Integer previous = 1;
    bool negate = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (at(p, p) == 0) {
            std::size_t s = p + 1;
            while (s < n && at(s, p) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(s, c));
            negate = !negate;
        }
        for (std::size_t r = p + 1; r < n; ++r) {
            for (std::size_t c = p + 1; c < n; ++c) {
                Integer cross = at(r, c) * at(p, p) - at(r, p) * at(p, c);
                mpz_divexact(at(r, c).get_mpz_t(), cross.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = at(p, p);
    }
    Integer d = at(n - 1, n - 1);
    return negate ? Integer(-d) : d;
}

std::string IntMatrix::to_string() const {
    std::vector<std::string> cells;
    std::vector<std::size_t> width(dim_, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        cells.push_back(entries_[i].get_str());
        width[i % dim_] = std::max(width[i % dim_], cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const auto& cell = cells[r * dim_ + c];
            if (c > 0) os << " | ";
            os << std::string(width[c] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::string_view num_family_name(NumFamily f) {
    switch (f) {
    case NumFamily::gokv: return "gokv";
    case NumFamily::kso_kv: return "kso_kv";
    case NumFamily::gokr: return "gokr";
    case NumFamily::kso_kr: return "kso_kr";
    }
    return "unknown";
}

const Integer& IntSeqTable::at(long n) const {
    if (n < first || n > last()) throw Error("range", "index outside the table");
    return values[static_cast<std::size_t>(n - first)];
}

IntSeqTable make_table(NumFamily family, int k, int i, long last) {
    const bool single = family == NumFamily::gokv || family == NumFamily::gokr;
    check_args(k, single ? 1 : i, last);
    const int index = single ? 0 : i;
    IntSeqTable table{family, k, index, 1 - k, {}};
    for (long n = 1 - k; n <= last; ++n) table.values.push_back(cached_value(family, k, index, n));
    return table;
}

Integer gokv(int k, long n) {
    check_args(k, 1, n);
    return cached_value(NumFamily::gokv, k, 0, n);
}

Integer kso_kv(int k, int i, long n) {
    check_args(k, i, n);
    return cached_value(NumFamily::kso_kv, k, i, n);
}

Integer gokr(int k, long n) {
    check_args(k, 1, n);
    return cached_value(NumFamily::gokr, k, 0, n);
}

Integer kso_kr(int k, int i, long n) {
    check_args(k, i, n);
    return cached_value(NumFamily::kso_kr, k, i, n);
}

Integer vdl_at_ones(int k, long n) {
    check_order(k);
    const std::vector<Rational> ones(static_cast<std::size_t>(k), 1);
    const Rational value = vdl_poly(k, n).eval(std::span<const Rational>(ones));
    return value.get_num();
}

IntMatrix a1_matrix(int k) {
    check_order(k);
    const auto n = static_cast<std::size_t>(k);
    IntMatrix m(n);
    for (std::size_t r = 1; r < n; ++r) m(r, r + 1) = 1;
    for (std::size_t c = 1; c < n; ++c) m(n, c) = 1;
    return m;
}

IntMatrix int_power(const IntMatrix& m, unsigned long n) {
    IntMatrix result = IntMatrix::identity(m.dim());
    IntMatrix base = m;
    while (n > 0) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

IntMatrix fast_window(int k, long n) {
    check_order(k);
    if (n < 0) throw Error("range", "fast_window needs n >= 0");
    return int_power(a1_matrix(k), static_cast<unsigned long>(n));
}

IntMatrix perrin_base_ones(int k) {
    static std::mutex mutex;
    static std::map<int, IntMatrix> memo;
    check_order(k);
    std::lock_guard lock(mutex);
    if (auto it = memo.find(k); it != memo.end()) return it->second;

    const auto n = static_cast<std::size_t>(k);
    const PolyMatrix base = perrin_base(k);
    const std::vector<Rational> ones(n, 1);
    IntMatrix out(n);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            const Rational v = base(r, c).eval(std::span<const Rational>(ones));
            if (v.get_den() != 1) throw Error("pole", "R_(k) at all-ones is not integral");
            out(r, c) = v.get_num();
        }
    }
    memo.emplace(k, out);
    return out;
}

Integer kso_kv_fast(int k, int i, long n) {
    check_args(k, i, n);
    if (n <= 0) return kso_kv(k, i, n);
    return fast_window(k, n)(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
}

Integer kso_kr_fast(int k, int i, long n) {
    check_args(k, i, n);
    if (n <= 0) return kso_kr(k, i, n);
    const IntMatrix window = perrin_base_ones(k) * fast_window(k, n);
    return window(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
}

Integer gokv_fast(int k, long n) {
    check_args(k, 1, n);
    // v_{k,n} = v^k_{k,n+1}
    return kso_kv_fast(k, k, n + 1);
}

Integer gokr_fast(int k, long n) { return kso_kr_fast(k, k, n); }

Integer classic(Classic name, long n) {
    if (n < 1) throw Error("range", "classical sequences start at n = 1");
    Integer a, b, c;
    switch (name) {
    case Classic::padovan: a = 1, b = 1, c = 1; break;
    case Classic::vanderlaan: a = 1, b = 0, c = 1; break;
    case Classic::perrin: a = 0, b = 2, c = 3; break;
    }
    if (n == 1) return a;
    if (n == 2) return b;
    for (long m = 4; m <= n; ++m) {
        Integer next = b + a; // x_m = x_{m-2} + x_{m-3}
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    return c;
}

} // namespace kseq

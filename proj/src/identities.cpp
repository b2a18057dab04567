#include "kseq/identities.hpp"

#include "kseq/error.hpp"
#include "kseq/matrix.hpp"
#include "kseq/numseq.hpp"
#include "kseq/seqgen.hpp"

#include <algorithm>
#include <chrono>

namespace kseq {

namespace {

std::size_t sz(long v) { return static_cast<std::size_t>(v); }

std::string render(const Poly& p) { return p.to_string(); }
std::string render(const ScaledPoly& p) { return p.to_string(); }
std::string render(const Integer& v) { return v.get_str(); }

std::string render(const PolyMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 1; r <= m.dim(); ++r) {
        if (r > 1) out += "; ";
        for (std::size_t c = 1; c <= m.dim(); ++c) {
            if (c > 1) out += ", ";
            out += m(r, c).to_string();
        }
    }
    return out + "]";
}

std::string render(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 1; r <= m.dim(); ++r) {
        if (r > 1) out += "; ";
        for (std::size_t c = 1; c <= m.dim(); ++c) {
            if (c > 1) out += ", ";
            out += m(r, c).get_str();
        }
    }
    return out + "]";
}

template <class T>
Sides compare(const T& lhs, const T& rhs, bool show) {
    Sides s;
    s.equal = lhs == rhs;
    if (show) {
        s.lhs = render(lhs);
        s.rhs = render(rhs);
    }
    return s;
}

Sides both(Sides a, const Sides& b) {
    a.equal = a.equal && b.equal;
    if (!a.lhs.empty() || !b.lhs.empty()) {
        a.lhs += " ; " + b.lhs;
        a.rhs += " ; " + b.rhs;
    }
    return a;
}

Poly var(int k, long j) { return Poly::variable(sz(k), sz(j)); }

// Window with entry (r, i) = V^i_{k, n-k+r}, assembled from the source.
PolyMatrix vdl_window_from(const SequenceSource& src, int k, long n) {
    PolyMatrix w(sz(k), sz(k));
    for (int r = 1; r <= k; ++r) {
        for (int i = 1; i <= k; ++i) w(sz(r), sz(i)) = src.vdl_kseq(k, i, n - k + r);
    }
    return w;
}

IntMatrix kso_kv_window_from(const SequenceSource& src, int k, long n) {
    IntMatrix w(sz(k));
    for (int r = 1; r <= k; ++r) {
        for (int i = 1; i <= k; ++i) w(sz(r), sz(i)) = src.kso_kv(k, i, n - k + r);
    }
    return w;
}

// (-1)^{n(k+1)} t_k^n, a ScaledPoly for negative n.
ScaledPoly determinant_law(int k, long n) {
    const bool odd = (n % 2 != 0) && ((k + 1) % 2 != 0);
    const Integer sign = odd ? -1 : 1;
    if (n >= 0) return ScaledPoly(Poly::variable(sz(k), sz(k), static_cast<std::uint32_t>(n)) * sign);
    return ScaledPoly(Poly::constant(sz(k), sign), static_cast<std::uint32_t>(-n));
}

bool always(const GridPoint&) { return true; }

std::vector<IdentityCase> build_registry() {
    std::vector<IdentityCase> reg;
    auto from = [](long lo) { return [lo](int) { return lo; }; };

    reg.push_back({"thm-1.1", CheckMode::symbolic,
                   "sum_j t_j dG_{k,n}/dt_j = n F_{k,n} = sum_{r=1}^{n} G_{k,r} F_{k,n-r}", 2, false, false,
                   from(0), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const Poly target = src.fibonacci(p.k, p.n) * Integer(p.n);
                       Poly convolution(sz(p.k));
                       // Summing only to r = k is wrong once n > k.
                       for (long r = 1; r <= p.n; ++r) convolution += src.lucas(p.k, r) * src.fibonacci(p.k, p.n - r);
                       return both(compare(src.lucas(p.k, p.n).euler_operator(), target, show),
                                   compare(target, convolution, show));
                   }});

    reg.push_back({"thm-1.3", CheckMode::symbolic, "det A_(k)^n = (-1)^{n(k+1)} t_k^n", 2, false, false,
                   from(-1000000), 1, always, [](const SequenceSource&, const GridPoint& p, bool show) {
                       const PolyMatrix power = mat_power(companion(p.k, CompanionVariant::full), p.n);
                       return compare(mat_det(power), determinant_law(p.k, p.n), show);
                   }});

    reg.push_back({"cor-2.5", CheckMode::symbolic, "det V~_n = (-1)^{n(k+1)} t_k^n", 3, false, false,
                   from(-1000000), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const PolyMatrix w = p.n >= 0 ? vdl_window_from(src, p.k, p.n) : vdl_window(p.k, p.n);
                       return compare(mat_det(w), determinant_law(p.k, p.n), show);
                   }});

    reg.push_back({"cor-2.8", CheckMode::symbolic, "tr(V_(k)^n) = R_{k,n}", 3, false, false,
                   [](int k) { return 1L - k; }, 1, always,
                   [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const ScaledPoly trace = mat_trace(vdl_window(p.k, p.n));
                       const ScaledPoly perrin =
                           p.n >= 0 ? ScaledPoly(src.perrin(p.k, p.n)) : src.perrin_kseq(p.k, p.k, p.n);
                       return compare(trace, perrin, show);
                   }});

    reg.push_back({"cor-2.9", CheckMode::symbolic,
                   "V^k_{k,n} = V^{k-1}_{k,n-1} and V^1_{k,n} = t_k V^k_{k,n-1}", 3, false, false, from(1), 1,
                   always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const int k = p.k;
                       return both(compare(src.vdl_kseq(k, k, p.n), src.vdl_kseq(k, k - 1, p.n - 1), show),
                                   compare(src.vdl_kseq(k, 1, p.n), var(k, k) * src.vdl_kseq(k, k, p.n - 1), show));
                   }});

    reg.push_back({"cor-2.10", CheckMode::symbolic,
                   "R^k_{k,n} = R^{k-1}_{k,n-1} and R^1_{k,n} = t_k R^k_{k,n-1}", 3, false, false, from(1), 1,
                   always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const int k = p.k;
                       return both(compare(src.perrin_kseq(k, k, p.n), src.perrin_kseq(k, k - 1, p.n - 1), show),
                                   compare(src.perrin_kseq(k, 1, p.n),
                                           ScaledPoly(var(k, k)) * src.perrin_kseq(k, k, p.n - 1), show));
                   }});

    reg.push_back({"cor-2.11", CheckMode::symbolic, "sum_j t_j dR^k_{k,n}/dt_j = n V^k_{k,n}", 3, false, false,
                   from(0), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const Poly lhs = src.perrin_kseq(p.k, p.k, p.n).as_poly().euler_operator();
                       return compare(lhs, src.vdl_kseq(p.k, p.k, p.n) * Integer(p.n), show);
                   }});

    reg.push_back({"thm-2.12", CheckMode::symbolic,
                   "R^i_{k,n} = -t_{k-1} V^i_{k,n-k+1} - ... - (k-2) t_2 V^i_{k,n-2} + k V^i_{k,n}", 3, true, false,
                   from(1), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const auto d = derivative_row(p.k);
                       Poly rhs(sz(p.k));
                       for (int j = 1; j <= p.k; ++j) {
                           if (d[sz(j - 1)].is_zero()) continue;
                           rhs += d[sz(j - 1)] * src.vdl_kseq(p.k, p.i, p.n - p.k + j);
                       }
                       return compare(src.perrin_kseq(p.k, p.i, p.n), ScaledPoly(rhs), show);
                   }});

    reg.push_back({"thm-2.14", CheckMode::symbolic, "V^i_{k,n+m} = sum_{j=1}^{k} V^j_{k,m} V^i_{k,n-k+j}", 3, true,
                   true, from(1), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Poly rhs(sz(p.k));
                       for (int j = 1; j <= p.k; ++j) {
                           rhs += src.vdl_kseq(p.k, j, p.m) * src.vdl_kseq(p.k, p.i, p.n - p.k + j);
                       }
                       return compare(src.vdl_kseq(p.k, p.i, p.n + p.m), rhs, show);
                   }});

    reg.push_back({"cor-2.15", CheckMode::symbolic, "(V~_n)^2 = V~_{2n}", 3, false, false, from(0), 1, always,
                   [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const PolyMatrix w = vdl_window_from(src, p.k, p.n);
                       return compare(w * w, vdl_window_from(src, p.k, 2 * p.n), show);
                   }});

    reg.push_back({"thm-2.16", CheckMode::symbolic,
                   "R^i_{k,n} = k t_k V^i_{k,n-k} + ... + 3 t_3 V^i_{k,n-3} + 2 t_2 V^i_{k,n-2}", 3, true, false,
                   from(1), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Poly rhs(sz(p.k));
                       for (int j = 2; j <= p.k; ++j) {
                           rhs += var(p.k, j) * Integer(j) * src.vdl_kseq(p.k, p.i, p.n - j);
                       }
                       return compare(src.perrin_kseq(p.k, p.i, p.n), ScaledPoly(rhs), show);
                   }});

    reg.push_back({"cor-3.4", CheckMode::numeric, "A_1^n = [v^i_{k,n-k+r}]", 3, false, false, from(0), 1, always,
                   [](const SequenceSource& src, const GridPoint& p, bool show) {
                       return compare(fast_window(p.k, p.n), kso_kv_window_from(src, p.k, p.n), show);
                   }});

    reg.push_back({"cor-3.6", CheckMode::numeric, "det V~_n = 1 (k odd), (-1)^n (k even)", 3, false, false, from(0),
                   1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const Integer expected = (p.k % 2 == 1 || p.n % 2 == 0) ? 1 : -1;
                       return compare(kso_kv_window_from(src, p.k, p.n).det(), expected, show);
                   }});

    reg.push_back({"cor-3.7", CheckMode::numeric, "v^i_{k,n+m} = sum_{j=1}^{k} v^j_{k,m} v^i_{k,n-k+j}", 3, true,
                   true, from(1), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Integer rhs = 0;
                       for (int j = 1; j <= p.k; ++j) {
                           rhs += src.kso_kv(p.k, j, p.m) * src.kso_kv(p.k, p.i, p.n - p.k + j);
                       }
                       return compare(src.kso_kv(p.k, p.i, p.n + p.m), rhs, show);
                   }});

    reg.push_back({"cor-3.8", CheckMode::numeric, "v^1_{k,n} = v^k_{k,n-1} = v^{k-1}_{k,n-2}", 3, false, false,
                   [](int k) { return 3L - k; }, 1, always,
                   [](const SequenceSource& src, const GridPoint& p, bool show) {
                       const int k = p.k;
                       return both(compare(src.kso_kv(k, 1, p.n), src.kso_kv(k, k, p.n - 1), show),
                                   compare(src.kso_kv(k, k, p.n - 1), src.kso_kv(k, k - 1, p.n - 2), show));
                   }});

    reg.push_back({"lem-3.9", CheckMode::numeric, "v^i_{k,n} = v^{i-1}_{k,n} + v^k_{k,n-i}  (1 < i < k, n > 1-k+i)",
                   3, true, false, [](int k) { return 4L - k; }, 1,
                   // False at i = k: k=3, n=3 gives 1 against 2.
                   [](const GridPoint& p) { return p.i >= 2 && p.i < p.k && p.n > 1 - p.k + p.i; },
                   [](const SequenceSource& src, const GridPoint& p, bool show) {
                       return compare(src.kso_kv(p.k, p.i, p.n),
                                      Integer(src.kso_kv(p.k, p.i - 1, p.n) + src.kso_kv(p.k, p.k, p.n - p.i)), show);
                   }});

    reg.push_back({"thm-3.10", CheckMode::numeric, "v^i_{k,n} = sum_{m=1}^{i} v^k_{k,n-m}  (i < k)", 3, true, false,
                   from(1), 1, [](const GridPoint& p) { return p.i < p.k; }, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Integer rhs = 0;
                       for (int m = 1; m <= p.i; ++m) rhs += src.kso_kv(p.k, p.k, p.n - m);
                       return compare(src.kso_kv(p.k, p.i, p.n), rhs, show);
                   }});

    reg.push_back({"cor-3.13", CheckMode::numeric, "r^i_{k,n} = k v^i_{k,n} - sum_{j=1}^{k-2} j v^i_{k,n-k+j}", 3,
                   true, false, from(0), 1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Integer rhs = src.kso_kv(p.k, p.i, p.n) * p.k;
                       for (int j = 1; j <= p.k - 2; ++j) rhs -= src.kso_kv(p.k, p.i, p.n - p.k + j) * j;
                       return compare(src.kso_kr(p.k, p.i, p.n), rhs, show);
                   }});

    reg.push_back({"cor-3.14", CheckMode::numeric, "r^i_{k,n} = sum_{j=2}^{k} j v^i_{k,n-j}", 3, true, false, from(1),
                   1, always, [](const SequenceSource& src, const GridPoint& p, bool show) {
                       Integer rhs = 0;
                       for (int j = 2; j <= p.k; ++j) rhs += src.kso_kv(p.k, p.i, p.n - j) * j;
                       return compare(src.kso_kr(p.k, p.i, p.n), rhs, show);
                   }});

    return reg;
}

void require_range(bool ok, const std::string& what) {
    if (!ok) throw Error("range", what);
}

} // namespace

Poly StandardSource::fibonacci(int k, long n) const { return default_generator().fibonacci(k, n); }
Poly StandardSource::lucas(int k, long n) const { return default_generator().lucas(k, n); }
Poly StandardSource::perrin(int k, long n) const { return default_generator().perrin(k, n); }
Poly StandardSource::vdl_kseq(int k, int i, long n) const { return default_generator().vanderlaan_kseq(k, i, n); }
ScaledPoly StandardSource::perrin_kseq(int k, int i, long n) const {
    return default_generator().perrin_kseq(k, i, n);
}
Integer StandardSource::kso_kv(int k, int i, long n) const { return kseq::kso_kv(k, i, n); }
Integer StandardSource::kso_kr(int k, int i, long n) const { return kseq::kso_kr(k, i, n); }

const SequenceSource& standard_source() {
    static const StandardSource source;
    return source;
}

std::string_view mode_name(CheckMode mode) { return mode == CheckMode::symbolic ? "symbolic" : "numeric"; }

const std::vector<IdentityCase>& identity_registry() {
    static const std::vector<IdentityCase> registry = build_registry();
    return registry;
}

const IdentityCase& find_identity(std::string_view id) {
    const auto& reg = identity_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [id](const IdentityCase& c) { return c.id == id; });
    if (it == reg.end()) throw Error("unknown-identity", "no identity registered as '" + std::string(id) + "'");
    return *it;
}

IdentityReport run_identity(std::string_view id, const Grid& grid, const SequenceSource& source) {
    const IdentityCase& identity = find_identity(id);
    const auto start = std::chrono::steady_clock::now();

    require_range(grid.k.lo <= grid.k.hi, "empty k range");
    require_range(grid.k.lo >= identity.min_k, identity.id + " needs k >= " + std::to_string(identity.min_k));
    long default_lo = identity.min_n(static_cast<int>(grid.k.lo));
    for (long k = grid.k.lo; k <= grid.k.hi; ++k) default_lo = std::max(default_lo, identity.min_n(static_cast<int>(k)));
    const Range n_range = grid.n.value_or(Range{default_lo, 10});
    const Range m_range = grid.m.value_or(Range{identity.min_m, 10});
    if (grid.i) require_range(grid.i->lo >= 1 && grid.i->lo <= grid.i->hi, "i range must start at 1 or above");
    if (identity.uses_m) require_range(m_range.lo >= identity.min_m, identity.id + " needs m >= 1");

    // Enumerate first so the range checks reject the whole grid up front.
    std::vector<GridPoint> points;
    for (long k = grid.k.lo; k <= grid.k.hi; ++k) {
        const int kk = static_cast<int>(k);
        require_range(n_range.lo >= identity.min_n(kk),
                      identity.id + " needs n >= " + std::to_string(identity.min_n(kk)) + " at k = " +
                          std::to_string(kk));
        const long i_lo = identity.uses_i ? (grid.i ? grid.i->lo : 1) : 0;
        const long i_hi = identity.uses_i ? std::min<long>(grid.i ? grid.i->hi : k, k) : 0;
        const long m_lo = identity.uses_m ? m_range.lo : 0;
        const long m_hi = identity.uses_m ? m_range.hi : 0;
        for (long i = i_lo; i <= i_hi; ++i) {
            for (long n = n_range.lo; n <= n_range.hi; ++n) {
                for (long m = m_lo; m <= m_hi; ++m) {
                    GridPoint p{kk, static_cast<int>(i), n, m};
                    if (identity.applies(p)) points.push_back(p);
                }
            }
        }
    }
    require_range(!points.empty(), "grid for " + identity.id + " is empty");

    IdentityReport report;
    report.id = identity.id;
    report.mode = identity.mode;
    report.anchor = identity.anchor;
    report.grid_size = points.size();
    for (const auto& p : points) {
        Sides sides = identity.check(source, p, grid.record_values);
        if (!sides.equal && !grid.record_values) sides = identity.check(source, p, true);
        if (!sides.equal) report.failures.push_back({p, sides});
        if (grid.record_values) report.values.push_back({p, std::move(sides)});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Grid profile_grid(const IdentityCase& identity, Profile profile) {
    const bool full = profile == Profile::full;
    Grid grid;
    grid.k = Range{std::max<long>(3, identity.min_k), full ? 5 : 4};
    long n_hi = 10;
    if (full) n_hi = identity.mode == CheckMode::symbolic ? 15 : 40;
    // Lower bound common to every k in the profile.
    long n_lo = identity.min_n(static_cast<int>(grid.k.lo));
    for (long k = grid.k.lo; k <= grid.k.hi; ++k) n_lo = std::max(n_lo, identity.min_n(static_cast<int>(k)));
    n_lo = std::max(n_lo, full ? -8L : -4L);
    grid.n = Range{n_lo, n_hi};
    if (identity.uses_m) grid.m = Range{identity.min_m, n_hi};
    return grid;
}

std::vector<IdentityReport> run_all(Profile profile, const SequenceSource& source) {
    std::vector<IdentityReport> reports;
    for (const auto& identity : identity_registry()) {
        reports.push_back(run_identity(identity.id, profile_grid(identity, profile), source));
    }
    return reports;
}

} // namespace kseq

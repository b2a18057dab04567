// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exit status is nonzero if any criterion fails.

#include "kseq/binet.hpp"
#include "kseq/cli.hpp"
#include "kseq/identities.hpp"
#include "kseq/matrix.hpp"
#include "kseq/numseq.hpp"
#include "kseq/seqgen.hpp"
#include "support.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace kseq;
using kseq::test::parse;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Table = std::vector<std::vector<std::string>>;

// Values of V^i_{3,n}, n = -2..7, and V^i_{4,n}, n = -3..4.
const Table kVdl3{
    {"1", "0", "0"},
    {"0", "1", "0"},
    {"0", "0", "1"},
    {"t3", "t2", "0"},
    {"0", "t3", "t2"},
    {"t2*t3", "t2^2", "t3"},
    {"t3^2", "2*t2*t3", "t2^2"},
    {"t2^2*t3", "t2^3 + t3^2", "2*t2*t3"},
    {"2*t2*t3^2", "3*t2^2*t3", "t2^3 + t3^2"},
    {"t3^3 + t2^3*t3", "t2^4 + 3*t2*t3^2", "3*t2^2*t3"},
};
const Table kVdl4{
    {"1", "0", "0", "0"},
    {"0", "1", "0", "0"},
    {"0", "0", "1", "0"},
    {"0", "0", "0", "1"},
    {"t4", "t3", "t2", "0"},
    {"0", "t4", "t3", "t2"},
    {"t2*t4", "t2*t3", "t4 + t2^2", "t3"},
    {"t3*t4", "t2*t4 + t3^2", "2*t2*t3", "t4 + t2^2"},
};
// R^i_{3,n}, n = -2..3.
const Table kPerrin3{
    {"-t2^3/t3^2 + 3", "-t2/t3", "t2^2/t3^2"},
    {"t2^2/t3", "3", "-t2/t3"},
    {"-t2", "0", "3"},
    {"3*t3", "2*t2", "0"},
    {"0", "3*t3", "2*t2"},
    {"2*t2*t3", "2*t2^2", "3*t3"},
};

Outcome table_matches(int k, long from, const Table& expected) {
    std::ostringstream out, err;
    const long to = from + static_cast<long>(expected.size()) - 1;
    const int status = cli::run({"table", "--family", "vdl-kseq", "-k", std::to_string(k), "--from",
                                 std::to_string(from), "--to", std::to_string(to), "--format", "json"},
                                out, err);
    if (status != 0) return {false, "table command failed: " + err.str()};
    std::istringstream lines(out.str());
    std::size_t cells = 0;
    for (std::string line; std::getline(lines, line); ++cells) {
        const auto j = nlohmann::json::parse(line);
        const long n = j["n"];
        const int i = j["i"];
        const std::string& want = expected[static_cast<std::size_t>(n - from)][static_cast<std::size_t>(i - 1)];
        if (parse(static_cast<std::size_t>(k), j["value"]) != parse(static_cast<std::size_t>(k), want)) {
            return {false, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                               ": got " + j["value"].get<std::string>() + ", expected " + want};
        }
    }
    if (cells != expected.size() * static_cast<std::size_t>(k)) return {false, "wrong number of cells"};
    return {true, std::to_string(cells) + " cells"};
}

Outcome criterion1() {
    const Outcome three = table_matches(3, -2, kVdl3);
    if (!three.pass) return three;
    const Outcome four = table_matches(4, -3, kVdl4);
    if (!four.pass) return four;
    return {true, "k=3 n=-2..7 and k=4 n=-3..4, " + std::to_string(10 * 3 + 8 * 4) + " cells"};
}

Outcome criterion2() {
    auto row_matches = [](const PolyMatrix& m, std::size_t r, long n) {
        for (std::size_t i = 1; i <= 3; ++i) {
            if (m(r, i) != parse(3, kPerrin3[static_cast<std::size_t>(n + 2)][i - 1])) return false;
        }
        return true;
    };
    const PolyMatrix base = perrin_base(3);
    for (std::size_t r = 1; r <= 3; ++r) {
        if (!row_matches(base, r, static_cast<long>(r) - 3)) return {false, "perrin_base(3) row " + std::to_string(r)};
    }
    for (long n = 1; n <= 3; ++n) {
        const PolyMatrix w = perrin_window(3, n);
        for (std::size_t r = 1; r <= 3; ++r) {
            if (!row_matches(w, r, n - 3 + static_cast<long>(r))) {
                return {false, "perrin_window(3, " + std::to_string(n) + ") row " + std::to_string(r)};
            }
        }
    }
    return {true, "R_(3) and windows n=1..3, rows n=-2..3"};
}

Outcome criterion3() {
    Grid g;
    g.k = Range{4, 4};
    g.i = Range{3, 3};
    g.n = Range{5, 5};
    g.record_values = true;
    const IdentityReport r = run_identity("thm-2.12", g);
    if (!r.pass() || r.values.size() != 1) return {false, "identity reported a failure"};
    const ScaledPoly expected = parse(4, "6*t2*t4 + 2*t2^3 + 3*t3^2");
    const Sides& s = r.values.front().sides;
    if (parse(4, s.lhs) != expected || parse(4, s.rhs) != expected) return {false, "sides: " + s.lhs + " / " + s.rhs};
    return {true, "both sides " + s.lhs};
}

Outcome criterion4() {
    const std::vector<long> kso{0, 1, 0, 1, 1, 1, 2};
    for (long n = -2; n <= 4; ++n) {
        if (kso_kv(3, 2, n) != kso[static_cast<std::size_t>(n + 2)]) return {false, "kso_kv(3,2," + std::to_string(n) + ")"};
    }
    const std::vector<long> gr{1, -1, 3, 0, 2, 3, 2, 5, 5, 7};
    for (long n = -2; n <= 7; ++n) {
        if (gokr(3, n) != gr[static_cast<std::size_t>(n + 2)]) return {false, "gokr(3," + std::to_string(n) + ")"};
    }
    // Starting values, then continuation by plain iteration.
    const std::vector<std::pair<Classic, std::vector<Integer>>> starts{
        {Classic::padovan, {1, 1, 1}}, {Classic::vanderlaan, {1, 0, 1}}, {Classic::perrin, {0, 2, 3}}};
    for (const auto& [name, first] : starts) {
        const auto expected = test::iterate_ones(3, first, 30);
        for (long n = 1; n <= 30; ++n) {
            if (classic(name, n) != expected[static_cast<std::size_t>(n - 1)]) {
                return {false, "classic sequence at n=" + std::to_string(n)};
            }
        }
    }
    return {true, "kso_kv(3,2,-2..4), gokr(3,-2..7), classics n=1..30"};
}

Outcome criterion5() {
    const auto reports = run_all(Profile::full);
    std::size_t points = 0;
    for (const auto& r : reports) {
        points += r.grid_size;
        if (!r.pass()) {
            const auto& f = r.failures.front();
            return {false, r.id + " fails at k=" + std::to_string(f.point.k) + " n=" + std::to_string(f.point.n)};
        }
    }
    return {true, std::to_string(reports.size()) + " identities, " + std::to_string(points) + " grid points"};
}

Outcome criterion6() {
    for (int k = 3; k <= 5; ++k) {
        const auto arity = static_cast<std::size_t>(k);
        for (long n = -8; n <= 8; ++n) {
            const bool negative = (n % 2 != 0) && ((k + 1) % 2 != 0);
            const Poly sign = Poly::constant(arity, negative ? -1 : 1);
            const ScaledPoly expected =
                n >= 0 ? ScaledPoly(sign * Poly::variable(arity, arity, static_cast<std::uint32_t>(n)))
                       : ScaledPoly(sign, static_cast<std::uint32_t>(-n));
            if (mat_det(vdl_window(k, n)) != expected) {
                return {false, "det of the window at k=" + std::to_string(k) + " n=" + std::to_string(n)};
            }
        }
    }
    for (int k = 3; k <= 6; ++k) {
        for (long n = 0; n <= 20; ++n) {
            const Integer expected = (k % 2 == 1 || n % 2 == 0) ? 1 : -1;
            if (fast_window(k, n).det() != expected) {
                return {false, "det A_1^n at k=" + std::to_string(k) + " n=" + std::to_string(n)};
            }
        }
    }
    return {true, "symbolic k=3..5 |n|<=8, numeric k=3..6 n<=20"};
}

Outcome criterion7() {
    const std::vector<std::pair<int, std::vector<double>>> points{{3, {0, 1, 1}}, {4, {0, 1, 1, 1}}, {3, {0, 2, 1}}};
    double worst = 0.0;
    for (const auto& [k, t] : points) {
        const BinetReport r = binet_check(k, t, 20, 1e-8);
        for (const auto& row : r.per_n) worst = std::max(worst, row.relerr);
        if (!r.pass) return {false, "binet_check k=" + std::to_string(k)};
    }
    // Real root of x^3 - x - 1, by bisection.
    double lo = 1.0, hi = 2.0;
    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        (mid * mid * mid - mid - 1.0 < 0.0 ? lo : hi) = mid;
    }
    const double ratio = gokv(3, 61).get_d() / gokv(3, 60).get_d();
    const double gap = std::abs(ratio - lo);
    char buf[160];
    std::snprintf(buf, sizeof buf, "max relerr %.1e; ratio at n=60 off by %.1e", worst, gap);
    return {gap <= 1e-6, buf};
}

Outcome criterion8() {
    const auto start = std::chrono::steady_clock::now();
    const Integer fast = fast_window(4, 2000)(4, 4);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    // v^4_{4,n} by plain iteration from n = -3.
    const auto naive = test::iterate_ones(4, {0, 0, 0, 1}, 2000 + 4);
    if (fast != naive.back()) return {false, "bottom-right entry differs from iteration"};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu-digit entry equal; exponentiation %.2f ms", fast.get_str().size(), ms);
    return {ms < 100.0, buf};
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "van der laan k-sequence tables", 1.0, criterion1},
        {2, "perrin base and windows", 1.0, criterion2},
        {3, "worked perrin value", 1.0, criterion3},
        {4, "integer sequences", 1.0, criterion4},
        {5, "identity suite, full profile", 60.0, criterion5},
        {6, "determinant laws", 5.0, criterion6},
        {7, "binet evaluation", 1.0, criterion7},
        {8, "fast window against iteration", 1.0, criterion8},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s criterion %d: %s (%.3f s, budget %.0f s) - %s%s\n", pass ? "PASS" : "FAIL", c.number, c.name,
                    seconds, c.budget_seconds, o.detail.c_str(), in_time ? "" : " [over budget]");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

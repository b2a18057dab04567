#include "kseq/cli.hpp"

#include "kseq/binet.hpp"
#include "kseq/error.hpp"
#include "kseq/identities.hpp"
#include "kseq/matrix.hpp"
#include "kseq/numseq.hpp"
#include "kseq/seqgen.hpp"
#include "kseq/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace kseq::cli {

namespace {

using nlohmann::ordered_json;

// Integer families switch to matrix powers above this index.
constexpr long kFastThreshold = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

Format parse_format(const std::string& name, bool allow_csv) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "csv" && allow_csv) return Format::csv;
    throw UsageError("unsupported format '" + name + "'");
}

enum class Kind { poly, number, classic };

struct FamilyInfo {
    std::string name;
    Kind kind;
    bool indexed;
    Family poly = Family::fibonacci;
    NumFamily number = NumFamily::gokv;
    Classic classic = Classic::padovan;
};

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> table{
        {"fib", Kind::poly, false, Family::fibonacci},
        {"lucas", Kind::poly, false, Family::lucas},
        {"vdl", Kind::poly, false, Family::vanderlaan},
        {"perrin", Kind::poly, false, Family::perrin},
        {"vdl-kseq", Kind::poly, true, Family::vanderlaan_kseq},
        {"perrin-kseq", Kind::poly, true, Family::perrin_kseq},
        {"gokv", Kind::number, false, {}, NumFamily::gokv},
        {"kso-kv", Kind::number, true, {}, NumFamily::kso_kv},
        {"gokr", Kind::number, false, {}, NumFamily::gokr},
        {"kso-kr", Kind::number, true, {}, NumFamily::kso_kr},
        {"padovan", Kind::classic, false, {}, {}, Classic::padovan},
        {"vdl-classic", Kind::classic, false, {}, {}, Classic::vanderlaan},
        {"perrin-classic", Kind::classic, false, {}, {}, Classic::perrin},
    };
    return table;
}

std::vector<std::string> family_names() {
    std::vector<std::string> names;
    for (const auto& f : families()) names.push_back(f.name);
    return names;
}

const FamilyInfo& find_family(const std::string& name) {
    for (const auto& f : families()) {
        if (f.name == name) return f;
    }
    throw UsageError("unknown family '" + name + "'");
}

Integer number_value(NumFamily family, int k, int i, long n) {
    const bool fast = n > kFastThreshold;
    switch (family) {
    case NumFamily::gokv: return fast ? gokv_fast(k, n) : gokv(k, n);
    case NumFamily::kso_kv: return fast ? kso_kv_fast(k, i, n) : kso_kv(k, i, n);
    case NumFamily::gokr: return fast ? gokr_fast(k, n) : gokr(k, n);
    case NumFamily::kso_kr: return fast ? kso_kr_fast(k, i, n) : kso_kr(k, i, n);
    }
    throw Error("family", "unknown family");
}

struct Term {
    std::string text;
    std::optional<ScaledPoly> poly;
};

Term compute(const FamilyInfo& f, int k, int i, long n) {
    switch (f.kind) {
    case Kind::poly: {
        ScaledPoly v = sequence_term(SeqSpec{f.poly, k, i, n});
        std::string text = v.to_string();
        return {std::move(text), std::move(v)};
    }
    case Kind::number: return {number_value(f.number, k, i, n).get_str(), std::nullopt};
    case Kind::classic: return {classic(f.classic, n).get_str(), std::nullopt};
    }
    throw Error("family", "unknown family");
}

// Shared flag checks for term/table. Returns the effective k.
int check_family_flags(const FamilyInfo& f, int k, bool k_given, bool i_given) {
    if (f.kind == Kind::classic) {
        if (k_given && k != 3) throw UsageError("classical sequences have order 3");
        return 3;
    }
    if (i_given && !f.indexed) throw UsageError("family '" + f.name + "' takes no -i");
    return k;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string grid_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string text;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += " | ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        text += line + "\n";
    }
    return text;
}

std::vector<double> parse_tvals(const std::string& spec) {
    std::vector<double> values;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--t: '" + item + "' is not a number");
        }
        if (used != item.size()) throw UsageError("--t: '" + item + "' is not a number");
        values.push_back(v);
    }
    if (values.empty()) throw UsageError("--t needs k comma-separated values");
    return values;
}

std::string point_text(const GridPoint& p) {
    std::string s = "k=" + std::to_string(p.k);
    if (p.i != 0) s += " i=" + std::to_string(p.i);
    s += " n=" + std::to_string(p.n);
    if (p.m != 0) s += " m=" + std::to_string(p.m);
    return s;
}

struct Options {
    std::string family;
    int k = 3;
    int i = 0;
    long n = 0;
    long from = 0;
    long to = 10;
    std::string window;
    std::string tvals;
    long nmax = 20;
    double tol = 1e-8;
    std::string profile = "quick";
    std::string id;
    std::string output;
    std::string format = "plain"; // KSEQ_FORMAT overrides
};

int run_term(const Options& o, bool k_given, bool i_given, std::ostream& out) {
    const FamilyInfo& f = find_family(o.family);
    const Format format = parse_format(o.format, false);
    const int k = check_family_flags(f, o.k, k_given, i_given);
    if (f.indexed && !i_given) throw UsageError("family '" + f.name + "' needs -i");

    const Term term = compute(f, k, o.i, o.n);
    if (format == Format::plain) {
        out << term.text << "\n";
        return 0;
    }
    ordered_json j{{"value", term.text}, {"family", f.name}, {"k", k}};
    if (f.indexed) j["i"] = o.i;
    j["n"] = o.n;
    if (term.poly) j["poly"] = to_json(*term.poly);
    out << j.dump() << "\n";
    return 0;
}

int run_table(const Options& o, bool k_given, bool i_given, bool from_given, std::ostream& out) {
    const FamilyInfo& f = find_family(o.family);
    const Format format = parse_format(o.format, true);
    const int k = check_family_flags(f, o.k, k_given, i_given);
    long from = o.from;
    if (!from_given) from = f.indexed ? 1 - k : (f.kind == Kind::classic ? 1 : 0);
    if (from > o.to) throw UsageError("--from must not exceed --to");

    std::vector<int> columns;
    if (!f.indexed) {
        columns.push_back(0);
    } else if (i_given) {
        columns.push_back(o.i);
    } else {
        for (int i = 1; i <= k; ++i) columns.push_back(i);
    }

    // Compute everything first so a domain error leaves no partial output.
    std::vector<std::vector<std::string>> cells;
    for (long n = from; n <= o.to; ++n) {
        std::vector<std::string> row;
        for (int i : columns) row.push_back(compute(f, k, i, n).text);
        cells.push_back(std::move(row));
    }

    switch (format) {
    case Format::plain: {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"n"};
        for (int i : columns) header.push_back(i == 0 ? f.name : "i=" + std::to_string(i));
        rows.push_back(std::move(header));
        for (long n = from; n <= o.to; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            const auto& values = cells[static_cast<std::size_t>(n - from)];
            row.insert(row.end(), values.begin(), values.end());
            rows.push_back(std::move(row));
        }
        out << grid_text(rows);
        break;
    }
    case Format::json:
        for (long n = from; n <= o.to; ++n) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                ordered_json j{{"family", f.name}, {"k", k}, {"i", nullptr}, {"n", n},
                               {"value", cells[static_cast<std::size_t>(n - from)][c]}};
                if (columns[c] != 0) j["i"] = columns[c];
                out << j.dump() << "\n";
            }
        }
        break;
    case Format::csv:
        out << "family,k,i,n,value\n";
        for (long n = from; n <= o.to; ++n) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                out << f.name << "," << k << "," << (columns[c] == 0 ? "" : std::to_string(columns[c])) << ","
                    << n << "," << csv_field(cells[static_cast<std::size_t>(n - from)][c]) << "\n";
            }
        }
        break;
    }
    return 0;
}

int run_matrix(const Options& o, bool n_given, std::ostream& out) {
    const Format format = parse_format(o.format, false);
    if (o.window == "base" && n_given) throw UsageError("--window base takes no -n");
    if (o.window == "a1") {
        const IntMatrix m = fast_window(o.k, o.n);
        out << (format == Format::json ? to_json(m).dump() + "\n" : m.to_string());
        return 0;
    }
    PolyMatrix m = [&] {
        if (o.window == "vdl") return vdl_window(o.k, o.n);
        if (o.window == "perrin") return perrin_window(o.k, o.n);
        if (o.window == "companion") return mat_power(companion(o.k, CompanionVariant::full), o.n);
        return perrin_base(o.k);
    }();
    out << (format == Format::json ? to_json(m).dump() + "\n" : m.to_string());
    return 0;
}

int run_binet(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format, false);
    if (o.nmax < 0) throw UsageError("--nmax must be nonnegative");
    if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
    const auto tvals = parse_tvals(o.tvals);
    const BinetReport report = binet_check(o.k, tvals, o.nmax, o.tol);

    if (format == Format::json) {
        out << to_json(report).dump() << "\n";
    } else {
        std::ostringstream s;
        s << "k = " << report.k << ", t = (";
        for (std::size_t j = 0; j < tvals.size(); ++j) s << (j ? ", " : "") << tvals[j];
        s << "), tol = " << report.tolerance << "\n";
        std::vector<std::vector<std::string>> rows{{"n", "exact", "binet", "relerr"}};
        for (const auto& row : report.per_n) {
            std::ostringstream exact, approx, relerr;
            exact << std::setprecision(17) << row.exact;
            approx << std::setprecision(17) << row.approx;
            relerr << std::scientific << std::setprecision(2) << row.relerr;
            rows.push_back({std::to_string(row.n), exact.str(), approx.str(), relerr.str()});
        }
        out << s.str() << grid_text(rows) << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format, false);
    const Profile profile = o.profile == "full" ? Profile::full : Profile::quick;
    std::optional<std::ofstream> file;
    if (!o.output.empty()) {
        file.emplace(o.output);
        if (!*file) throw UsageError("cannot write '" + o.output + "'");
    }
    std::ostream& sink = file ? static_cast<std::ostream&>(*file) : out;

    std::vector<IdentityReport> reports;
    if (o.id.empty()) {
        reports = run_all(profile);
    } else {
        reports.push_back(run_identity(o.id, profile_grid(find_identity(o.id), profile)));
    }
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });

    if (format == Format::json) {
        ordered_json all = ordered_json::array();
        for (const auto& r : reports) all.push_back(to_json(r));
        sink << all.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::ostringstream line;
            line << (r.pass() ? "PASS" : "FAIL") << "  " << std::left << std::setw(9) << r.id << std::setw(9)
                 << mode_name(r.mode) << "points=" << std::setw(6) << r.grid_size << std::fixed
                 << std::setprecision(3) << r.elapsed_seconds << "s";
            sink << line.str() << "\n";
            for (const auto& f : r.failures) {
                sink << "    at " << point_text(f.point) << ": " << f.sides.lhs << "  !=  " << f.sides.rhs << "\n";
            }
        }
        sink << passed << "/" << reports.size() << " identities passed\n";
    }
    return static_cast<std::size_t>(passed) == reports.size() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Van der Laan / Perrin polynomial sequences", "kseq"};
    app.require_subcommand(1);
    Options o;

    const auto format_opt = [&](CLI::App* sub, bool csv) {
        return sub->add_option("--format", o.format, csv ? "plain, json or csv" : "plain or json")
            ->envname("KSEQ_FORMAT");
    };

    auto* term = app.add_subcommand("term", "Print one sequence term");
    term->add_option("--family", o.family, "Sequence family")->required()->check(CLI::IsMember(family_names()));
    auto* term_k = term->add_option("-k", o.k, "Order (default 3)");
    auto* term_i = term->add_option("-i", o.i, "Sequence index for k-sequence families");
    term->add_option("-n", o.n, "Term index")->required();
    format_opt(term, false);

    auto* table = app.add_subcommand("table", "Print a range of terms");
    table->add_option("--family", o.family, "Sequence family")->required()->check(CLI::IsMember(family_names()));
    auto* table_k = table->add_option("-k", o.k, "Order (default 3)");
    auto* table_i = table->add_option("-i", o.i, "Only this sequence index (default: all)");
    auto* table_from = table->add_option("--from", o.from, "First index (default: first defined)");
    table->add_option("--to", o.to, "Last index (default 10)");
    format_opt(table, true);

    auto* matrix = app.add_subcommand("matrix", "Print a generator-matrix window");
    matrix->add_option("--window", o.window, "vdl, perrin, companion, base or a1")
        ->required()
        ->check(CLI::IsMember({"vdl", "perrin", "companion", "base", "a1"}));
    matrix->add_option("-k", o.k, "Order (default 3)");
    auto* matrix_n = matrix->add_option("-n", o.n, "Power (default 1)");
    format_opt(matrix, false);

    auto* binet = app.add_subcommand("binet", "Compare Binet evaluation with exact terms");
    binet->add_option("-k", o.k, "Order (default 3)");
    binet->add_option("--t", o.tvals, "Comma-separated t_1,...,t_k")->required();
    binet->add_option("--nmax", o.nmax, "Largest n (default 20)");
    binet->add_option("--tol", o.tol, "Relative error bound (default 1e-8)");
    format_opt(binet, false);

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--profile", o.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--id", o.id, "Run a single identity");
    verify->add_option("--output", o.output, "Write the report to a file");
    format_opt(verify, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "kseq: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    if (matrix->parsed() && !matrix_n->count()) o.n = 1;
    try {
        if (term->parsed()) return run_term(o, term_k->count() > 0, term_i->count() > 0, out);
        if (table->parsed())
            return run_table(o, table_k->count() > 0, table_i->count() > 0, table_from->count() > 0, out);
        if (matrix->parsed()) return run_matrix(o, matrix_n->count() > 0, out);
        if (binet->parsed()) return run_binet(o, out);
        return run_verify(o, out);
    } catch (const UsageError& e) {
        err << "kseq: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "kseq: " << e.kind() << ": " << e.what() << "\n";
        return 2;
    }
}

} // namespace kseq::cli

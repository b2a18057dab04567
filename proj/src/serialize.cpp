#include "kseq/serialize.hpp"

#include "kseq/error.hpp"

namespace kseq {

using nlohmann::ordered_json;

namespace {

ordered_json terms_json(const Poly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(ordered_json{{"exp", e}, {"coef", c.get_str()}});
    }
    return terms;
}

ordered_json point_json(const GridPoint& p) {
    ordered_json j{{"k", p.k}};
    if (p.i != 0) j["i"] = p.i;
    j["n"] = p.n;
    if (p.m != 0) j["m"] = p.m;
    return j;
}

ordered_json evaluation_json(const Evaluation& e) {
    return ordered_json{{"point", point_json(e.point)}, {"lhs", e.sides.lhs}, {"rhs", e.sides.rhs}};
}

} // namespace

ordered_json to_json(const Poly& p) { return ordered_json{{"terms", terms_json(p)}}; }

ordered_json to_json(const ScaledPoly& p) {
    return ordered_json{{"terms", terms_json(p.numerator())}, {"denom_exp", p.denom_exp()}};
}

ordered_json to_json(const PolyMatrix& m) {
    const auto d = m.denom_exp();
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 1; r <= m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 1; c <= m.dim(); ++c) row.push_back(to_json(m(r, c).numerator_over(d)));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", m.dim()}, {"denom_exp", d}, {"rows", std::move(rows)}};
}

ordered_json to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 1; r <= m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 1; c <= m.dim(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return ordered_json{{"k", m.dim()}, {"rows", std::move(rows)}};
}

ordered_json to_json(const BinetReport& report) {
    ordered_json per_n = ordered_json::array();
    for (const auto& row : report.per_n) {
        per_n.push_back(ordered_json{{"n", row.n}, {"exact", row.exact}, {"approx", row.approx}, {"relerr", row.relerr}});
    }
    return ordered_json{{"k", report.k}, {"tvals", report.tvals}, {"per_n", std::move(per_n)}, {"pass", report.pass}};
}

ordered_json to_json(const IdentityReport& report) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) failures.push_back(evaluation_json(f));
    ordered_json j{{"id", report.id},
                   {"mode", std::string(mode_name(report.mode))},
                   {"anchor", report.anchor},
                   {"grid_size", report.grid_size},
                   {"pass", report.pass()},
                   {"failures", std::move(failures)},
                   {"elapsed_seconds", report.elapsed_seconds}};
    if (!report.values.empty()) {
        ordered_json values = ordered_json::array();
        for (const auto& v : report.values) values.push_back(evaluation_json(v));
        j["values"] = std::move(values);
    }
    return j;
}

Poly poly_from_json(const ordered_json& j, std::size_t arity) {
    try {
        Poly p(arity);
        for (const auto& term : j.at("terms")) {
            auto e = term.at("exp").get<Exponents>();
            if (e.size() != arity) throw Error("format", "exponent vector has the wrong length");
            Integer c;
            if (c.set_str(term.at("coef").get<std::string>(), 10) != 0) {
                throw Error("format", "coefficient is not a decimal integer");
            }
            p += Poly::monomial(arity, std::move(e), c);
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw Error("format", ex.what());
    }
}

ScaledPoly scaled_from_json(const ordered_json& j, std::size_t arity) {
    try {
        return ScaledPoly(poly_from_json(j, arity), j.value("denom_exp", 0u));
    } catch (const nlohmann::json::exception& ex) {
        throw Error("format", ex.what());
    }
}

PolyMatrix matrix_from_json(const ordered_json& j) {
    try {
        const auto dim = j.at("k").get<std::size_t>();
        const auto d = j.at("denom_exp").get<std::uint32_t>();
        const auto& rows = j.at("rows");
        if (rows.size() != dim) throw Error("format", "row count differs from k");
        PolyMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (rows[r].size() != dim) throw Error("format", "row length differs from k");
            for (std::size_t c = 0; c < dim; ++c) m(r + 1, c + 1) = ScaledPoly(poly_from_json(rows[r][c], dim), d);
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw Error("format", ex.what());
    }
}

} // namespace kseq

#include "kseq/poly.hpp"

#include "kseq/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace kseq {

namespace {

std::uint32_t degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Rational rational_pow(const Rational& base, std::uint32_t e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Monomial product with optional exponent offset on the last variable.
std::string render_monomial(const Exponents& e, std::int64_t last_shift,
                            std::int64_t& denominator_power) {
    std::string out;
    const std::size_t k = e.size();
    denominator_power = 0;
    for (std::size_t v = 0; v < k; ++v) {
        std::int64_t power = e[v];
        if (v + 1 == k) {
            power -= last_shift;
            if (power < 0) {
                denominator_power = -power;
                power = 0;
            }
        }
        if (power == 0) continue;
        if (!out.empty()) out += '*';
        out += 't' + std::to_string(v + 1);
        if (power > 1) out += '^' + std::to_string(power);
    }
    return out;
}

void render_term(std::ostringstream& os, bool first, const Integer& coef,
                 const Exponents& e, std::int64_t shift) {
    const bool negative = sgn(coef) < 0;
    if (first) {
        if (negative) os << '-';
    } else {
        os << (negative ? " - " : " + ");
    }
    Integer magnitude = abs(coef);
    std::int64_t denom = 0;
    std::string mono = render_monomial(e, shift, denom);
    if (mono.empty()) {
        os << magnitude.get_str();
    } else if (magnitude == 1) {
        os << mono;
    } else {
        os << magnitude.get_str() << '*' << mono;
    }
    if (denom > 0) {
        os << "/t" << e.size();
        if (denom > 1) os << '^' << denom;
    }
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = degree_of(a);
    const auto db = degree_of(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw Error("arity", "polynomial arity must be at least 1");
}

Poly Poly::constant(std::size_t arity, const Integer& c) {
    return monomial(arity, Exponents(arity, 0), c);
}

Poly Poly::variable(std::size_t arity, std::size_t j, std::uint32_t power) {
    if (j < 1 || j > arity) throw Error("index", "variable index out of range");
    Exponents e(arity, 0);
    e[j - 1] = power;
    return monomial(arity, std::move(e), 1);
}

Poly Poly::monomial(std::size_t arity, Exponents e, const Integer& c) {
    Poly p(arity);
    if (e.size() != arity) throw Error("arity", "exponent vector length differs from arity");
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

Integer Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::uint32_t Poly::total_degree() const {
    return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

void Poly::check_arity(const Poly& other) const {
    if (arity_ != other.arity_) {
        throw Error("arity", "operands have arity " + std::to_string(arity_) + " and " +
                                 std::to_string(other.arity_));
    }
}

void Poly::add_term(const Exponents& e, const Integer& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out(a.arity_);
    if (a.is_zero() || b.is_zero()) return out;
    Exponents e(a.arity_);
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            auto [it, inserted] = out.terms_.try_emplace(e, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

Poly Poly::derivative(std::size_t j) const {
    if (j < 1 || j > arity_) throw Error("index", "derivative variable out of range");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        const auto power = e[j - 1];
        if (power == 0) continue;
        Exponents de = e;
        de[j - 1] = power - 1;
        out.add_term(de, c * power);
    }
    return out;
}

Poly Poly::euler_operator() const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        const auto deg = degree_of(e);
        if (deg != 0) out.add_term(e, c * deg);
    }
    return out;
}

Poly Poly::substitute(std::size_t j, const Integer& value) const {
    if (j < 1 || j > arity_) throw Error("index", "substitution variable out of range");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), e[j - 1]);
        if (factor == 0) continue;
        Exponents se = e;
        se[j - 1] = 0;
        out.add_term(se, c * factor);
    }
    return out;
}

Rational Poly::eval(std::span<const Rational> point) const {
    if (point.size() != arity_) throw Error("arity", "evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t v = 0; v < arity_; ++v) {
            if (e[v] != 0) term *= rational_pow(point[v], e[v]);
        }
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

double Poly::eval(std::span<const double> point) const {
    if (point.size() != arity_) throw Error("arity", "evaluation point has wrong length");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t v = 0; v < arity_; ++v) {
            if (e[v] != 0) term *= std::pow(point[v], static_cast<double>(e[v]));
        }
        sum += term;
    }
    return sum;
}

std::uint32_t Poly::min_exponent(std::size_t j) const {
    if (j < 1 || j > arity_) throw Error("index", "variable index out of range");
    if (terms_.empty()) return 0;
    std::uint32_t m = UINT32_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, e[j - 1]);
    return m;
}

Poly Poly::multiply_by_var(std::size_t j, std::uint32_t power) const {
    if (j < 1 || j > arity_) throw Error("index", "variable index out of range");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents se = e;
        se[j - 1] += power;
        out.terms_.emplace(std::move(se), c);
    }
    return out;
}

Poly Poly::divide_by_var(std::size_t j, std::uint32_t power) const {
    if (power > min_exponent(j)) throw Error("inexact", "monomial does not divide polynomial");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents se = e;
        se[j - 1] -= power;
        out.terms_.emplace(std::move(se), c);
    }
    return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    check_arity(divisor);
    if (divisor.is_zero()) throw Error("inexact", "division by the zero polynomial");
    const auto& [lead_e, lead_c] = *divisor.terms_.begin();
    Poly quotient(arity_);
    Poly rest(*this);
    while (!rest.is_zero()) {
        const auto& [re, rc] = *rest.terms_.begin();
        Exponents qe(arity_);
        for (std::size_t v = 0; v < arity_; ++v) {
            if (re[v] < lead_e[v]) throw Error("inexact", "polynomial division leaves a remainder");
            qe[v] = re[v] - lead_e[v];
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
            throw Error("inexact", "polynomial division leaves a remainder");
        }
        Poly qt = monomial(arity_, std::move(qe), rc / lead_c);
        rest -= qt * divisor;
        quotient += qt;
    }
    return quotient;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        render_term(os, first, c, e, 0);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

ScaledPoly::ScaledPoly(Poly num, std::uint32_t d) : num_(std::move(num)), d_(d) {
    normalize();
}

void ScaledPoly::normalize() {
    if (num_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ == 0) return;
    const auto k = num_.arity();
    const auto common = std::min(d_, num_.min_exponent(k));
    if (common > 0) {
        num_ = num_.divide_by_var(k, common);
        d_ -= common;
    }
}

const Poly& ScaledPoly::as_poly() const {
    if (d_ != 0) throw Error("pole", "value still carries a t_k denominator: " + to_string());
    return num_;
}

Poly ScaledPoly::numerator_over(std::uint32_t d) const {
    if (d < d_) throw Error("range", "target denominator exponent too small");
    return num_.multiply_by_var(num_.arity(), d - d_);
}

ScaledPoly& ScaledPoly::operator+=(const ScaledPoly& other) {
    const auto d = std::max(d_, other.d_);
    Poly sum = numerator_over(d);
    sum += other.numerator_over(d);
    *this = ScaledPoly(std::move(sum), d);
    return *this;
}

ScaledPoly& ScaledPoly::operator-=(const ScaledPoly& other) {
    const auto d = std::max(d_, other.d_);
    Poly diff = numerator_over(d);
    diff -= other.numerator_over(d);
    *this = ScaledPoly(std::move(diff), d);
    return *this;
}

ScaledPoly& ScaledPoly::operator*=(const ScaledPoly& other) {
    *this = ScaledPoly(num_ * other.num_, d_ + other.d_);
    return *this;
}

ScaledPoly& ScaledPoly::operator*=(const Integer& c) {
    *this = ScaledPoly(num_ * c, d_);
    return *this;
}

bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
    // Both sides are normalized, so canonical forms coincide iff the values do.
    return a.d_ == b.d_ && a.num_ == b.num_;
}

ScaledPoly ScaledPoly::inverse_unit() const {
    const auto k = num_.arity();
    if (num_.term_count() != 1) throw Error("inverse", "not a unit times a power of t_k");
    const auto& [e, c] = *num_.terms().begin();
    for (std::size_t v = 0; v + 1 < k; ++v) {
        if (e[v] != 0) throw Error("inverse", "not a unit times a power of t_k");
    }
    if (c != 1 && c != -1) throw Error("inverse", "coefficient is not a unit");
    // (c t_k^a / t_k^d)^{-1} = c t_k^d / t_k^a
    return ScaledPoly(Poly::variable(k, k, d_) * c, e[k - 1]);
}

Rational ScaledPoly::eval(std::span<const Rational> point) const {
    Rational value = num_.eval(point);
    if (d_ == 0) return value;
    const Rational& tk = point[num_.arity() - 1];
    if (tk == 0) throw Error("pole", "t_k is zero at a point where a denominator remains");
    value /= rational_pow(tk, d_);
    return value;
}

double ScaledPoly::eval(std::span<const double> point) const {
    double value = num_.eval(point);
    if (d_ == 0) return value;
    const double tk = point[num_.arity() - 1];
    if (tk == 0.0) throw Error("pole", "t_k is zero at a point where a denominator remains");
    return value / std::pow(tk, static_cast<double>(d_));
}

std::string ScaledPoly::to_string() const {
    if (num_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : num_.terms()) {
        render_term(os, first, c, e, d_);
        first = false;
    }
    return os.str();
}

} // namespace kseq

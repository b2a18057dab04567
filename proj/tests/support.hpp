#pragma once

// Test helpers: a parser for the canonical text form (so expected values can
// be written the way they are printed), random polynomials for property
// tests, and closed-form oracles that share no code with the library.

#include "kseq/poly.hpp"

#include <cctype>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kseq::test {

// Parses e.g. "-t2^3/t3^2 + 3*t1*t2 - 4". Division is only by powers of t_k.
inline ScaledPoly parse(std::size_t arity, const std::string& text) {
    ScaledPoly total(arity);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto number = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    };
    auto power = [&]() -> std::uint32_t {
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            return static_cast<std::uint32_t>(std::stoul(number()));
        }
        return 1;
    };
    bool negative = false;
    skip();
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    while (true) {
        skip();
        Integer coef = 1;
        Exponents e(arity, 0);
        std::uint32_t d = 0;
        bool first = true;
        while (pos < text.size() && text[pos] != ' ') {
            if (!first) {
                if (text[pos] == '*') {
                    ++pos;
                } else if (text[pos] == '/') {
                    ++pos;
                    if (text[pos] != 't') throw std::invalid_argument("bad divisor in " + text);
                    ++pos;
                    if (std::stoul(number()) != arity) throw std::invalid_argument("divisor must be t_k");
                    d += power();
                    continue;
                } else {
                    throw std::invalid_argument("unexpected '" + std::string(1, text[pos]) + "' in " + text);
                }
            }
            first = false;
            if (text[pos] == 't') {
                ++pos;
                const auto j = std::stoul(number());
                e.at(j - 1) += power();
            } else {
                coef *= Integer(number());
            }
        }
        if (negative) coef = -coef;
        total += ScaledPoly(Poly::monomial(arity, e, coef), d);
        skip();
        if (pos >= text.size()) break;
        negative = text[pos] == '-';
        if (text[pos] != '+' && text[pos] != '-') throw std::invalid_argument("expected sign in " + text);
        ++pos;
    }
    return total;
}

inline Poly parse_poly(std::size_t arity, const std::string& text) { return parse(arity, text).as_poly(); }

inline Poly random_poly(std::size_t arity, std::mt19937& rng, int max_terms = 5, int max_exp = 3, int coef = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> c(-coef, coef);
    Poly p(arity);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(arity);
        for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
        p += Poly::monomial(arity, e, c(rng));
    }
    return p;
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned j = 2; j <= n; ++j) f *= j;
    return f;
}

// Visits every a = (a_1..a_k) with sum_j j a_j = n.
inline void compositions(int k, long n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> a(static_cast<std::size_t>(k), 0);
    std::function<void(int, long)> rec = [&](int j, long rest) {
        if (j > k) {
            if (rest == 0) visit(a);
            return;
        }
        for (long c = 0; c * j <= rest; ++c) {
            a[static_cast<std::size_t>(j - 1)] = static_cast<unsigned>(c);
            rec(j + 1, rest - c * j);
        }
        a[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(1, n);
}

// F_{k,n} = sum over compositions of multinomial(|a|; a) t^a.
inline Poly fibonacci_oracle(int k, long n) {
    Poly p(static_cast<std::size_t>(k));
    if (n < 0) return p;
    compositions(k, n, [&](const std::vector<unsigned>& a) {
        unsigned total = 0;
        Integer denom = 1;
        for (unsigned x : a) {
            total += x;
            denom *= factorial(x);
        }
        p += Poly::monomial(a.size(), Exponents(a.begin(), a.end()), factorial(total) / denom);
    });
    return p;
}

// Waring's formula for power sums: G_{k,n} = sum n/|a| multinomial(|a|; a) t^a.
inline Poly lucas_oracle(int k, long n) {
    const auto arity = static_cast<std::size_t>(k);
    if (n == 0) return Poly::constant(arity, k);
    Poly p(arity);
    compositions(k, n, [&](const std::vector<unsigned>& a) {
        unsigned total = 0;
        Integer denom = 1;
        for (unsigned x : a) {
            total += x;
            denom *= factorial(x);
        }
        const Integer c = Integer(factorial(total) * n) / (denom * total);
        p += Poly::monomial(arity, Exponents(a.begin(), a.end()), c);
    });
    return p;
}

// Integer iteration from an explicit boundary window: x_n = sum_{j=2}^{k} x_{n-j}.
inline std::vector<Integer> iterate_ones(int k, std::vector<Integer> window, long count) {
    while (static_cast<long>(window.size()) < count) {
        Integer next = 0;
        for (int j = 2; j <= k; ++j) next += window[window.size() - static_cast<std::size_t>(j)];
        window.push_back(next);
    }
    return window;
}

} // namespace kseq::test

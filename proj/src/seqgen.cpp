#include "kseq/seqgen.hpp"

#include "kseq/error.hpp"
#include "kseq/matrix.hpp"

#include <algorithm>
#include <type_traits>

namespace kseq {

namespace {

void check_order(int k, int minimum) {
    if (k < minimum) {
        throw Error("order", "order k = " + std::to_string(k) + " is below " + std::to_string(minimum));
    }
}

void check_sequence_index(int k, int i) {
    if (i < 1 || i > k) throw Error("index", "sequence index i must lie in 1..k");
}

void check_window(int k, long n) {
    if (n < 1 - k) {
        throw Error("range", "index n = " + std::to_string(n) + " lies below the boundary window 1-k");
    }
}

std::size_t arity_of(int k) { return static_cast<std::size_t>(k); }

Poly t(int k, long j) { return Poly::variable(arity_of(k), static_cast<std::size_t>(j)); }

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::fibonacci: return "fibonacci";
    case Family::lucas: return "lucas";
    case Family::vanderlaan: return "vanderlaan";
    case Family::perrin: return "perrin";
    case Family::vanderlaan_kseq: return "vanderlaan_kseq";
    case Family::perrin_kseq: return "perrin_kseq";
    }
    return "unknown";
}

void SeqSpec::validate() const {
    switch (family) {
    case Family::fibonacci:
    case Family::lucas:
        check_order(k, 2);
        break;
    case Family::vanderlaan:
        check_order(k, 3);
        break;
    case Family::perrin:
        check_order(k, 3);
        if (n < 0) throw Error("range", "perrin polynomials are defined for n >= 0");
        break;
    case Family::vanderlaan_kseq:
    case Family::perrin_kseq:
        check_order(k, 3);
        check_sequence_index(k, i);
        check_window(k, n);
        break;
    }
}

template <class T, class Extend>
const T& SequenceGenerator::lookup(Key key, long first, long n, Extend&& extend) {
    std::lock_guard lock(mutex_);
    auto& store = [this]() -> auto& {
        if constexpr (std::is_same_v<T, Poly>) {
            return polys_;
        } else {
            return scaled_;
        }
    }();
    auto& seq = store[key];
    const auto offset = static_cast<std::size_t>(n - first);
    while (seq.size() <= offset) {
        const long next = first + static_cast<long>(seq.size());
        seq.push_back(extend(seq, next));
    }
    return seq[offset];
}

const Poly& SequenceGenerator::fibonacci(int k, long n) {
    check_order(k, 2);
    if (n < 0) {
        std::lock_guard lock(mutex_);
        return zeros_.try_emplace(k, arity_of(k)).first->second;
    }
    return lookup<Poly>({Family::fibonacci, k, 0}, 0, n, [k](const std::deque<Poly>& seq, long m) {
        if (m == 0) return Poly::constant(arity_of(k), 1);
        Poly sum(arity_of(k));
        for (long j = 1; j <= std::min<long>(k, m); ++j) sum += t(k, j) * seq[m - j];
        return sum;
    });
}

const Poly& SequenceGenerator::lucas(int k, long n) {
    check_order(k, 2);
    if (n < 0) {
        std::lock_guard lock(mutex_);
        return zeros_.try_emplace(k, arity_of(k)).first->second;
    }
    return lookup<Poly>({Family::lucas, k, 0}, 0, n, [k](const std::deque<Poly>& seq, long m) {
        if (m == 0) return Poly::constant(arity_of(k), k);
        Poly sum(arity_of(k));
        if (m < k) {
            // Newton correction below the order: m t_m replaces t_m G_0.
            for (long j = 1; j < m; ++j) sum += t(k, j) * seq[m - j];
            sum += t(k, m) * Integer(m);
        } else {
            for (long j = 1; j <= k; ++j) sum += t(k, j) * seq[m - j];
        }
        return sum;
    });
}

const Poly& SequenceGenerator::vanderlaan(int k, long n) {
    check_order(k, 3);
    if (n < 0) {
        std::lock_guard lock(mutex_);
        return zeros_.try_emplace(k, arity_of(k)).first->second;
    }
    return lookup<Poly>({Family::vanderlaan, k, 0}, 0, n, [k](const std::deque<Poly>& seq, long m) {
        if (m <= 2) return Poly::constant(arity_of(k), m == 1 ? 1 : 0);
        Poly sum(arity_of(k));
        for (long j = 2; j <= std::min<long>(k, m); ++j) sum += t(k, j) * seq[m - j];
        return sum;
    });
}

const Poly& SequenceGenerator::perrin(int k, long n) {
    SeqSpec{Family::perrin, k, 0, n}.validate();
    return lookup<Poly>({Family::perrin, k, 0}, 0, n, [k](const std::deque<Poly>& seq, long m) {
        if (m == 0) return Poly::constant(arity_of(k), k);
        Poly sum(arity_of(k));
        if (m < k) {
            for (long j = 2; j < m; ++j) sum += t(k, j) * seq[m - j];
            if (m >= 2) sum += t(k, m) * Integer(m);
        } else {
            for (long j = 2; j <= k; ++j) sum += t(k, j) * seq[m - j];
        }
        return sum;
    });
}

const Poly& SequenceGenerator::vanderlaan_kseq(int k, int i, long n) {
    SeqSpec{Family::vanderlaan_kseq, k, i, n}.validate();
    const long first = 1 - k;
    return lookup<Poly>({Family::vanderlaan_kseq, k, i}, first, n,
                        [k, i, first](const std::deque<Poly>& seq, long m) {
                            if (m <= 0) return Poly::constant(arity_of(k), i - m == k ? 1 : 0);
                            Poly sum(arity_of(k));
                            for (long j = 2; j <= k; ++j) sum += t(k, j) * seq[m - j - first];
                            return sum;
                        });
}

const ScaledPoly& SequenceGenerator::perrin_kseq(int k, int i, long n) {
    SeqSpec{Family::perrin_kseq, k, i, n}.validate();
    const long first = 1 - k;
    return lookup<ScaledPoly>(
        {Family::perrin_kseq, k, i}, first, n, [k, i, first](const std::deque<ScaledPoly>& seq, long m) {
            if (m <= 0) {
                // The boundary window is column i of R_(k); row k + m holds index m.
                return perrin_base(k)(static_cast<std::size_t>(k + m), static_cast<std::size_t>(i));
            }
            ScaledPoly sum(arity_of(k));
            for (long j = 2; j <= k; ++j) sum += ScaledPoly(t(k, j)) * seq[m - j - first];
            if (!sum.is_poly()) {
                throw Error("pole", "perrin k-sequence term kept a denominator: " + sum.to_string());
            }
            return sum;
        });
}

SequenceGenerator& default_generator() {
    static SequenceGenerator generator;
    return generator;
}

Poly fib_poly(int k, long n) { return default_generator().fibonacci(k, n); }
Poly lucas_poly(int k, long n) { return default_generator().lucas(k, n); }
Poly vdl_poly(int k, long n) { return default_generator().vanderlaan(k, n); }
Poly perrin_poly(int k, long n) { return default_generator().perrin(k, n); }
Poly vdl_kseq_poly(int k, int i, long n) { return default_generator().vanderlaan_kseq(k, i, n); }
ScaledPoly perrin_kseq_poly(int k, int i, long n) { return default_generator().perrin_kseq(k, i, n); }

ScaledPoly sequence_term(const SeqSpec& spec) {
    spec.validate();
    auto& gen = default_generator();
    switch (spec.family) {
    case Family::fibonacci: return gen.fibonacci(spec.k, spec.n);
    case Family::lucas: return gen.lucas(spec.k, spec.n);
    case Family::vanderlaan: return gen.vanderlaan(spec.k, spec.n);
    case Family::perrin: return gen.perrin(spec.k, spec.n);
    case Family::vanderlaan_kseq: return gen.vanderlaan_kseq(spec.k, spec.i, spec.n);
    case Family::perrin_kseq: return gen.perrin_kseq(spec.k, spec.i, spec.n);
    }
    throw Error("family", "unknown family");
}

} // namespace kseq

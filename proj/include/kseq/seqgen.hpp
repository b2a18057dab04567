#pragma once

// Polynomial sequence families over t = (t_1, ..., t_k):
//   fibonacci  F_{k,n}   F_{k,n<0} = 0, F_{k,0} = 1, F_{k,1} = t_1
//   lucas      G_{k,n}   power sums of the roots of x^k - t_1 x^{k-1} - ... - t_k
//   vanderlaan V_{k,n}   t_1 = 0 family, V_0 = 0, V_1 = 1, V_2 = 0
//   perrin     R_{k,n}   t_1 = 0 power sums, R_0 = k
//   vanderlaan_kseq V^i_{k,n} and perrin_kseq R^i_{k,n}: the columns of
//   V_(k)^n and R_(k) V_(k)^n, defined for n >= 1-k.

#include "kseq/poly.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <string_view>
#include <tuple>

namespace kseq {

enum class Family { fibonacci, lucas, vanderlaan, perrin, vanderlaan_kseq, perrin_kseq };

std::string_view family_name(Family f);

struct SeqSpec {
    Family family;
    int k;
    int i = 0; // k-sequence families only
    long n = 0;

    // Throws Error("order") / Error("index") / Error("range") when the record
    // does not identify a defined term.
    void validate() const;
};

// Memoizing generator. Every accessor is safe to call concurrently; returned
// references stay valid for the generator's lifetime.
class SequenceGenerator {
public:
    const Poly& fibonacci(int k, long n);
    const Poly& lucas(int k, long n);
    const Poly& vanderlaan(int k, long n);
    const Poly& perrin(int k, long n);
    const Poly& vanderlaan_kseq(int k, int i, long n);
    const ScaledPoly& perrin_kseq(int k, int i, long n);

private:
    struct Key {
        Family family;
        int k;
        int i;
        auto operator<=>(const Key&) const = default;
    };

    template <class T, class Extend>
    const T& lookup(Key key, long first, long n, Extend&& extend);

    std::recursive_mutex mutex_;
    std::map<Key, std::deque<Poly>> polys_;
    std::map<Key, std::deque<ScaledPoly>> scaled_;
    std::map<int, Poly> zeros_;
};

// Process-wide generator used by the free functions below.
SequenceGenerator& default_generator();

Poly fib_poly(int k, long n);
Poly lucas_poly(int k, long n);
Poly vdl_poly(int k, long n);
Poly perrin_poly(int k, long n);
Poly vdl_kseq_poly(int k, int i, long n);
ScaledPoly perrin_kseq_poly(int k, int i, long n);

// Any family through one entry point; polynomial results are returned as
// ScaledPoly with d = 0.
ScaledPoly sequence_term(const SeqSpec& spec);

} // namespace kseq

#pragma once

// Integer specializations at t_2 = ... = t_k = 1 (t_1 = 0).
//
// Index conventions: gokv follows its own boundary (v_{k,-1} = 1,
// v_{k,0} = 0), which places it two steps behind the polynomial family:
// v_{k,n} = V_{k,n+2}(1, ..., 1), and v^k_{k,n} = v_{k,n-1}.

#include "kseq/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kseq {

class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim);
    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    // 1-based access.
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[(r - 1) * dim_ + c - 1]; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[(r - 1) * dim_ + c - 1]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    Integer det() const;
    std::string to_string() const;

private:
    std::size_t dim_;
    std::vector<Integer> entries_;
};

enum class NumFamily { gokv, kso_kv, gokr, kso_kr };

std::string_view num_family_name(NumFamily f);

// Values of one integer sequence, stored contiguously from index 1-k.
struct IntSeqTable {
    NumFamily family;
    int k;
    int i;
    long first;
    std::vector<Integer> values;

    long last() const { return first + static_cast<long>(values.size()) - 1; }
    const Integer& at(long n) const;
};

IntSeqTable make_table(NumFamily family, int k, int i, long last);

Integer gokv(int k, long n);
Integer kso_kv(int k, int i, long n);
Integer gokr(int k, long n);
Integer kso_kr(int k, int i, long n);

// The all-ones evaluation of the polynomial Van der Laan family, V_{k,n}(1).
Integer vdl_at_ones(int k, long n);

// A_1: superdiagonal identity, bottom row (1, ..., 1, 0).
IntMatrix a1_matrix(int k);
IntMatrix int_power(const IntMatrix& m, unsigned long n);
// A_1^n; entry (r, i) is v^i_{k, n-k+r}.
IntMatrix fast_window(int k, long n);
// R_(k) at all-ones; row k + n holds the boundary values r^i_{k,n}.
IntMatrix perrin_base_ones(int k);

// Matrix-power evaluation of single terms, O(log n) multiplications.
Integer kso_kv_fast(int k, int i, long n);
Integer kso_kr_fast(int k, int i, long n);
Integer gokv_fast(int k, long n);
Integer gokr_fast(int k, long n);

enum class Classic { padovan, vanderlaan, perrin };

// Order-3 classics with starts 1,1,1 / 1,0,1 / 0,2,3, indexed from 1.
Integer classic(Classic name, long n);

} // namespace kseq

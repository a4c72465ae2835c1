#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gdet {

namespace detail {

template <class Int>
inline void exact_div_assign(Int& num, const Int& den) {
    num /= den;  // callers guarantee divisibility
}

inline void exact_div_assign(mpz_class& num, const mpz_class& den) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination. Every intermediate entry is an exact
/// minor of the input, so the division on each step is exact; nothing is ever
/// rounded. Destroys `a` (row-major n*n).
template <class Int>
Int bareiss_determinant(std::vector<Int>& a, int n) {
    if (n == 0) return Int(1);
    auto at = [&](int i, int j) -> Int& { return a[std::size_t(i) * n + j]; };

    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return Int(0);
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                detail::exact_div_assign(t, prev);
                at(i, j) = std::move(t);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Int det = at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

/// Soundness gate for running Bareiss in signed 128-bit arithmetic on an n*n
/// matrix with entries bounded by `bound` in absolute value. Intermediates are
/// minors, so by Hadamard |minor of size k| <= (sqrt(k)*bound)^k; the largest
/// product formed is a square of a size-(n-1) minor. Requires a bit of margin
/// below the 127 usable bits.
inline bool bareiss_fits_int128(int n, int64_t bound) {
    if (bound <= 0) bound = 1;
    const double b = double(bound);
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
        double minor_bits = k * std::log2(std::sqrt(double(k)) * b);
        double need = (k < n) ? 2 * minor_bits : minor_bits;
        if (need > worst) worst = need;
    }
    return worst < 126.0;
}

}  // namespace gdet

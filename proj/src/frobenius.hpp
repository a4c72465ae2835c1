#pragma once

#include <array>
#include <utility>

#include <gmpxx.h>

#include "group.hpp"

namespace gdet {

/**
 * The 16 integers defining F(X,Y,Z) = f(Z) + g(Z)X + h(Z)Y + t(Z)XY over
 * sg16_13: a holds the coefficients of the cubic f, b of g, c of h, d of t.
 * Bijective with GroupRingElement via the canonical element ordering
 * (coefficient of Z^i is a_i, of Z^i X is b_i, of Z^i Y is c_i, of Z^i XY is d_i).
 */
struct CoefficientTuple {
    std::array<mpz_class, 4> a{}, b{}, c{}, d{};

    // Flat order used by the CLI and the C ABI: a0..a3, b0..b3, c0..c3, d0..d3.
    static CoefficientTuple from_flat(const std::array<mpz_class, 16>& v);
    std::array<mpz_class, 16> to_flat() const;

    bool operator==(const CoefficientTuple&) const = default;
};

struct GaussianInt {
    mpz_class re, im;

    GaussianInt() = default;
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt conj() const { return {re, -im}; }
    bool operator==(const GaussianInt&) const = default;
};

/**
 * Values F(x,y,z) over the eight sign points, in the fixed order
 * (1,1,1), (-1,1,1), (1,-1,1), (-1,-1,1), (1,1,-1), (-1,1,-1), (1,-1,-1), (-1,-1,-1).
 * These are the eight degree-1 character images; their product is M.
 */
struct SignPointTable {
    static constexpr std::array<std::array<int, 3>, 8> points = {{
        {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1},
        {1, 1, -1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1},
    }};
    std::array<mpz_class, 8> value{};
};

/// The factored determinant D_G(F) = M * A^2 with A = U^2 + V^2.
struct FactoredDeterminant {
    mpz_class M, U, V, A, value;
};

enum class Rep2 { rho1, rho2 };  // lambda = +i resp. -i

/// One of the two degree-2 representation images sum a_g rho(g).
struct Rep2Matrix {
    GaussianInt e00, e01, e10, e11;
    int lambda_im = 1;  // +1 for rho1, -1 for rho2

    GaussianInt det() const { return e00 * e11 - e01 * e10; }
};

CoefficientTuple tuple_from_element(const GroupRingElement& u);
GroupRingElement element_from_tuple(const CoefficientTuple& t);

SignPointTable sign_point_values(const CoefficientTuple& t);

/// Product of the eight sign-point values; equals the (Z2)^3 determinant of
/// the folded coefficient sums.
mpz_class char_product_M(const CoefficientTuple& t);

/// Evaluates c0 + c1*w + c2*w^2 + c3*w^3 at w = sign*i, exactly.
GaussianInt gaussian_eval(const std::array<mpz_class, 4>& cubic, int sign);

/// U = f(i)f(-i) - g(i)g(-i) - h(i)h(-i) + t(i)t(-i),
/// V = f(i)h(-i) + f(-i)h(i) - g(i)t(-i) - g(-i)t(i).
/// Both are provably real; a nonzero imaginary part aborts (internal_error).
std::pair<mpz_class, mpz_class> compute_UV(const CoefficientTuple& t);

FactoredDeterminant factored_determinant(const CoefficientTuple& t);

/// Materializes sum a_g rho(g) from the explicit generator matrices
/// rho(Z) = [[i,0],[0,-i]], rho(X) = [[0,1],[1,0]], rho1(Y) = iI, rho2(Y) = -iI.
Rep2Matrix rep2_matrix(const CoefficientTuple& t, Rep2 which);

/// det(sum a_g rho(g)); equals U + lambda*V.
GaussianInt rep2_det(const CoefficientTuple& t, Rep2 which);

// ---------------------------------------------------------------------------
// Hot-loop evaluation for searches. One templated route shared by the
// fixed-width and arbitrary-precision instantiations; the readable gaussian
// route above is the reference the tests compare against.

template <class Int>
struct FactoredParts {
    Int M, U, V, A, value;
};

/// c points at 16 coefficients in flat order a0..a3,b0..b3,c0..c3,d0..d3.
/// Sign points are formed by a two-level butterfly over the shared sums
/// f(z)+-h(z), g(z)+-t(z); U and V use the expanded real forms.
template <class Int>
FactoredParts<Int> factored_eval(const Int* c) {
    const Int* a = c;
    const Int* b = c + 4;
    const Int* cc = c + 8;
    const Int* d = c + 12;

    Int fs = a[0] + a[1] + a[2] + a[3], fa = a[0] - a[1] + a[2] - a[3];
    Int gs = b[0] + b[1] + b[2] + b[3], ga = b[0] - b[1] + b[2] - b[3];
    Int hs = cc[0] + cc[1] + cc[2] + cc[3], ha = cc[0] - cc[1] + cc[2] - cc[3];
    Int ts = d[0] + d[1] + d[2] + d[3], ta = d[0] - d[1] + d[2] - d[3];

    Int u1 = fs + hs, v1 = gs + ts, w1 = fs - hs, x1 = gs - ts;
    Int u2 = fa + ha, v2 = ga + ta, w2 = fa - ha, x2 = ga - ta;

    Int m = (u1 + v1) * (u1 - v1) * (w1 + x1) * (w1 - x1) *
            (u2 + v2) * (u2 - v2) * (w2 + x2) * (w2 - x2);

    Int ar = a[0] - a[2], ai = a[1] - a[3];
    Int br = b[0] - b[2], bi = b[1] - b[3];
    Int cr = cc[0] - cc[2], ci = cc[1] - cc[3];
    Int dr = d[0] - d[2], di = d[1] - d[3];

    Int U = ar * ar + ai * ai - br * br - bi * bi - cr * cr - ci * ci + dr * dr + di * di;
    Int V = 2 * (cr * ar + ci * ai - br * dr - bi * di);
    Int A = U * U + V * V;
    return {m, U, V, A, m * A * A};
}

/**
 * Largest per-coefficient bound proven safe for factored_eval over int128.
 * With |coeff| <= B: every sign point is at most 16B, so |M| <= (16B)^8;
 * |U| <= 16B^2 and |V| <= 32B^2 give A <= 1280 B^4; hence
 * |M*A^2| <= 2^52.7 * B^16, which stays below 2^126 for B <= 24 (and every
 * intermediate is smaller). Boxes beyond this must take the mpz route.
 */
inline constexpr int64_t kFactoredI128CoeffBound = 24;

}  // namespace gdet

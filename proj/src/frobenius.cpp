#include "frobenius.hpp"

#include <stdexcept>

#include "util.hpp"

namespace gdet {

CoefficientTuple CoefficientTuple::from_flat(const std::array<mpz_class, 16>& v) {
    CoefficientTuple t;
    for (int i = 0; i < 4; ++i) {
        t.a[i] = v[i];
        t.b[i] = v[4 + i];
        t.c[i] = v[8 + i];
        t.d[i] = v[12 + i];
    }
    return t;
}

std::array<mpz_class, 16> CoefficientTuple::to_flat() const {
    std::array<mpz_class, 16> v;
    for (int i = 0; i < 4; ++i) {
        v[i] = a[i];
        v[4 + i] = b[i];
        v[8 + i] = c[i];
        v[12 + i] = d[i];
    }
    return v;
}

// Element indices under the canonical sg16_13 ordering (index = a + 4b + 8c for
// Z^a Y^b X^c): Z^i at i, Z^i Y at 4+i, Z^i X at 8+i, Z^i XY at 12+i.
CoefficientTuple tuple_from_element(const GroupRingElement& u) {
    if (u.group == nullptr || u.group->id != GroupId::sg16_13)
        throw std::invalid_argument("tuple_from_element: element is not over sg16_13");
    CoefficientTuple t;
    for (int i = 0; i < 4; ++i) {
        t.a[i] = u.coeffs[i];
        t.c[i] = u.coeffs[4 + i];
        t.b[i] = u.coeffs[8 + i];
        t.d[i] = u.coeffs[12 + i];
    }
    return t;
}

GroupRingElement element_from_tuple(const CoefficientTuple& t) {
    auto u = make_element(build_group(GroupId::sg16_13));
    for (int i = 0; i < 4; ++i) {
        u.coeffs[i] = t.a[i];
        u.coeffs[4 + i] = t.c[i];
        u.coeffs[8 + i] = t.b[i];
        u.coeffs[12 + i] = t.d[i];
    }
    return u;
}

namespace {

mpz_class eval_pm1(const std::array<mpz_class, 4>& cubic, int z) {
    if (z > 0) return cubic[0] + cubic[1] + cubic[2] + cubic[3];
    return cubic[0] - cubic[1] + cubic[2] - cubic[3];
}

}  // namespace

SignPointTable sign_point_values(const CoefficientTuple& t) {
    SignPointTable s;
    for (int p = 0; p < 8; ++p) {
        const auto [x, y, z] = SignPointTable::points[p];
        s.value[p] = eval_pm1(t.a, z) + eval_pm1(t.b, z) * x + eval_pm1(t.c, z) * y +
                     eval_pm1(t.d, z) * (x * y);
    }
    return s;
}

mpz_class char_product_M(const CoefficientTuple& t) {
    const auto s = sign_point_values(t);
    mpz_class m = 1;
    for (const auto& v : s.value) m *= v;
    return m;
}

GaussianInt gaussian_eval(const std::array<mpz_class, 4>& cubic, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("gaussian_eval: sign must be +-1");
    const GaussianInt w(0, sign);
    // Horner: ((c3*w + c2)*w + c1)*w + c0.
    GaussianInt acc(cubic[3], 0);
    for (int i = 2; i >= 0; --i) acc = acc * w + GaussianInt(cubic[i], 0);
    return acc;
}

std::pair<mpz_class, mpz_class> compute_UV(const CoefficientTuple& t) {
    const GaussianInt f = gaussian_eval(t.a, 1), fc = gaussian_eval(t.a, -1);
    const GaussianInt g = gaussian_eval(t.b, 1), gc = gaussian_eval(t.b, -1);
    const GaussianInt h = gaussian_eval(t.c, 1), hc = gaussian_eval(t.c, -1);
    const GaussianInt tt = gaussian_eval(t.d, 1), tc = gaussian_eval(t.d, -1);

    const GaussianInt u = f * fc - g * gc - h * hc + tt * tc;
    const GaussianInt v = f * hc + fc * h - g * tc - gc * tt;
    if (u.im != 0 || v.im != 0)
        throw internal_error("compute_UV: U or V has a nonzero imaginary part");
    return {u.re, v.re};
}

FactoredDeterminant factored_determinant(const CoefficientTuple& t) {
    FactoredDeterminant r;
    r.M = char_product_M(t);
    std::tie(r.U, r.V) = compute_UV(t);
    r.A = r.U * r.U + r.V * r.V;
    r.value = r.M * r.A * r.A;
    return r;
}

namespace {

struct Mat2 {
    GaussianInt e00, e01, e10, e11;

    Mat2 operator*(const Mat2& o) const {
        return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
    }
};

const Mat2 kIdentity2 = {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
const Mat2 kRhoZ = {{0, 1}, {0, 0}, {0, 0}, {0, -1}};
const Mat2 kRhoX = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};

Mat2 rho_of_element(int index, Rep2 which) {
    const int za = index & 3;
    const int yb = (index >> 2) & 1;
    const int xc = (index >> 3) & 1;
    const int lam = which == Rep2::rho1 ? 1 : -1;
    const Mat2 rho_y = {{0, lam}, {0, 0}, {0, 0}, {0, lam}};

    Mat2 m = kIdentity2;
    for (int i = 0; i < za; ++i) m = m * kRhoZ;
    if (yb) m = m * rho_y;
    if (xc) m = m * kRhoX;
    return m;
}

}  // namespace

Rep2Matrix rep2_matrix(const CoefficientTuple& t, Rep2 which) {
    const auto u = element_from_tuple(t);
    Mat2 acc = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
    for (int g = 0; g < 16; ++g) {
        if (u.coeffs[g] == 0) continue;
        const Mat2 rho = rho_of_element(g, which);
        const GaussianInt scale(u.coeffs[g], 0);
        acc.e00 = acc.e00 + scale * rho.e00;
        acc.e01 = acc.e01 + scale * rho.e01;
        acc.e10 = acc.e10 + scale * rho.e10;
        acc.e11 = acc.e11 + scale * rho.e11;
    }
    return Rep2Matrix{acc.e00, acc.e01, acc.e10, acc.e11, which == Rep2::rho1 ? 1 : -1};
}

GaussianInt rep2_det(const CoefficientTuple& t, Rep2 which) {
    return rep2_matrix(t, which).det();
}

}  // namespace gdet

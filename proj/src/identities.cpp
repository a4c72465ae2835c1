#include "identities.hpp"

#include <stdexcept>

#include "util.hpp"

namespace gdet {

GreekVector greek_vector(const CoefficientTuple& t) {
    return {t.a[0] + t.a[2], t.a[1] + t.a[3], t.b[0] + t.b[2], t.b[1] + t.b[3],
            t.c[0] + t.c[2], t.c[1] + t.c[3], t.d[0] + t.d[2], t.d[1] + t.d[3]};
}

EllQuadruple ell_values(const CoefficientTuple& t) {
    const auto s = sign_point_values(t);
    return {s.value[0] * s.value[0] + s.value[1] * s.value[1],
            s.value[2] * s.value[2] + s.value[3] * s.value[3],
            s.value[4] * s.value[4] + s.value[5] * s.value[5],
            s.value[6] * s.value[6] + s.value[7] * s.value[7]};
}

EmQuadruple em_values(const CoefficientTuple& t) {
    const auto s = sign_point_values(t);
    return {s.value[0] * s.value[1], s.value[2] * s.value[3], s.value[4] * s.value[5],
            s.value[6] * s.value[7]};
}

AuxSums aux_sums(const GreekVector& g) {
    AuxSums s;
    s.U1 = g.alpha1 * g.alpha1 + g.alpha2 * g.alpha2 - g.beta1 * g.beta1 - g.beta2 * g.beta2 -
           g.gamma1 * g.gamma1 - g.gamma2 * g.gamma2 + g.delta1 * g.delta1 + g.delta2 * g.delta2;
    s.U2 = g.alpha1 * g.alpha1 + g.alpha2 * g.alpha2 + g.beta1 * g.beta1 + g.beta2 * g.beta2 +
           g.gamma1 * g.gamma1 + g.gamma2 * g.gamma2 + g.delta1 * g.delta1 + g.delta2 * g.delta2;
    s.V1 = g.alpha1 * g.gamma1 + g.alpha2 * g.gamma2 + g.beta1 * g.delta1 + g.beta2 * g.delta2;
    return s;
}

namespace detail {

// One templated engine for both the per-tuple mpz report and the fixed-width
// bulk runner, so the two paths cannot drift apart.
template <class Int>
struct IdentityEngine {
    // flat input a0..a3, b0..b3, c0..c3, d0..d3
    std::array<Int, 8> p;              // sign points in the fixed order
    std::array<Int, 4> S, T;           // S_i = alpha/gamma combo, T_i = beta/delta combo
    Int a1, a2, b1, b2, g1, g2, d1, d2;  // greek sums
    Int U, V, U1, U2, V1, M;
    std::array<Int, 4> ell, em;

    explicit IdentityEngine(const std::array<Int, 16>& c) {
        const Int* a = c.data();
        const Int* b = c.data() + 4;
        const Int* cc = c.data() + 8;
        const Int* d = c.data() + 12;

        Int fs = a[0] + a[1] + a[2] + a[3], fa = a[0] - a[1] + a[2] - a[3];
        Int gs = b[0] + b[1] + b[2] + b[3], ga = b[0] - b[1] + b[2] - b[3];
        Int hs = cc[0] + cc[1] + cc[2] + cc[3], ha = cc[0] - cc[1] + cc[2] - cc[3];
        Int ts = d[0] + d[1] + d[2] + d[3], ta = d[0] - d[1] + d[2] - d[3];
        p = {fs + gs + hs + ts, fs - gs + hs - ts, fs + gs - hs - ts, fs - gs - hs + ts,
             fa + ga + ha + ta, fa - ga + ha - ta, fa + ga - ha - ta, fa - ga - ha + ta};

        a1 = a[0] + a[2]; a2 = a[1] + a[3];
        b1 = b[0] + b[2]; b2 = b[1] + b[3];
        g1 = cc[0] + cc[2]; g2 = cc[1] + cc[3];
        d1 = d[0] + d[2]; d2 = d[1] + d[3];

        S = {a1 + a2 + g1 + g2, a1 + a2 - g1 - g2, a1 - a2 + g1 - g2, a1 - a2 - g1 + g2};
        T = {b1 + b2 + d1 + d2, b1 + b2 - d1 - d2, b1 - b2 + d1 - d2, b1 - b2 - d1 + d2};

        Int ar = a[0] - a[2], ai = a[1] - a[3];
        Int br = b[0] - b[2], bi = b[1] - b[3];
        Int cr = cc[0] - cc[2], ci = cc[1] - cc[3];
        Int dr = d[0] - d[2], di = d[1] - d[3];
        U = ar * ar + ai * ai - br * br - bi * bi - cr * cr - ci * ci + dr * dr + di * di;
        V = 2 * (cr * ar + ci * ai - br * dr - bi * di);

        U1 = a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2 - g1 * g1 - g2 * g2 + d1 * d1 + d2 * d2;
        U2 = a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2 + g1 * g1 + g2 * g2 + d1 * d1 + d2 * d2;
        V1 = a1 * g1 + a2 * g2 + b1 * d1 + b2 * d2;

        for (int i = 0; i < 4; ++i) {
            ell[i] = p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1];
            em[i] = p[2 * i] * p[2 * i + 1];
        }
        M = em[0] * em[1] * em[2] * em[3];
    }

    static bool divisible(const Int& x, long d) { return x % d == 0; }

    bool id1() const {
        for (int i = 0; i < 4; ++i)
            if (ell[i] != 2 * S[i] * S[i] + 2 * T[i] * T[i]) return false;
        return true;
    }
    bool id2() const {
        const Int lhs13 = ell[0] + ell[2];
        const Int rhs13 = 4 * ((a1 + g1) * (a1 + g1) + (a2 + g2) * (a2 + g2) +
                               (b1 + d1) * (b1 + d1) + (b2 + d2) * (b2 + d2));
        const Int lhs24 = ell[1] + ell[3];
        const Int rhs24 = 4 * ((a1 - g1) * (a1 - g1) + (a2 - g2) * (a2 - g2) +
                               (b1 - d1) * (b1 - d1) + (b2 - d2) * (b2 - d2));
        return lhs13 == rhs13 && lhs24 == rhs24;
    }
    bool id3() const { return ell[0] + ell[1] + ell[2] + ell[3] == 8 * U2; }
    bool id4() const { return ell[0] + ell[2] - ell[1] - ell[3] == 16 * V1; }
    bool id5() const {
        for (int i = 0; i < 4; ++i)
            if (em[i] != S[i] * S[i] - T[i] * T[i]) return false;
        return true;
    }
    bool id6() const { return divisible(U - U1, 4); }
    bool id7() const {
        if (!divisible(V, 2)) return false;
        return divisible(V / 2 - V1, 2);
    }
    bool id8_hypothesis() const {
        for (int i = 0; i < 4; ++i)
            if (!divisible(T[i], 4)) return false;
        return true;
    }
    bool id8() const {
        const Int sum_alpha = a1 * a1 + a2 * a2 + g1 * g1 + g2 * g2;
        const Int sum_beta = b1 * b1 + b2 * b2 + d1 * d1 + d2 * d2;
        // Exact strengthening; the printed mod-16 congruence only under (div).
        if (em[0] + em[1] + em[2] + em[3] != 4 * sum_alpha - 4 * sum_beta) return false;
        if (id8_hypothesis() && !divisible(em[0] + em[1] + em[2] + em[3] - 4 * sum_alpha, 16))
            return false;
        return true;
    }
    bool id9(const Int& char_product) const { return M == char_product; }
};

template <class Int>
int first_failed_identity(const std::array<Int, 16>& c) {
    const IdentityEngine<Int> e(c);
    if (!e.id1()) return 1;
    if (!e.id2()) return 2;
    if (!e.id3()) return 3;
    if (!e.id4()) return 4;
    if (!e.id5()) return 5;
    if (!e.id6()) return 6;
    if (!e.id7()) return 7;
    if (!e.id8()) return 8;
    Int chp = e.p[0];
    for (int i = 1; i < 8; ++i) chp *= e.p[i];
    if (!e.id9(chp)) return 9;
    return 0;
}

}  // namespace detail

namespace {

constexpr std::array<const char*, 9> kIdentityNames = {
    "ell_eq_two_squares",      // (1)
    "ell_pair_sums",           // (2)
    "ell_sum_eq_8U2",          // (3)
    "ell_alt_eq_16V1",         // (4)
    "em_eq_square_difference", // (5)
    "U_cong_U1_mod4",          // (6)
    "V_even_half_cong_V1",     // (7)
    "em_sum_quad",             // (8)
    "M_eq_em_product",         // (9)
};

std::string describe_tuple(const CoefficientTuple& t) {
    std::string s = "(";
    const auto flat = t.to_flat();
    for (int i = 0; i < 16; ++i) {
        if (i) s += ",";
        s += flat[i].get_str();
    }
    return s + ")";
}

}  // namespace

IdentityReport check_identities(const CoefficientTuple& t) {
    std::array<mpz_class, 16> flat = t.to_flat();
    const detail::IdentityEngine<mpz_class> e(flat);
    const mpz_class M = char_product_M(t);

    IdentityReport report;
    report.checks.resize(9);
    const std::array<bool, 9> pass = {e.id1(), e.id2(), e.id3(), e.id4(), e.id5(),
                                      e.id6(), e.id7(), e.id8(), e.id9(M)};
    report.all_pass = true;
    for (int i = 0; i < 9; ++i) {
        auto& c = report.checks[i];
        c.id = i + 1;
        c.name = kIdentityNames[i];
        c.pass = pass[i];
        if (i == 7) c.congruence_applicable = e.id8_hypothesis();
        if (!c.pass) {
            report.all_pass = false;
            c.detail = std::string("failed on tuple ") + describe_tuple(t);
        }
    }
    return report;
}

IdentityTrialsReport run_identity_trials(uint64_t trials, int64_t bound, uint64_t seed) {
    if (bound <= 0) throw std::invalid_argument("run_identity_trials: bound must be positive");
    IdentityTrialsReport rep;
    rep.trials = trials;
    rep.bound = bound;
    rep.seed = seed;

    // All intermediates are dominated by M <= (16*bound)^8; 16*bound < 2^15.7
    // keeps the whole engine inside int128.
    const bool fixed_width = bound <= 3000;
    SplitMix64 rng(seed);
    std::array<int64_t, 16> raw;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        for (auto& v : raw) v = rng.in_range(-bound, bound);
        int failed;
        if (fixed_width) {
            std::array<int128, 16> c;
            for (int i = 0; i < 16; ++i) c[i] = raw[i];
            failed = detail::first_failed_identity(c);
        } else {
            std::array<mpz_class, 16> c;
            for (int i = 0; i < 16; ++i) c[i] = static_cast<long>(raw[i]);
            failed = detail::first_failed_identity(c);
        }
        if (failed != 0) {
            ++rep.failures;
            if (!rep.first_failure_tuple) {
                rep.first_failure_tuple = raw;
                rep.first_failure_name = kIdentityNames[failed - 1];
            }
        }
    }
    return rep;
}

}  // namespace gdet

#include "witnesses.hpp"

#include <stdexcept>

#include "util.hpp"

namespace gdet {

const char* family_name(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::even_2_18: return "even_2_18";
        case WitnessFamily::even_2_17: return "even_2_17";
        case WitnessFamily::even_2_16_plus: return "even_2_16_plus";
        case WitnessFamily::even_2_16_minus: return "even_2_16_minus";
        case WitnessFamily::odd_1mod16: return "odd_1mod16";
        case WitnessFamily::odd_5family: return "odd_5family";
        case WitnessFamily::odd_3family: return "odd_3family";
    }
    return "?";
}

WitnessFamily parse_family(const std::string& name) {
    for (WitnessFamily f :
         {WitnessFamily::even_2_18, WitnessFamily::even_2_17, WitnessFamily::even_2_16_plus,
          WitnessFamily::even_2_16_minus, WitnessFamily::odd_1mod16, WitnessFamily::odd_5family,
          WitnessFamily::odd_3family})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown witness family: '" + name + "'");
}

bool family_takes_k(WitnessFamily f) {
    return f == WitnessFamily::odd_5family || f == WitnessFamily::odd_3family;
}

namespace {

CoefficientTuple make_tuple(std::array<long, 4> a, std::array<long, 4> b, std::array<long, 4> c,
                            std::array<long, 4> d) {
    CoefficientTuple t;
    for (int i = 0; i < 4; ++i) {
        t.a[i] = a[i];
        t.b[i] = b[i];
        t.c[i] = c[i];
        t.d[i] = d[i];
    }
    return t;
}

void add_scaled(CoefficientTuple& t, const CoefficientTuple& w, const mpz_class& s) {
    for (int i = 0; i < 4; ++i) {
        t.a[i] += s * w.a[i];
        t.b[i] += s * w.b[i];
        t.c[i] += s * w.c[i];
        t.d[i] += s * w.d[i];
    }
}

}  // namespace

BasePolynomials base_polynomials() {
    BasePolynomials p;
    p.W = make_tuple({1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1});
    p.W1 = p.W;
    p.W2 = make_tuple({1, 1, 1, 1}, {1, 1, 1, 1}, {-1, -1, -1, -1}, {-1, -1, -1, -1});
    return p;
}

// The seven families of explicit polynomials, expanded exactly as printed;
// m (and k) range over all integers. Adding mW1 or kW2 shifts a single sign
// point by 16m resp. 16k and leaves U, V untouched (W1, W2 evaluate to zero at
// i and -i), so each family's determinant is literally its target formula.
WitnessRecipe witness(WitnessFamily f, const mpz_class& m, const std::optional<mpz_class>& k) {
    if (family_takes_k(f) != k.has_value())
        throw std::invalid_argument(std::string("witness: family ") + family_name(f) +
                                    (family_takes_k(f) ? " requires k" : " does not take k"));
    const BasePolynomials base = base_polynomials();
    WitnessRecipe r;
    r.family = f;
    r.m = m;
    r.k = k;
    switch (f) {
        case WitnessFamily::even_2_18:
            // (1+z+z^2) + (1-z^2-z^3)x - z^3 y - (z+z^2-z^3)xy - mW
            r.tuple = make_tuple({1, 1, 1, 0}, {1, 0, -1, -1}, {0, 0, 0, -1}, {0, -1, -1, 1});
            add_scaled(r.tuple, base.W, -m);
            r.target = mpz_class(1) << 18;
            r.target *= m;
            break;
        case WitnessFamily::even_2_17:
            // (1+z)(1+z^2) + (1+z^2-z^3)x + (1+z)y + xy + mW
            r.tuple = make_tuple({1, 1, 1, 1}, {1, 0, 1, -1}, {1, 1, 0, 0}, {1, 0, 0, 0});
            add_scaled(r.tuple, base.W, m);
            r.target = (mpz_class(1) << 17) * (1 + 2 * m);
            break;
        case WitnessFamily::even_2_16_plus:
            // (1+z)(1+z^2) + (1+z)(1-z^2)x + (1-z^3)y + (1-z)(1-z^2)xy + mW
            r.tuple = make_tuple({1, 1, 1, 1}, {1, 1, -1, -1}, {1, 0, 0, -1}, {1, -1, -1, 1});
            add_scaled(r.tuple, base.W, m);
            r.target = (mpz_class(1) << 16) * (1 + 4 * m);
            break;
        case WitnessFamily::even_2_16_minus:
            // (1+z+z^2) + (1-z^3)x + (1-z^3)y + (1-z^2+z^3)xy - mW
            r.tuple = make_tuple({1, 1, 1, 0}, {1, 0, 0, -1}, {1, 0, 0, -1}, {1, 0, -1, 1});
            add_scaled(r.tuple, base.W, -m);
            r.target = (mpz_class(1) << 16) * (-1 + 4 * m);
            break;
        case WitnessFamily::odd_1mod16:
            // 1 + m(z+1)(z^2+1)(1+x)(1+y)
            r.tuple = make_tuple({1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0});
            add_scaled(r.tuple, base.W, m);
            r.target = 1 + 16 * m;
            break;
        case WitnessFamily::odd_5family:
            // (1+z+z^2) + (1+z)x + (z-z^3)y + (1-z^2)xy + mW1 + kW2
            r.tuple = make_tuple({1, 1, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, -1}, {1, 0, -1, 0});
            add_scaled(r.tuple, base.W1, m);
            add_scaled(r.tuple, base.W2, *k);
            r.target = (5 + 16 * (*k)) * (5 + 16 * m);
            break;
        case WitnessFamily::odd_3family:
            // (1+z) + (1+z-z^3)x + (1-z^2)y - (1-z)(1-z^2)xy + mW1 + kW2
            r.tuple = make_tuple({1, 1, 0, 0}, {1, 1, 0, -1}, {1, 0, -1, 0}, {-1, 1, 1, -1});
            add_scaled(r.tuple, base.W1, m);
            add_scaled(r.tuple, base.W2, *k);
            r.target = (3 + 16 * (*k)) * (3 + 16 * m);
            break;
    }
    const FactoredDeterminant fd = factored_determinant(r.tuple);
    if (fd.value != r.target)
        throw internal_error(std::string("witness: ") + family_name(f) + " tuple evaluates to " +
                             fd.value.get_str() + ", expected " + r.target.get_str());
    return r;
}

WitnessResult witness_for(const mpz_class& n) {
    WitnessResult out;
    out.check = is_achievable(n);
    if (!out.check.achievable) return out;

    if (canonical_mod(n, 2) == 0) {
        // n = 2^16 * t; pick the even family by t mod 4.
        const mpz_class t = n >> 16;
        switch (canonical_mod(t, 4)) {
            case 0: out.recipe = witness(WitnessFamily::even_2_18, t / 4); break;
            case 1: out.recipe = witness(WitnessFamily::even_2_16_plus, (t - 1) / 4); break;
            case 2: out.recipe = witness(WitnessFamily::even_2_17, (t - 2) / 4); break;
            default: out.recipe = witness(WitnessFamily::even_2_16_minus, (t + 1) / 4); break;
        }
        return out;
    }
    if (canonical_mod(n, 16) == 1) {
        out.recipe = witness(WitnessFamily::odd_1mod16, (n - 1) / 16);
        return out;
    }
    // n = 9 mod 16 with a flex prime: a factor pair always exists.
    const auto pair = factor_pair_search(n);
    if (!pair)
        throw internal_error("witness_for: flex prime present but no factor pair for " +
                             n.get_str());
    const auto& [d, e] = *pair;
    const unsigned r = canonical_mod(d, 16);
    const WitnessFamily fam =
        r == 3 ? WitnessFamily::odd_3family : WitnessFamily::odd_5family;
    const mpz_class k = (d - r) / 16;
    const mpz_class m = (e - r) / 16;
    out.recipe = witness(fam, m, k);
    return out;
}

}  // namespace gdet

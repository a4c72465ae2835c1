#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "group.hpp"
#include "matrix.hpp"
#include "util.hpp"

using namespace gdet;

namespace {

// Canonical sg16_13 indices: Z^a Y^b X^c at a + 4b + 8c.
constexpr int kZ = 1, kZ2 = 2, kY = 4, kX = 8;

GroupRingElement random_element(const GroupSpec& g, SplitMix64& rng, int64_t bound) {
    auto u = make_element(g);
    for (auto& c : u.coeffs) c = static_cast<long>(rng.in_range(-bound, bound));
    return u;
}

}  // namespace

TEST_CASE("build_group constructs the three validated groups") {
    CHECK(build_group(GroupId::sg16_13).order == 16);
    CHECK(build_group(GroupId::z2xd8).order == 16);
    CHECK(build_group(GroupId::z2cubed).order == 8);
    CHECK(parse_group_id("sg16_13") == GroupId::sg16_13);
    CHECK_THROWS_AS(parse_group_id("sg16_14"), std::invalid_argument);
}

TEST_CASE("sg16_13 presentation relations") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    CHECK(g.identity == 0);
    CHECK(g.multiply(kY, kY) == kZ2);        // Y^2 = Z^2
    CHECK(g.multiply(kX, kZ) == 3 + kX);     // XZ = Z^-1 X = Z^3 X
    CHECK(g.multiply(kX, kX) == 0);          // X^2 = 1
    CHECK(g.multiply(kZ, kY) == g.multiply(kY, kZ));  // Y central
    CHECK(g.multiply(0, kX) == kX);
    // Z has order 4.
    int p = kZ;
    for (int i = 0; i < 3; ++i) p = g.multiply(p, kZ);
    CHECK(p == 0);
    CHECK_THROWS_AS(g.multiply(0, 16), std::invalid_argument);
    CHECK_THROWS_AS(g.multiply(-1, 0), std::invalid_argument);
}

TEST_CASE("z2xd8 presentation relations") {
    const GroupSpec& g = build_group(GroupId::z2xd8);
    const int r = 1, s = 4, t = 8;
    CHECK(g.multiply(s, r) == g.multiply(3, s));  // s r = r^3 s
    CHECK(g.multiply(s, s) == 0);
    CHECK(g.multiply(t, t) == 0);
    CHECK(g.multiply(t, r) == g.multiply(r, t));  // t central
}

TEST_CASE("convolve matches the group ring product") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    SplitMix64 rng(11);
    const auto v = random_element(g, rng, 5);
    CHECK(convolve(delta(g, 0), v).coeffs == v.coeffs);
    CHECK(convolve(delta(g, kZ), delta(g, kZ)).coeffs == delta(g, kZ2).coeffs);

    const GroupSpec& other = build_group(GroupId::z2cubed);
    CHECK_THROWS_AS(convolve(delta(g, 0), delta(other, 0)), std::invalid_argument);
}

TEST_CASE("cayley_matrix layout") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    const auto id_matrix = cayley_matrix(delta(g, 0));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            CHECK(id_matrix.entries[std::size_t(i) * 16 + j] == (i == j ? 1 : 0));

    // Each row is a permutation of the coefficients.
    SplitMix64 rng(17);
    auto u = make_element(g);
    for (int i = 0; i < 16; ++i) u.coeffs[i] = i * i + 1;
    const auto m = cayley_matrix(u);
    std::vector<mpz_class> expect(u.coeffs);
    std::sort(expect.begin(), expect.end());
    for (int row = 0; row < 16; ++row) {
        std::vector<mpz_class> got(m.entries.begin() + row * 16, m.entries.begin() + row * 16 + 16);
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
}

TEST_CASE("determinant_exact on fixed matrices") {
    IntegerMatrix ident;
    ident.n = 5;
    ident.entries.assign(25, 0);
    for (int i = 0; i < 5; ++i) ident.entries[i * 5 + i] = 1;
    CHECK(determinant_exact(ident) == 1);

    IntegerMatrix two;
    two.n = 2;
    two.entries = {mpz_class(3), mpz_class(7), mpz_class(-2), mpz_class(5)};
    CHECK(determinant_exact(two) == 3 * 5 - 7 * (-2));

    // Singular with a zero leading pivot exercises the row-swap path.
    IntegerMatrix swap;
    swap.n = 3;
    swap.entries = {mpz_class(0), mpz_class(1), mpz_class(2),
                    mpz_class(1), mpz_class(0), mpz_class(1),
                    mpz_class(3), mpz_class(1), mpz_class(5)};
    CHECK(determinant_exact(swap) == mpz_class(0) * 0 - 1 * (5 - 3) + 2 * (1 - 0));
}

TEST_CASE("group determinant examples") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    CHECK(group_determinant(delta(g, 0)) == 1);
    // delta_Z: permutation of four 4-cycles, sign +1.
    CHECK(group_determinant(delta(g, kZ)) == 1);

    auto ones = make_element(g);
    for (auto& c : ones.coeffs) c = 1;
    CHECK(group_determinant(ones) == 0);

    // a_e = m+1, a_g = m gives 1 + m|G|; the 16x16 witness for 17 at m=1.
    auto w = make_element(g);
    for (auto& c : w.coeffs) c = 1;
    w.coeffs[0] = 2;
    CHECK(group_determinant(w) == 17);
}

TEST_CASE("determinant is multiplicative over the group ring") {
    for (GroupId id : {GroupId::sg16_13, GroupId::z2xd8}) {
        const GroupSpec& g = build_group(id);
        SplitMix64 rng(id == GroupId::sg16_13 ? 101 : 202);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto u = random_element(g, rng, 3);
            const auto v = random_element(g, rng, 3);
            CHECK(group_determinant(convolve(u, v)) ==
                  group_determinant(u) * group_determinant(v));
        }
    }
}

TEST_CASE("translation leaves the determinant magnitude unchanged") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    SplitMix64 rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const auto u = random_element(g, rng, 4);
        const mpz_class base = abs(group_determinant(u));
        for (int e = 0; e < 16; ++e)
            CHECK(abs(group_determinant(convolve(delta(g, e), u))) == base);
    }
}

TEST_CASE("determinant is invariant under relabeling the elements") {
    const GroupSpec& g = build_group(GroupId::sg16_13);
    SplitMix64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const auto u = random_element(g, rng, 6);
        const auto m = cayley_matrix(u);
        std::vector<int> perm(16);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 15; i > 0; --i) std::swap(perm[i], perm[rng.below(uint64_t(i) + 1)]);
        IntegerMatrix pm;
        pm.n = 16;
        pm.entries.resize(256);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                pm.entries[std::size_t(i) * 16 + j] =
                    m.entries[std::size_t(perm[i]) * 16 + perm[j]];
        CHECK(determinant_exact(pm) == determinant_exact(m));
    }
}

TEST_CASE("bareiss over int128 agrees with the mpz route inside its bound") {
    const GroupSpec& g = build_group(GroupId::z2xd8);
    REQUIRE(bareiss_fits_int128(16, 3));
    CHECK_FALSE(bareiss_fits_int128(16, 30));
    SplitMix64 rng(505);
    for (int trial = 0; trial < 200; ++trial) {
        auto u = make_element(g);
        std::vector<int128> fast(256);
        for (int i = 0; i < 16; ++i) u.coeffs[i] = static_cast<long>(rng.in_range(-3, 3));
        for (int i = 0; i < 256; ++i)
            fast[i] = int128(u.coeffs[g.cayley_index[i]].get_si());
        const mpz_class expect = group_determinant(u);
        CHECK(mpz_from_i128(bareiss_determinant(fast, 16)) == expect);
    }
}

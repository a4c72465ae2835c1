#include "group.hpp"

#include <stdexcept>

#include "matrix.hpp"
#include "util.hpp"

namespace gdet {

GroupId parse_group_id(const std::string& name) {
    if (name == "sg16_13") return GroupId::sg16_13;
    if (name == "z2xd8") return GroupId::z2xd8;
    if (name == "z2cubed") return GroupId::z2cubed;
    throw std::invalid_argument("unknown group id: '" + name +
                                "' (expected sg16_13, z2xd8 or z2cubed)");
}

const char* group_id_name(GroupId id) {
    switch (id) {
        case GroupId::sg16_13: return "sg16_13";
        case GroupId::z2xd8: return "z2xd8";
        case GroupId::z2cubed: return "z2cubed";
    }
    return "?";
}

int GroupSpec::multiply(int g, int h) const {
    if (g < 0 || g >= order || h < 0 || h >= order)
        throw std::invalid_argument("element index out of range");
    return mul[std::size_t(g) * order + h];
}

int GroupSpec::inverse(int g) const {
    if (g < 0 || g >= order) throw std::invalid_argument("element index out of range");
    return inv[g];
}

namespace {

// Exhaustive verification of the GroupSpec invariants. Cheap for order <= 16
// and run once per process at construction.
void validate(const GroupSpec& g) {
    const int n = g.order;
    if (n <= 0 || int(g.labels.size()) != n || int(g.mul.size()) != n * n)
        throw internal_error("malformed group tables");

    // Latin square: each row and column is a permutation of 0..n-1.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (int j = 0; j < n; ++j) {
            int r = g.mul[std::size_t(i) * n + j];
            int c = g.mul[std::size_t(j) * n + i];
            if (r < 0 || r >= n || c < 0 || c >= n || row[r] || col[c])
                throw internal_error("multiplication table is not a Latin square");
            row[r] = col[c] = true;
        }
    }
    // Associativity over all order^3 triples.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[std::size_t(g.mul[std::size_t(a) * n + b]) * n + c] !=
                    g.mul[std::size_t(a) * n + g.mul[std::size_t(b) * n + c]])
                    throw internal_error("multiplication table is not associative");
    // Identity and inverses.
    for (int a = 0; a < n; ++a) {
        if (g.mul[std::size_t(g.identity) * n + a] != a ||
            g.mul[std::size_t(a) * n + g.identity] != a)
            throw internal_error("identity element misbehaves");
        if (g.mul[std::size_t(a) * n + g.inv[a]] != g.identity ||
            g.mul[std::size_t(g.inv[a]) * n + a] != g.identity)
            throw internal_error("inverse table is wrong");
    }
}

void finalize(GroupSpec& g) {
    const int n = g.order;
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[std::size_t(a) * n + b] == g.identity) {
                g.inv[a] = b;
                break;
            }
    validate(g);
    g.cayley_index.assign(std::size_t(n) * n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            g.cayley_index[std::size_t(r) * n + c] = g.mul[std::size_t(r) * n + g.inv[c]];
}

// SmallGroup(16,13) = <X,Y,Z | Z^4=X^2=1, Z^2=Y^2, XZ=Z^-1 X, Y central>.
// Normal form Z^a Y^b X^c with a in 0..3, b,c in 0..1; index = a + 4b + 8c.
GroupSpec make_sg16_13() {
    GroupSpec g;
    g.id = GroupId::sg16_13;
    g.order = 16;
    g.identity = 0;
    g.labels.resize(16);
    for (int c = 0; c < 2; ++c)
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 4; ++a) {
                std::string s;
                if (a == 1) s += "Z";
                if (a > 1) s += "Z" + std::to_string(a);
                if (b) s += "Y";
                if (c) s += "X";
                if (s.empty()) s = "e";
                g.labels[a + 4 * b + 8 * c] = s;
            }
    g.mul.resize(16 * 16);
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int a2 = 0; a2 < 4; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            // Z^a1 Y^b1 X^c1 * Z^a2 Y^b2 X^c2:
                            // X conjugates Z to Z^-1, Y is central, Y^2 = Z^2, X^2 = 1.
                            int a = a1 + (c1 ? (4 - a2) % 4 : a2);
                            int b = b1 + b2;
                            if (b >= 2) {
                                b -= 2;
                                a += 2;
                            }
                            a %= 4;
                            int c = (c1 + c2) % 2;
                            int lhs = a1 + 4 * b1 + 8 * c1;
                            int rhs = a2 + 4 * b2 + 8 * c2;
                            g.mul[std::size_t(lhs) * 16 + rhs] = a + 4 * b + 8 * c;
                        }
    finalize(g);
    return g;
}

// Z2 x D8 with D8 = <r,s | r^4 = s^2 = 1, s r = r^-1 s>.
// Elements t^b r^a s^c; index = a + 4c + 8b.
GroupSpec make_z2xd8() {
    GroupSpec g;
    g.id = GroupId::z2xd8;
    g.order = 16;
    g.identity = 0;
    g.labels.resize(16);
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
            for (int a = 0; a < 4; ++a) {
                std::string s;
                if (b) s += "t";
                if (a == 1) s += "r";
                if (a > 1) s += "r" + std::to_string(a);
                if (c) s += "s";
                if (s.empty()) s = "e";
                g.labels[a + 4 * c + 8 * b] = s;
            }
    g.mul.resize(16 * 16);
    for (int a1 = 0; a1 < 4; ++a1)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int a2 = 0; a2 < 4; ++a2)
                    for (int c2 = 0; c2 < 2; ++c2)
                        for (int b2 = 0; b2 < 2; ++b2) {
                            int a = (a1 + (c1 ? (4 - a2) % 4 : a2)) % 4;
                            int c = (c1 + c2) % 2;
                            int b = (b1 + b2) % 2;
                            int lhs = a1 + 4 * c1 + 8 * b1;
                            int rhs = a2 + 4 * c2 + 8 * b2;
                            g.mul[std::size_t(lhs) * 16 + rhs] = a + 4 * c + 8 * b;
                        }
    finalize(g);
    return g;
}

// Elementary abelian (Z2)^3 on generators z, x, y; index = z + 2x + 4y so the
// element order (1, z, x, zx, y, zy, xy, zxy) lines up with the coefficient
// sums used by the M cross-check.
GroupSpec make_z2cubed() {
    GroupSpec g;
    g.id = GroupId::z2cubed;
    g.order = 8;
    g.identity = 0;
    g.labels = {"e", "z", "x", "zx", "y", "zy", "xy", "zxy"};
    g.mul.resize(8 * 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g.mul[std::size_t(i) * 8 + j] = i ^ j;
    finalize(g);
    return g;
}

}  // namespace

const GroupSpec& build_group(GroupId id) {
    static const GroupSpec sg16_13 = make_sg16_13();
    static const GroupSpec z2xd8 = make_z2xd8();
    static const GroupSpec z2cubed = make_z2cubed();
    switch (id) {
        case GroupId::sg16_13: return sg16_13;
        case GroupId::z2xd8: return z2xd8;
        case GroupId::z2cubed: return z2cubed;
    }
    throw std::invalid_argument("unknown group id");
}

GroupRingElement make_element(const GroupSpec& g) {
    return GroupRingElement{&g, std::vector<mpz_class>(g.order, mpz_class(0))};
}

GroupRingElement delta(const GroupSpec& g, int element) {
    if (element < 0 || element >= g.order)
        throw std::invalid_argument("element index out of range");
    auto u = make_element(g);
    u.coeffs[element] = 1;
    return u;
}

GroupRingElement convolve(const GroupRingElement& u, const GroupRingElement& v) {
    if (u.group == nullptr || u.group != v.group)
        throw std::invalid_argument("convolve: elements over different groups");
    const GroupSpec& g = *u.group;
    auto out = make_element(g);
    for (int a = 0; a < g.order; ++a) {
        if (u.coeffs[a] == 0) continue;
        for (int b = 0; b < g.order; ++b)
            out.coeffs[g.mul[std::size_t(a) * g.order + b]] += u.coeffs[a] * v.coeffs[b];
    }
    return out;
}

IntegerMatrix cayley_matrix(const GroupRingElement& u) {
    const GroupSpec& g = *u.group;
    IntegerMatrix m;
    m.n = g.order;
    m.entries.resize(std::size_t(m.n) * m.n);
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        m.entries[i] = u.coeffs[g.cayley_index[i]];
    return m;
}

mpz_class determinant_exact(IntegerMatrix m) {
    if (m.n < 0 || m.entries.size() != std::size_t(m.n) * m.n)
        throw std::invalid_argument("determinant_exact: matrix is not square");
    return bareiss_determinant(m.entries, m.n);
}

mpz_class group_determinant(const GroupRingElement& u) {
    return determinant_exact(cayley_matrix(u));
}

}  // namespace gdet

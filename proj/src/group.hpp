#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace gdet {

enum class GroupId { sg16_13, z2xd8, z2cubed };

GroupId parse_group_id(const std::string& name);  // throws std::invalid_argument
const char* group_id_name(GroupId id);

/**
 * A finite group as Cayley data. Instances are built once, validated
 * exhaustively (Latin square, associativity, identity, inverses) and shared
 * read-only; every operation on them is a pure table lookup.
 *
 * sg16_13 element ordering (fixed contract, the coefficient-tuple mapping
 * depends on it): index = a + 4b + 8c for the normal form Z^a Y^b X^c,
 * a in 0..3, b,c in 0..1.
 */
struct GroupSpec {
    GroupId id;
    int order = 0;
    std::vector<std::string> labels;
    std::vector<int> mul;  // row-major: mul[g*order + h] = g*h
    std::vector<int> inv;
    int identity = 0;
    // cayley_index[g*order + h] = g * h^{-1}; the index pattern shared by every
    // Cayley matrix over this group.
    std::vector<int> cayley_index;

    int multiply(int g, int h) const;  // range-checked; throws std::invalid_argument
    int inverse(int g) const;
};

/// Returns the shared immutable instance for one of the three supported groups.
const GroupSpec& build_group(GroupId id);

struct GroupRingElement {
    const GroupSpec* group = nullptr;
    std::vector<mpz_class> coeffs;  // length = group->order
};

GroupRingElement make_element(const GroupSpec& g);
GroupRingElement delta(const GroupSpec& g, int element);

/// Group-ring product: result[k] = sum over g*h = k of u[g]*v[h].
GroupRingElement convolve(const GroupRingElement& u, const GroupRingElement& v);

struct IntegerMatrix {
    int n = 0;
    std::vector<mpz_class> entries;  // row-major n*n
};

/// Matrix (a_{g h^{-1}}): row g, column h holds coeffs[g*h^{-1}].
IntegerMatrix cayley_matrix(const GroupRingElement& u);

/// Exact determinant by fraction-free elimination; never rounds.
mpz_class determinant_exact(IntegerMatrix m);

/// The ground-truth oracle: det of the Cayley matrix of u.
mpz_class group_determinant(const GroupRingElement& u);

}  // namespace gdet

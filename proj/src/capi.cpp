#include "gdet/gdet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"
#include "util.hpp"

using namespace gdet;

struct gdet_group {
    const GroupSpec* spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gdet_status fail(gdet_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Exception barrier shared by every entry point.
template <class Fn>
gdet_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GDET_OK;
    } catch (const std::invalid_argument& e) {
        return fail(GDET_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const unsupported_range_error& e) {
        return fail(GDET_ERROR_UNSUPPORTED_RANGE, e.what());
    } catch (const std::exception& e) {
        return fail(GDET_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(GDET_ERROR_INTERNAL, "unknown error");
    }
}

std::vector<mpz_class> parse_coeffs(const char* const* coeffs, size_t count, size_t expected) {
    if (coeffs == nullptr) throw std::invalid_argument("coefficient array is null");
    if (count != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " coefficients, got " +
                                    std::to_string(count));
    std::vector<mpz_class> out(count);
    for (size_t i = 0; i < count; ++i) {
        if (coeffs[i] == nullptr) throw std::invalid_argument("coefficient string is null");
        out[i] = parse_mpz(coeffs[i]);
    }
    return out;
}

void emit(char** out, const std::string& s) {
    if (out == nullptr) throw std::invalid_argument("output pointer is null");
    *out = dup_string(s);
    if (*out == nullptr) throw std::bad_alloc();
}

void emit_json(char** out, const nlohmann::json& j) { emit(out, j.dump()); }

CoefficientTuple tuple_from_vector(const std::vector<mpz_class>& v) {
    std::array<mpz_class, 16> flat;
    std::copy(v.begin(), v.end(), flat.begin());
    return CoefficientTuple::from_flat(flat);
}

// sg16_13 coefficients cross the ABI in tuple order a,b,c,d; other groups are
// indexed by element directly.
GroupRingElement element_from_coeffs(const GroupSpec& spec, std::vector<mpz_class> coeffs) {
    if (spec.id == GroupId::sg16_13) {
        std::array<mpz_class, 16> flat;
        std::move(coeffs.begin(), coeffs.end(), flat.begin());
        return element_from_tuple(CoefficientTuple::from_flat(flat));
    }
    auto u = make_element(spec);
    u.coeffs = std::move(coeffs);
    return u;
}

}  // namespace

extern "C" {

const char* gdet_version(void) { return "1.0.0"; }

const char* gdet_last_error(void) { return g_last_error.c_str(); }

gdet_status gdet_group_create(const char* spec_id, gdet_group** out_group) {
    return guarded([&] {
        if (spec_id == nullptr || out_group == nullptr)
            throw std::invalid_argument("null argument");
        const GroupSpec& spec = build_group(parse_group_id(spec_id));
        *out_group = new gdet_group{&spec};
    });
}

void gdet_group_destroy(gdet_group* group) { delete group; }

int gdet_group_order(const gdet_group* group) { return group ? group->spec->order : 0; }

int gdet_group_identity(const gdet_group* group) { return group ? group->spec->identity : -1; }

int gdet_group_multiply(const gdet_group* group, int g, int h) {
    if (group == nullptr || g < 0 || h < 0 || g >= group->spec->order || h >= group->spec->order)
        return -1;
    return group->spec->mul[std::size_t(g) * group->spec->order + h];
}

int gdet_group_inverse(const gdet_group* group, int g) {
    if (group == nullptr || g < 0 || g >= group->spec->order) return -1;
    return group->spec->inv[g];
}

const char* gdet_group_label(const gdet_group* group, int g) {
    if (group == nullptr || g < 0 || g >= group->spec->order) return nullptr;
    return group->spec->labels[g].c_str();
}

gdet_status gdet_determinant(const gdet_group* group, const char* const* coeffs, size_t count,
                             char** out_value) {
    return guarded([&] {
        if (group == nullptr) throw std::invalid_argument("group is null");
        const auto u = element_from_coeffs(
            *group->spec, parse_coeffs(coeffs, count, std::size_t(group->spec->order)));
        emit(out_value, group_determinant(u).get_str());
    });
}

gdet_status gdet_determinant_i64(const gdet_group* group, const int64_t* coeffs, size_t count,
                                 char** out_value) {
    return guarded([&] {
        if (group == nullptr) throw std::invalid_argument("group is null");
        if (coeffs == nullptr) throw std::invalid_argument("coefficient array is null");
        if (count != std::size_t(group->spec->order))
            throw std::invalid_argument("expected " + std::to_string(group->spec->order) +
                                        " coefficients, got " + std::to_string(count));
        std::vector<mpz_class> parsed(count);
        for (size_t i = 0; i < count; ++i) parsed[i] = static_cast<long>(coeffs[i]);
        const auto u = element_from_coeffs(*group->spec, std::move(parsed));
        emit(out_value, group_determinant(u).get_str());
    });
}

gdet_status gdet_factored(const char* const* coeffs, size_t count, char** out_json) {
    return guarded([&] {
        const CoefficientTuple t = tuple_from_vector(parse_coeffs(coeffs, count, 16));
        const FactoredDeterminant f = factored_determinant(t);
        const mpz_class oracle = group_determinant(element_from_tuple(t));
        emit_json(out_json, factored_json(t, f, oracle));
    });
}

gdet_status gdet_check(const char* n_decimal, char** out_json) {
    return guarded([&] {
        if (n_decimal == nullptr) throw std::invalid_argument("n is null");
        const mpz_class n = parse_mpz(n_decimal);
        emit_json(out_json, check_json(n, is_achievable(n)));
    });
}

gdet_status gdet_witness(const char* n_decimal, char** out_json) {
    return guarded([&] {
        if (n_decimal == nullptr) throw std::invalid_argument("n is null");
        const mpz_class n = parse_mpz(n_decimal);
        emit_json(out_json, witness_json(n, witness_for(n)));
    });
}

gdet_status gdet_witness_family(const char* family, const char* m_decimal, const char* k_decimal,
                                char** out_json) {
    return guarded([&] {
        if (family == nullptr || m_decimal == nullptr)
            throw std::invalid_argument("family and m are required");
        std::optional<mpz_class> k;
        if (k_decimal != nullptr) k = parse_mpz(k_decimal);
        const WitnessRecipe r = witness(parse_family(family), parse_mpz(m_decimal), k);
        nlohmann::json j = witness_recipe_json(r);
        j["command"] = "witness";
        emit_json(out_json, j);
    });
}

gdet_status gdet_scan(const char* group_id, int64_t box_lo, int64_t box_hi, uint64_t budget,
                      uint64_t seed, int workers, int64_t value_bound, char** out_json) {
    return guarded([&] {
        if (group_id == nullptr) throw std::invalid_argument("group id is null");
        ScanParams p;
        p.group = parse_group_id(group_id);
        p.box_lo = box_lo;
        p.box_hi = box_hi;
        if (budget > 0) p.budget = budget;
        p.seed = seed;
        p.workers = workers;
        if (value_bound > 0) p.value_bound = value_bound;
        emit_json(out_json, scan_json(brute_force_scan(p)));
    });
}

gdet_status gdet_identities(uint64_t trials, int64_t bound, uint64_t seed, char** out_json) {
    return guarded(
        [&] { emit_json(out_json, identity_trials_json(run_identity_trials(trials, bound, seed))); });
}

gdet_status gdet_selftest(char** out_json) {
    return guarded([&] { emit_json(out_json, run_selftest()); });
}

void gdet_string_free(char* s) { std::free(s); }

}  // extern "C"

#include "report.hpp"

#include "util.hpp"

namespace gdet {

using nlohmann::json;

namespace {

json tuple_json(const CoefficientTuple& t) {
    json arr = json::array();
    for (const auto& c : t.to_flat()) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

json factored_json(const CoefficientTuple& t, const FactoredDeterminant& f,
                   const mpz_class& oracle) {
    return json{{"command", "factored"},
                {"coeffs", tuple_json(t)},
                {"M", f.M.get_str()},
                {"U", f.U.get_str()},
                {"V", f.V.get_str()},
                {"A", f.A.get_str()},
                {"value", f.value.get_str()},
                {"oracle", oracle.get_str()},
                {"oracle_match", f.value == oracle}};
}

json check_json(const mpz_class& n, const AchievabilityResult& r) {
    json flex = json::array();
    for (const auto& p : r.flex_primes) flex.push_back(p.get_str());
    json out{{"command", "check"},
             {"n", n.get_str()},
             {"verdict", r.achievable ? "achievable" : "not_achievable"},
             {"reason", reason_name(r.reason)},
             {"residue_mod_16", r.residue_mod_16},
             {"flex_primes", flex}};
    if (r.valuation2 >= 0) out["valuation2"] = r.valuation2;
    return out;
}

json witness_recipe_json(const WitnessRecipe& r) {
    json out{{"family", family_name(r.family)},
             {"m", r.m.get_str()},
             {"target", r.target.get_str()},
             {"coeffs", tuple_json(r.tuple)}};
    if (r.k) out["k"] = r.k->get_str();
    return out;
}

json witness_json(const mpz_class& n, const WitnessResult& w) {
    json out = check_json(n, w.check);
    out["command"] = "witness";
    if (w.recipe) {
        out.update(witness_recipe_json(*w.recipe));
    }
    return out;
}

json scan_json(const ScanReport& r) {
    json odd_res = json::object();
    for (int i = 0; i < 16; ++i)
        if (r.odd_residue_mod16[i]) odd_res[std::to_string(i)] = r.odd_residue_mod16[i];
    json val_hist = json::object();
    for (int i = 0; i < 128; ++i)
        if (r.even_valuation2[i]) val_hist[std::to_string(i)] = r.even_valuation2[i];

    json violations = json::array();
    for (const auto& v : r.violations) {
        json coeffs = json::array();
        for (int64_t c : v.coeffs) coeffs.push_back(c);
        violations.push_back(json{{"index", v.index},
                                  {"coeffs", coeffs},
                                  {"value", v.value},
                                  {"reason", v.reason}});
    }

    json out{{"command", "scan"},
             {"group", group_id_name(r.group)},
             {"box", json::array({r.box_lo, r.box_hi})},
             {"exhaustive", r.exhaustive},
             {"candidates", r.candidates},
             {"seed", r.seed},
             {"workers", r.workers},
             {"value_bound", r.value_bound},
             {"zero_count", r.zero_count},
             {"odd_count", r.odd_count},
             {"even_count", r.even_count},
             {"odd_residue_mod16", odd_res},
             {"even_valuation2", val_hist},
             {"distinct_mod_2_20", r.distinct_mod_2_20},
             {"distinct_small_values", r.distinct_small_values},
             {"distinct_odd_nine", r.distinct_odd_nine},
             {"violations", r.violation_count},
             {"violation_records", violations},
             {"elapsed_seconds", r.elapsed_seconds}};
    if (!r.small_values.empty()) out["small_values"] = r.small_values;
    return out;
}

json identity_trials_json(const IdentityTrialsReport& r) {
    json out{{"command", "identities"},
             {"trials", r.trials},
             {"bound", r.bound},
             {"seed", r.seed},
             {"failures", r.failures},
             {"all_pass", r.failures == 0}};
    if (r.first_failure_tuple) {
        json coeffs = json::array();
        for (int64_t c : *r.first_failure_tuple) coeffs.push_back(c);
        out["first_failure"] = json{{"identity", r.first_failure_name}, {"coeffs", coeffs}};
    }
    return out;
}

namespace {

CoefficientTuple tuple_of(std::array<long, 16> flat) {
    std::array<mpz_class, 16> v;
    for (int i = 0; i < 16; ++i) v[i] = flat[i];
    return CoefficientTuple::from_flat(v);
}

}  // namespace

json run_selftest() {
    json checks = json::array();
    int passed = 0, failed = 0;
    auto check = [&](const char* name, bool ok) {
        checks.push_back(json{{"name", name}, {"pass", ok}});
        (ok ? passed : failed)++;
    };

    const GroupSpec& g16 = build_group(GroupId::sg16_13);
    const GroupSpec& gd8 = build_group(GroupId::z2xd8);
    const GroupSpec& g8 = build_group(GroupId::z2cubed);
    check("group_orders", g16.order == 16 && gd8.order == 16 && g8.order == 8);
    // Indices: Z=1, Z^2=2, Y=4, X=8 under the canonical ordering.
    check("YY_eq_Z2", g16.multiply(4, 4) == 2);
    check("XZ_eq_Z3X", g16.multiply(8, 1) == 3 + 8);
    check("XX_eq_e", g16.multiply(8, 8) == 0);

    check("det_delta_e", group_determinant(delta(g16, 0)) == 1);
    check("det_delta_Z", group_determinant(delta(g16, 1)) == 1);
    {
        auto ones = make_element(g16);
        for (auto& c : ones.coeffs) c = 1;
        check("det_all_ones", group_determinant(ones) == 0);
    }

    const CoefficientTuple t16 = tuple_of({1, 1, 1, 1, 1, 1, -1, -1, 1, 0, 0, -1, 1, -1, -1, 1});
    {
        const auto f = factored_determinant(t16);
        const auto oracle = group_determinant(element_from_tuple(t16));
        check("factored_2_16_family", f.M == 4096 && f.U == -2 && f.V == 0 && f.A == 4 &&
                                          f.value == 65536 && oracle == 65536);
    }
    {
        const auto w = witness(WitnessFamily::odd_1mod16, 1);
        check("witness_17", w.target == 17 &&
                                group_determinant(element_from_tuple(w.tuple)) == 17);
        const auto s = sign_point_values(w.tuple);
        bool ok = s.value[0] == 17;
        for (int i = 1; i < 8; ++i) ok = ok && s.value[i] == 1;
        check("sign_points_17", ok);
    }
    check("witness_for_17", [&] {
        auto r = witness_for(17);
        return r.recipe && r.recipe->family == WitnessFamily::odd_1mod16 && r.recipe->m == 1;
    }());
    check("witness_for_2_15_not_achievable", !witness_for(mpz_class(1) << 15).recipe);
    check("witness_3family_57", witness(WitnessFamily::odd_3family, 0, mpz_class(1)).target == 57);

    check("check_217", !is_achievable(217).achievable);
    check("check_57", is_achievable(57).achievable);
    check("check_41", !is_achievable(41).achievable);
    check("pair_9", factor_pair_search(9) == std::make_pair(mpz_class(3), mpz_class(3)));
    check("pair_25", factor_pair_search(25) == std::make_pair(mpz_class(5), mpz_class(5)));
    check("pair_217_none", !factor_pair_search(217).has_value());

    check("identities_identity_tuple",
          check_identities(tuple_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})).all_pass);
    check("identities_2_16_family", check_identities(t16).all_pass);
    check("identities_random_200", run_identity_trials(200, 50, 7).failures == 0);

    {
        const auto d1 = rep2_det(t16, Rep2::rho1);
        const auto d2 = rep2_det(t16, Rep2::rho2);
        check("rep2_2_16_family", d1 == GaussianInt(-2, 0) && d2 == GaussianInt(-2, 0));
    }

    json out{{"command", "selftest"}, {"checks", checks}, {"passed", passed}, {"failed", failed}};
    return out;
}

}  // namespace gdet

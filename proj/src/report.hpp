#pragma once

#include <json.hpp>

#include "classify.hpp"
#include "frobenius.hpp"
#include "identities.hpp"
#include "scan.hpp"
#include "witnesses.hpp"

// Machine-readable renderings of results. Integers that can exceed native
// widths (determinant values, targets, coefficients, n, m, k) are emitted as
// decimal strings; structural counts stay JSON numbers.
namespace gdet {

nlohmann::json factored_json(const CoefficientTuple& t, const FactoredDeterminant& f,
                             const mpz_class& oracle);
nlohmann::json check_json(const mpz_class& n, const AchievabilityResult& r);
nlohmann::json witness_json(const mpz_class& n, const WitnessResult& w);
nlohmann::json witness_recipe_json(const WitnessRecipe& r);
nlohmann::json scan_json(const ScanReport& r);
nlohmann::json identity_trials_json(const IdentityTrialsReport& r);

/// A small battery of frozen examples spanning every module; returns
/// {"checks": [{"name","pass"},...], "passed": n, "failed": n}.
nlohmann::json run_selftest();

}  // namespace gdet

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"

namespace gdet {

struct ScanParams {
    GroupId group = GroupId::sg16_13;  // sg16_13 or z2xd8
    int64_t box_lo = -1;
    int64_t box_hi = 1;
    // Exhaustive when the box holds at most `budget` tuples, otherwise exactly
    // `budget` seeded uniform samples.
    uint64_t budget = uint64_t(1) << 26;
    uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency (the GDET_WORKERS env var, if
                      // set, overrides this at the CLI layer)
    // Distinct values are listed in full only below this absolute bound;
    // larger values appear in the residue/valuation statistics only.
    int64_t value_bound = int64_t(1) << 24;
    std::size_t max_recorded_violations = 64;
};

struct ScanViolation {
    uint64_t index = 0;  // linear tuple index (exhaustive) or sample index
    std::array<int64_t, 16> coeffs{};
    std::string value;  // decimal
    std::string reason;
};

struct ScanReport {
    GroupId group = GroupId::sg16_13;
    int64_t box_lo = 0, box_hi = 0;
    bool exhaustive = true;
    uint64_t candidates = 0;
    uint64_t seed = 0;
    int workers = 1;
    int64_t value_bound = 0;

    uint64_t zero_count = 0, odd_count = 0, even_count = 0;
    std::array<uint64_t, 16> odd_residue_mod16{};  // counts, indexed by residue
    std::array<uint64_t, 128> even_valuation2{};   // counts by v2, clamped at 127
    uint64_t distinct_mod_2_20 = 0;  // achieved canonical residues mod 2^20
    uint64_t distinct_small_values = 0;
    std::vector<std::string> small_values;  // sorted; only when few enough to list
    uint64_t distinct_odd_nine = 0;         // distinct odd values = 9 mod 16 (flex-checked)

    uint64_t violation_count = 0;
    std::vector<ScanViolation> violations;  // capped at max_recorded_violations
    double elapsed_seconds = 0.0;
};

/**
 * Enumerates coefficient tuples over the box (every coefficient in
 * [box_lo, box_hi]), evaluates the group determinant of each - the factored
 * fast path for sg16_13, fraction-free elimination for z2xd8 - and checks
 * every value against is_achievable. Deterministic given (params, seed);
 * the worker count never changes any reported set or count.
 */
ScanReport brute_force_scan(const ScanParams& params);

}  // namespace gdet

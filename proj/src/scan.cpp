#include "scan.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "classify.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "util.hpp"

namespace gdet {

namespace {

constexpr std::size_t kSmallValueListCap = 10000;
constexpr int64_t kMaxValueBound = int64_t(1) << 28;  // 64 MiB bitmap ceiling

struct U128Hash {
    std::size_t operator()(uint128 v) const {
        SplitMix64 s(uint64_t(v) ^ (uint64_t(v >> 64) * 0x9e3779b97f4a7c15ull));
        return std::size_t(s.next());
    }
};

struct Occurrence {
    uint64_t min_index = 0;
    uint64_t count = 0;
};

struct InlineViolation {
    uint64_t index;
    int128 value_i128;
    mpz_class value_mpz;
    bool is_mpz;
    AchievabilityReason reason;
};

struct Bitmap {
    std::vector<uint64_t> words;

    explicit Bitmap(uint64_t bits = 0) : words((bits + 63) / 64, 0) {}
    void set(uint64_t i) { words[i >> 6] |= uint64_t(1) << (i & 63); }
    void merge(const Bitmap& o) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    }
    uint64_t popcount() const {
        uint64_t n = 0;
        for (uint64_t w : words) n += uint64_t(__builtin_popcountll(w));
        return n;
    }
};

int trailing_zeros_i128(int128 v) {
    const uint128 u = uint128(v);  // two's complement keeps trailing zeros
    const auto lo = uint64_t(u);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(uint64_t(u >> 64));
}

struct Accumulator {
    uint64_t zero_count = 0, odd_count = 0, even_count = 0;
    std::array<uint64_t, 16> odd_residue_mod16{};
    std::array<uint64_t, 128> even_valuation2{};
    Bitmap small_values;
    Bitmap mod_2_20{uint64_t(1) << 20};
    std::unordered_map<uint128, Occurrence, U128Hash> odd9_i128;
    std::map<mpz_class, Occurrence> odd9_mpz;
    std::vector<InlineViolation> inline_violations;
    int64_t value_bound;

    explicit Accumulator(int64_t bound)
        : small_values(uint64_t(2 * bound)), value_bound(bound) {}

    void merge(Accumulator&& o) {
        zero_count += o.zero_count;
        odd_count += o.odd_count;
        even_count += o.even_count;
        for (int i = 0; i < 16; ++i) odd_residue_mod16[i] += o.odd_residue_mod16[i];
        for (int i = 0; i < 128; ++i) even_valuation2[i] += o.even_valuation2[i];
        small_values.merge(o.small_values);
        mod_2_20.merge(o.mod_2_20);
        for (auto& [v, occ] : o.odd9_i128) {
            auto& mine = odd9_i128[v];
            if (mine.count == 0 || occ.min_index < mine.min_index) mine.min_index = occ.min_index;
            mine.count += occ.count;
        }
        for (auto& [v, occ] : o.odd9_mpz) {
            auto& mine = odd9_mpz[v];
            if (mine.count == 0 || occ.min_index < mine.min_index) mine.min_index = occ.min_index;
            mine.count += occ.count;
        }
        inline_violations.insert(inline_violations.end(), o.inline_violations.begin(),
                                 o.inline_violations.end());
    }

    void note_small_and_residue(int128 v) {
        if (v > -value_bound && v < value_bound)
            small_values.set(uint64_t(v + value_bound));
        mod_2_20.set(uint64_t(uint128(v) & ((uint64_t(1) << 20) - 1)));
    }

    void record(int128 v, uint64_t index) {
        note_small_and_residue(v);
        if (v == 0) {
            ++zero_count;
            return;
        }
        if (uint64_t(uint128(v)) & 1) {
            ++odd_count;
            const unsigned r = unsigned(uint128(v) & 15);
            ++odd_residue_mod16[r];
            if (r == 1) return;
            if (r == 9) {
                auto& occ = odd9_i128[uint128(v)];
                if (occ.count == 0 || index < occ.min_index) occ.min_index = index;
                ++occ.count;
                return;
            }
            inline_violations.push_back(
                {index, v, mpz_class(), false, AchievabilityReason::odd_bad_residue});
            return;
        }
        ++even_count;
        const int v2 = trailing_zeros_i128(v);
        ++even_valuation2[std::min(v2, 127)];
        if (v2 < 16)
            inline_violations.push_back(
                {index, v, mpz_class(), false, AchievabilityReason::even_bad_valuation});
    }

    void record(const mpz_class& v, uint64_t index) {
        if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 126) {
            record(i128_from_mpz(v), index);
            return;
        }
        mod_2_20.set(canonical_mod(v, uint64_t(1) << 20));
        if (canonical_mod(v, 2) == 1) {
            ++odd_count;
            const unsigned r = canonical_mod(v, 16);
            ++odd_residue_mod16[r];
            if (r == 1) return;
            if (r == 9) {
                auto& occ = odd9_mpz[v];
                if (occ.count == 0 || index < occ.min_index) occ.min_index = index;
                ++occ.count;
                return;
            }
            inline_violations.push_back({index, 0, v, true, AchievabilityReason::odd_bad_residue});
            return;
        }
        ++even_count;
        const mpz_class mag = abs(v);
        const long v2 = long(mpz_scan1(mag.get_mpz_t(), 0));
        ++even_valuation2[std::min<long>(v2, 127)];
        if (v2 < 16)
            inline_violations.push_back(
                {index, 0, v, true, AchievabilityReason::even_bad_valuation});
    }
};

// Coefficients of candidate `index`, written into out[0..15]. Exhaustive mode
// decodes the mixed-radix index; sampled mode regenerates the per-index stream,
// so results never depend on how indices were partitioned across workers.
struct TupleSource {
    bool exhaustive;
    int64_t lo;
    uint64_t range;
    uint64_t seed;

    void get(uint64_t index, int64_t* out) const {
        if (exhaustive) {
            uint64_t rest = index;
            for (int i = 0; i < 16; ++i) {
                out[i] = lo + int64_t(rest % range);
                rest /= range;
            }
        } else {
            SplitMix64 rng(seed_for_index(seed, index));
            for (int i = 0; i < 16; ++i) out[i] = lo + int64_t(rng.below(range));
        }
    }
};

// sg16_13 evaluation: flat CLI/tuple order a,b,c,d -> the factored form.
// z2xd8: coefficients indexed by group element, Cayley matrix + Bareiss.
struct Evaluator {
    GroupId group;
    bool fixed_width;
    const GroupSpec* spec;
    std::vector<int128> mat_i128;
    std::vector<mpz_class> mat_mpz;

    Evaluator(GroupId g, bool fixed) : group(g), fixed_width(fixed), spec(&build_group(g)) {
        if (group == GroupId::z2xd8) {
            mat_i128.resize(256);
            mat_mpz.resize(256);
        }
    }

    int128 eval_i128(const int64_t* c) {
        if (group == GroupId::sg16_13) {
            int128 flat[16];
            for (int i = 0; i < 16; ++i) flat[i] = c[i];
            return factored_eval<int128>(flat).value;
        }
        for (int i = 0; i < 256; ++i) mat_i128[i] = c[spec->cayley_index[i]];
        return bareiss_determinant(mat_i128, 16);
    }

    mpz_class eval_mpz(const int64_t* c) {
        if (group == GroupId::sg16_13) {
            std::array<mpz_class, 16> flat;
            for (int i = 0; i < 16; ++i) flat[i] = static_cast<long>(c[i]);
            return factored_eval<mpz_class>(flat.data()).value;
        }
        for (int i = 0; i < 256; ++i) mat_mpz[i] = static_cast<long>(c[spec->cayley_index[i]]);
        return bareiss_determinant(mat_mpz, 16);
    }
};

void scan_range(const TupleSource& source, GroupId group, bool fixed_width, uint64_t begin,
                uint64_t end, Accumulator& acc) {
    Evaluator eval(group, fixed_width);
    int64_t c[16];
    for (uint64_t i = begin; i < end; ++i) {
        source.get(i, c);
        if (fixed_width)
            acc.record(eval.eval_i128(c), i);
        else
            acc.record(eval.eval_mpz(c), i);
    }
}

}  // namespace

ScanReport brute_force_scan(const ScanParams& params) {
    const auto t0 = std::chrono::steady_clock::now();
    if (params.group == GroupId::z2cubed)
        throw std::invalid_argument("brute_force_scan: group must be sg16_13 or z2xd8");
    if (params.box_lo > params.box_hi)
        throw std::invalid_argument("brute_force_scan: empty box");
    if (params.value_bound <= 0 || params.value_bound > kMaxValueBound)
        throw std::invalid_argument("brute_force_scan: value_bound out of range");

    const uint64_t range = uint64_t(params.box_hi - params.box_lo + 1);
    uint128 total = 1;
    for (int i = 0; i < 16 && total <= uint128(params.budget); ++i) total *= range;
    const bool exhaustive = total <= uint128(params.budget);
    const uint64_t candidates = exhaustive ? uint64_t(total) : params.budget;

    const int64_t coeff_bound = std::max(std::abs(params.box_lo), std::abs(params.box_hi));
    const bool fixed_width = params.group == GroupId::sg16_13
                                 ? coeff_bound <= kFactoredI128CoeffBound
                                 : bareiss_fits_int128(16, coeff_bound);

    int workers = params.workers > 0 ? params.workers
                                     : int(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (uint64_t(workers) > candidates) workers = std::max<uint64_t>(1, candidates);

    const TupleSource source{exhaustive, params.box_lo, range, params.seed};

    std::vector<Accumulator> accs;
    accs.reserve(workers);
    for (int w = 0; w < workers; ++w) accs.emplace_back(params.value_bound);
    {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            const uint64_t begin = candidates * uint64_t(w) / uint64_t(workers);
            const uint64_t end = candidates * uint64_t(w + 1) / uint64_t(workers);
            threads.emplace_back(scan_range, std::cref(source), params.group, fixed_width, begin,
                                 end, std::ref(accs[w]));
        }
        for (auto& t : threads) t.join();
    }
    Accumulator merged = std::move(accs[0]);
    for (int w = 1; w < workers; ++w) merged.merge(std::move(accs[w]));

    ScanReport rep;
    rep.group = params.group;
    rep.box_lo = params.box_lo;
    rep.box_hi = params.box_hi;
    rep.exhaustive = exhaustive;
    rep.candidates = candidates;
    rep.seed = params.seed;
    rep.workers = workers;
    rep.value_bound = params.value_bound;
    rep.zero_count = merged.zero_count;
    rep.odd_count = merged.odd_count;
    rep.even_count = merged.even_count;
    rep.odd_residue_mod16 = merged.odd_residue_mod16;
    rep.even_valuation2 = merged.even_valuation2;
    rep.distinct_mod_2_20 = merged.mod_2_20.popcount();
    rep.distinct_small_values = merged.small_values.popcount();
    rep.distinct_odd_nine = merged.odd9_i128.size() + merged.odd9_mpz.size();

    if (rep.distinct_small_values <= kSmallValueListCap) {
        rep.small_values.reserve(rep.distinct_small_values);
        for (uint64_t slot = 0; slot < uint64_t(2 * params.value_bound); ++slot)
            if (merged.small_values.words[slot >> 6] & (uint64_t(1) << (slot & 63)))
                rep.small_values.push_back(
                    to_string(int128(slot) - int128(params.value_bound)));
    }

    // Inline violations (wrong odd residue, shallow 2-adic valuation) plus the
    // flex-prime check over every distinct odd value = 9 mod 16.
    std::vector<ScanViolation> violations;
    auto add_violation = [&](uint64_t index, const std::string& value, AchievabilityReason r,
                             uint64_t count) {
        rep.violation_count += count;
        ScanViolation v;
        v.index = index;
        source.get(index, v.coeffs.data());
        v.value = value;
        v.reason = reason_name(r);
        violations.push_back(std::move(v));
    };
    for (const auto& iv : merged.inline_violations)
        add_violation(iv.index, iv.is_mpz ? iv.value_mpz.get_str() : to_string(iv.value_i128),
                      iv.reason, 1);

    std::vector<std::pair<uint128, Occurrence>> odd9(merged.odd9_i128.begin(),
                                                     merged.odd9_i128.end());
    std::sort(odd9.begin(), odd9.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, occ] : odd9) {
        const mpz_class v = mpz_from_i128(int128(key));
        if (!is_achievable(v).achievable)
            add_violation(occ.min_index, v.get_str(),
                          AchievabilityReason::nine_mod_16_rigid_primes, occ.count);
    }
    for (const auto& [v, occ] : merged.odd9_mpz)
        if (!is_achievable(v).achievable)
            add_violation(occ.min_index, v.get_str(),
                          AchievabilityReason::nine_mod_16_rigid_primes, occ.count);

    std::sort(violations.begin(), violations.end(),
              [](const ScanViolation& x, const ScanViolation& y) { return x.index < y.index; });
    if (violations.size() > params.max_recorded_violations)
        violations.resize(params.max_recorded_violations);
    rep.violations = std::move(violations);

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace gdet

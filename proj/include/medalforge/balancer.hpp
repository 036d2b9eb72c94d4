#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "medalforge/util.hpp"

namespace medalforge {

struct ClassHistogram {
    std::map<std::string, uint64_t> counts;  // label -> frequency
    uint64_t total = 0;

    void add(const std::string& label) {
        ++counts[label];
        ++total;
    }
};

template <typename Range>
ClassHistogram class_histogram(const Range& samples) {
    ClassHistogram h;
    for (const auto& s : samples) h.add(s.label);
    return h;
}

enum class RoundingMode { half_away_from_zero, half_to_even };
RoundingMode rounding_mode_from(std::string_view name);  // throws invalid_argument
const char* rounding_mode_name(RoundingMode mode);

// Integer round of num/den (den > 0) under the given tie rule.
int64_t round_ratio(int64_t num, int64_t den, RoundingMode mode);

enum class ThresholdTermination { returned, exhausted, degenerate };
const char* threshold_termination_name(ThresholdTermination t);

struct ThresholdIteration {
    int64_t remaining_samples = 0;            // N' after the subtraction
    int64_t remaining_labels = 0;             // L after the decrement
    std::optional<int64_t> rate;              // r; absent when the L=0 guard fired
};

struct ThresholdTrace {
    std::vector<uint64_t> frequencies_sorted;
    uint64_t requested = 0;  // N
    std::vector<ThresholdIteration> iterations;
    uint64_t threshold = 0;  // T
    ThresholdTermination termination = ThresholdTermination::returned;
    uint64_t achieved = 0;   // sum over classes of min(F_C, T)
    bool discrepancy = false;  // achieved != requested
};

// Cap threshold T for balanced subsampling: sort frequencies ascending,
// then per element update N' -= f_C, L -= 1, r = round(N'/L) and return
// r + 1 as soon as f_C >= r. Two totality guards, both flagged in the
// trace: when L reaches 0 before a return, T = max(f) (exhausted); a
// returned T below 1 clamps to 1 (degenerate).
std::pair<uint64_t, ThresholdTrace> compute_threshold(
    std::vector<uint64_t> frequencies, uint64_t target,
    RoundingMode mode = RoundingMode::half_away_from_zero);

uint64_t sum_capped(const std::vector<uint64_t>& frequencies, uint64_t cap);

struct BalancedSubset {
    std::map<std::string, uint64_t> kept_counts;            // label -> N_C
    std::map<std::string, std::vector<uint64_t>> kept_ids;  // label -> sample ids, ascending
    uint64_t total_kept = 0;
    uint64_t seed = 0;
};

// Keeps min(F_C, T) ids per class, drawn without replacement as the first
// elements of a Fisher-Yates shuffle of the class's id list (input order)
// using the stream seeded with splitmix64(seed XOR fnv1a64(label)).
BalancedSubset balanced_sample(const std::map<std::string, std::vector<uint64_t>>& class_ids,
                               uint64_t threshold, uint64_t seed);

// Global Fisher-Yates shuffle of the ids (stream seeded directly with
// seed), then contiguous slices of floor-allocated sizes, remainder to
// train. Throws invalid_argument when fewer than 3 ids are given.
std::array<std::vector<uint64_t>, 3> partition_samples(std::vector<uint64_t> ids,
                                                       const SplitRatios& ratios, uint64_t seed);

}  // namespace medalforge

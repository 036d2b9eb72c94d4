#include "medalforge/balancer.hpp"

#include <algorithm>
#include <stdexcept>

#include "medalforge/rng.hpp"

namespace medalforge {

RoundingMode rounding_mode_from(std::string_view name) {
    if (name == "half-away") return RoundingMode::half_away_from_zero;
    if (name == "half-even") return RoundingMode::half_to_even;
    throw std::invalid_argument("unknown rounding mode: " + std::string(name) +
                                " (expected half-away or half-even)");
}

const char* rounding_mode_name(RoundingMode mode) {
    return mode == RoundingMode::half_away_from_zero ? "half-away" : "half-even";
}

const char* threshold_termination_name(ThresholdTermination t) {
    switch (t) {
        case ThresholdTermination::returned: return "returned";
        case ThresholdTermination::exhausted: return "exhausted";
        default: return "degenerate";
    }
}

int64_t round_ratio(int64_t num, int64_t den, RoundingMode mode) {
    if (den <= 0) throw std::invalid_argument("round_ratio requires a positive denominator");
    bool negative = num < 0;
    uint64_t a = negative ? static_cast<uint64_t>(-(num + 1)) + 1 : static_cast<uint64_t>(num);
    uint64_t d = static_cast<uint64_t>(den);
    uint64_t base = a / d;
    uint64_t twice_rem = 2 * (a % d);
    uint64_t rounded;
    if (twice_rem > d) {
        rounded = base + 1;
    } else if (twice_rem < d) {
        rounded = base;
    } else if (mode == RoundingMode::half_away_from_zero) {
        rounded = base + 1;
    } else {
        rounded = base + (base % 2);  // half to even
    }
    int64_t value = static_cast<int64_t>(rounded);
    return negative ? -value : value;
}

uint64_t sum_capped(const std::vector<uint64_t>& frequencies, uint64_t cap) {
    uint64_t total = 0;
    for (uint64_t f : frequencies) total += std::min(f, cap);
    return total;
}

std::pair<uint64_t, ThresholdTrace> compute_threshold(std::vector<uint64_t> frequencies,
                                                      uint64_t target, RoundingMode mode) {
    if (frequencies.empty()) throw std::invalid_argument("frequency array must be non-empty");
    if (target < 1) throw std::invalid_argument("target sample count must be >= 1");
    for (uint64_t f : frequencies) {
        if (f < 1) throw std::invalid_argument("class frequencies must be >= 1");
    }

    std::sort(frequencies.begin(), frequencies.end());

    ThresholdTrace trace;
    trace.frequencies_sorted = frequencies;
    trace.requested = target;

    int64_t labels_left = static_cast<int64_t>(frequencies.size());
    int64_t samples_left = static_cast<int64_t>(target);
    uint64_t threshold = 0;
    bool resolved = false;

    for (uint64_t freq : frequencies) {
        samples_left -= static_cast<int64_t>(freq);
        --labels_left;
        ThresholdIteration iter;
        iter.remaining_samples = samples_left;
        iter.remaining_labels = labels_left;
        if (labels_left == 0) {
            // The printed loop would divide by zero here.
            trace.iterations.push_back(iter);
            threshold = frequencies.back();
            trace.termination = ThresholdTermination::exhausted;
            resolved = true;
            break;
        }
        int64_t rate = round_ratio(samples_left, labels_left, mode);
        iter.rate = rate;
        trace.iterations.push_back(iter);
        if (static_cast<int64_t>(freq) >= rate) {
            int64_t returned = rate + 1;
            if (returned < 1) {
                threshold = 1;
                trace.termination = ThresholdTermination::degenerate;
            } else {
                threshold = static_cast<uint64_t>(returned);
                trace.termination = ThresholdTermination::returned;
            }
            resolved = true;
            break;
        }
    }
    // labels_left hits 0 on the last element, so the loop always resolves.
    (void)resolved;

    trace.threshold = threshold;
    trace.achieved = sum_capped(frequencies, threshold);
    trace.discrepancy = trace.achieved != target;
    return {threshold, trace};
}

BalancedSubset balanced_sample(const std::map<std::string, std::vector<uint64_t>>& class_ids,
                               uint64_t threshold, uint64_t seed) {
    if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
    BalancedSubset subset;
    subset.seed = seed;
    for (const auto& [label, ids] : class_ids) {
        std::vector<uint64_t> shuffled = ids;
        SplitMix64 gen(keyed_seed(seed, label));
        seeded_shuffle(shuffled, gen);
        size_t keep = std::min<size_t>(shuffled.size(), threshold);
        shuffled.resize(keep);
        std::sort(shuffled.begin(), shuffled.end());
        subset.total_kept += keep;
        subset.kept_counts[label] = keep;
        subset.kept_ids[label] = std::move(shuffled);
    }
    return subset;
}

std::array<std::vector<uint64_t>, 3> partition_samples(std::vector<uint64_t> ids,
                                                       const SplitRatios& ratios, uint64_t seed) {
    validate_ratios(ratios);
    if (ids.size() < 3) throw std::invalid_argument("need at least 3 samples to partition");
    seeded_shuffle(ids, seed);
    auto sizes = floor_allocation(ids.size(), ratios);
    std::array<std::vector<uint64_t>, 3> parts;
    size_t offset = 0;
    for (size_t p = 0; p < 3; ++p) {
        parts[p].assign(ids.begin() + offset, ids.begin() + offset + sizes[p]);
        offset += sizes[p];
    }
    return parts;
}

}  // namespace medalforge

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace medalforge {

struct SplitRatios {
    double train = 0.0;
    double validation = 0.0;
    double test = 0.0;
};

// Parses "0.75,0.10,0.15". Throws std::invalid_argument on malformed input,
// non-positive entries, or a sum off 1 by more than 1e-9.
SplitRatios parse_ratios(std::string_view text);
void validate_ratios(const SplitRatios& r);

// Floor allocation with the remainder going to the first (train) part.
// floor() is taken with a small tolerance so that products like
// 5e6 * 0.6, which land a few ulp below an integer, allocate as intended.
std::array<uint64_t, 3> floor_allocation(uint64_t n, const SplitRatios& r);

// Parses "5,10,30" into sorted unique positive integers.
std::vector<uint64_t> parse_uint_list(std::string_view text);

std::string to_hex64(uint64_t v);

}  // namespace medalforge

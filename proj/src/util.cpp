#include "medalforge/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace medalforge {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            parts.emplace_back(text.substr(pos));
            break;
        }
        parts.emplace_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return parts;
}

double parse_double(const std::string& s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

}  // namespace

SplitRatios parse_ratios(std::string_view text) {
    auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw std::invalid_argument("ratios must have exactly 3 comma-separated values");
    }
    SplitRatios r{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
    validate_ratios(r);
    return r;
}

void validate_ratios(const SplitRatios& r) {
    if (!(r.train > 0.0) || !(r.validation > 0.0) || !(r.test > 0.0)) {
        throw std::invalid_argument("ratios must be positive");
    }
    if (std::fabs(r.train + r.validation + r.test - 1.0) > 1e-9) {
        throw std::invalid_argument("ratios must sum to 1");
    }
}

std::array<uint64_t, 3> floor_allocation(uint64_t n, const SplitRatios& r) {
    validate_ratios(r);
    auto alloc = [n](double ratio) -> uint64_t {
        double t = ratio * static_cast<double>(n);
        double eps = 1e-9 * std::max(1.0, t);
        return static_cast<uint64_t>(std::floor(t + eps));
    };
    uint64_t n_val = alloc(r.validation);
    uint64_t n_test = alloc(r.test);
    // train = floor(n * r.train) + remainder, which collapses to the rest.
    uint64_t n_train = n - n_val - n_test;
    return {n_train, n_val, n_test};
}

std::vector<uint64_t> parse_uint_list(std::string_view text) {
    std::vector<uint64_t> out;
    for (const auto& part : split_commas(text)) {
        size_t used = 0;
        unsigned long long v = std::stoull(part, &used);
        if (used != part.size() || v == 0) {
            throw std::invalid_argument("expected positive integer: " + part);
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string to_hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace medalforge

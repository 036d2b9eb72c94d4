#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace medalforge {

// One abbreviation -> expansion pair. The abbreviation keeps its source
// case; the expansion is canonicalized to lowercase word tokens (same
// token rule as the document tokenizer) joined by single spaces.
struct Mapping {
    std::string abbreviation;
    std::vector<std::string> expansion_tokens;
    std::string expansion;

    bool operator==(const Mapping& o) const {
        return abbreviation == o.abbreviation && expansion == o.expansion;
    }
};

class MappingTable {
public:
    MappingTable() = default;
    // Sorts by (abbreviation, expansion) and drops exact duplicates.
    explicit MappingTable(std::vector<Mapping> entries);

    const std::vector<Mapping>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Entry indices per abbreviation / per canonical expansion.
    const std::unordered_map<std::string, std::vector<uint32_t>>& by_abbreviation() const {
        return by_abbreviation_;
    }
    const std::unordered_map<std::string, std::vector<uint32_t>>& by_expansion() const {
        return by_expansion_;
    }

    bool operator==(const MappingTable& o) const { return entries_ == o.entries_; }

private:
    std::vector<Mapping> entries_;
    std::unordered_map<std::string, std::vector<uint32_t>> by_abbreviation_;
    std::unordered_map<std::string, std::vector<uint32_t>> by_expansion_;
};

struct MappingStats {
    uint64_t pair_count = 0;
    uint64_t abbreviation_count = 0;
    double mean_expansions_per_abbreviation = 0.0;
};

struct MappingLoadIssue {
    uint64_t line = 0;  // 1-based
    std::string message;
};

struct MappingLoadReport {
    MappingTable table;
    std::vector<MappingLoadIssue> issues;
    uint64_t lines_read = 0;
};

// Reads tab-separated ABBREV\tEXPANSION lines (extra fields ignored).
// Malformed records are reported per line, never fatal; an empty stream
// yields an empty table.
MappingLoadReport load_mappings(std::istream& in);
MappingLoadReport load_mappings_file(const std::string& path);

// Discards pairs whose abbreviation has a single expansion and pairs whose
// expansion maps to more than one abbreviation. Both rules are evaluated
// against the input table in one pass; with fixpoint=true the pass repeats
// until the table stops changing.
MappingTable filter_ambiguous(const MappingTable& table, bool fixpoint = false);

MappingStats mapping_stats(const MappingTable& table);

// ABBREV\tEXPANSION lines in (abbreviation, expansion) order; byte-stable.
void serialize_mappings(const MappingTable& table, std::ostream& out);

}  // namespace medalforge

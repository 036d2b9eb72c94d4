#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "medalforge/corpus_io.hpp"
#include "medalforge/mapping_table.hpp"
#include "medalforge/rng.hpp"
#include "medalforge/text.hpp"

namespace medalforge {

struct TokenizedDoc {
    Document doc;
    std::vector<std::string> tokens;        // original case
    std::vector<std::string> lower_tokens;  // match key (ASCII lowercased)
    std::vector<uint64_t> token_starts;     // byte offsets into doc.text
};

TokenizedDoc tokenize(Document doc);

// Non-overlapping expansion occurrence, token units.
struct MatchSpan {
    uint64_t start = 0;
    uint64_t length = 0;
    uint32_t mapping_index = 0;  // into the matcher's table entries

    bool operator==(const MatchSpan& o) const = default;
};

struct SubstitutionConfig {
    double probability = 0.3;
    uint64_t global_seed = 0;
};

// Token-level trie over the table's expansion token sequences, shared
// read-only across workers. Matching is greedy left-to-right longest-match
// on the lowercased token stream; a position inside a match cannot start
// another one. When several table entries share an expansion sequence
// (unfiltered tables), the lexicographically smallest abbreviation wins.
class ExpansionMatcher {
public:
    explicit ExpansionMatcher(const MappingTable& table);

    std::vector<MatchSpan> find(const TokenizedDoc& tdoc) const;
    const MappingTable& table() const { return *table_; }

private:
    struct Node {
        std::unordered_map<uint32_t, uint32_t> children;
        int32_t terminal = -1;  // entry index, -1 if none
    };

    uint32_t token_id(const std::string& token) const;

    const MappingTable* table_;
    std::unordered_map<std::string, uint32_t> token_ids_;
    std::vector<Node> nodes_;
};

std::vector<MatchSpan> find_expansion_matches(const TokenizedDoc& tdoc, const MappingTable& table);

// splitmix64(global_seed XOR fnv1a64(decimal string of ordinal)); pinned so
// independent implementations agree bit-for-bit.
uint64_t per_document_seed(uint64_t global_seed, uint64_t ordinal);

struct SubstitutionResult {
    std::string text;  // tokens joined by single spaces
    std::vector<AbbrevSample> samples;
    uint64_t match_count = 0;
    uint64_t substituted_count = 0;
};

// Walks matches left-to-right drawing u = next_u64 / 2^64 from a
// splitmix64 stream seeded by per_document_seed; a match is replaced by its
// abbreviation iff u < probability. Sample locations index the rewritten
// token sequence.
SubstitutionResult substitute(const TokenizedDoc& tdoc, const std::vector<MatchSpan>& matches,
                              const MappingTable& table, const SubstitutionConfig& cfg);

}  // namespace medalforge

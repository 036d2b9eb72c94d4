#include "medalforge/mapping_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "medalforge/errors.hpp"
#include "medalforge/text.hpp"

namespace medalforge {

MappingTable::MappingTable(std::vector<Mapping> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Mapping& a, const Mapping& b) {
        if (a.abbreviation != b.abbreviation) return a.abbreviation < b.abbreviation;
        return a.expansion < b.expansion;
    });
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
    for (uint32_t i = 0; i < entries_.size(); ++i) {
        by_abbreviation_[entries_[i].abbreviation].push_back(i);
        by_expansion_[entries_[i].expansion].push_back(i);
    }
}

namespace {

bool contains_whitespace(const std::string& s) {
    for (unsigned char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            return true;
        }
    }
    return false;
}

// Lowercase, then reduce to the tokenizer's word tokens.
bool canonicalize_expansion(const std::string& raw, Mapping& out) {
    std::string lower = ascii_lower_copy(raw);
    auto spans = tokenize_spans(lower);
    if (spans.empty()) return false;
    out.expansion_tokens.clear();
    out.expansion.clear();
    for (const auto& sp : spans) {
        if (!out.expansion.empty()) out.expansion.push_back(' ');
        out.expansion.append(lower, sp.start, sp.length);
        out.expansion_tokens.emplace_back(lower.substr(sp.start, sp.length));
    }
    return true;
}

}  // namespace

MappingLoadReport load_mappings(std::istream& in) {
    MappingLoadReport report;
    std::vector<Mapping> entries;
    std::string line;
    uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t tab1 = line.find('\t');
        if (tab1 == std::string::npos) {
            report.issues.push_back({lineno, "expected at least 2 tab-separated fields"});
            continue;
        }
        size_t tab2 = line.find('\t', tab1 + 1);
        std::string abbrev = line.substr(0, tab1);
        std::string raw_expansion = tab2 == std::string::npos
                                        ? line.substr(tab1 + 1)
                                        : line.substr(tab1 + 1, tab2 - tab1 - 1);
        if (abbrev.empty() || contains_whitespace(abbrev)) {
            report.issues.push_back({lineno, "abbreviation must be non-empty without whitespace"});
            continue;
        }
        Mapping m;
        m.abbreviation = std::move(abbrev);
        if (!canonicalize_expansion(raw_expansion, m)) {
            report.issues.push_back({lineno, "expansion has no word tokens"});
            continue;
        }
        entries.push_back(std::move(m));
    }
    report.lines_read = lineno;
    report.table = MappingTable(std::move(entries));
    return report;
}

MappingLoadReport load_mappings_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dictionary file: " + path);
    return load_mappings(in);
}

MappingTable filter_ambiguous(const MappingTable& table, bool fixpoint) {
    const MappingTable* current = &table;
    MappingTable result;
    while (true) {
        std::vector<Mapping> kept;
        for (const Mapping& m : current->entries()) {
            bool ambiguous_abbrev = current->by_abbreviation().at(m.abbreviation).size() >= 2;
            bool unique_expansion = current->by_expansion().at(m.expansion).size() == 1;
            if (ambiguous_abbrev && unique_expansion) kept.push_back(m);
        }
        size_t before = current->size();
        result = MappingTable(std::move(kept));
        if (!fixpoint || result.size() == before) return result;
        current = &result;
    }
}

MappingStats mapping_stats(const MappingTable& table) {
    MappingStats stats;
    stats.pair_count = table.size();
    stats.abbreviation_count = table.by_abbreviation().size();
    stats.mean_expansions_per_abbreviation =
        stats.abbreviation_count == 0
            ? 0.0
            : static_cast<double>(stats.pair_count) / static_cast<double>(stats.abbreviation_count);
    return stats;
}

void serialize_mappings(const MappingTable& table, std::ostream& out) {
    for (const Mapping& m : table.entries()) {
        out << m.abbreviation << '\t' << m.expansion << '\n';
    }
}

}  // namespace medalforge

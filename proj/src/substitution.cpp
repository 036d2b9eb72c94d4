#include "medalforge/substitution.hpp"

#include <stdexcept>

namespace medalforge {

TokenizedDoc tokenize(Document doc) {
    TokenizedDoc tdoc;
    auto spans = tokenize_spans(doc.text);
    tdoc.tokens.reserve(spans.size());
    tdoc.lower_tokens.reserve(spans.size());
    tdoc.token_starts.reserve(spans.size());
    for (const auto& sp : spans) {
        std::string tok = doc.text.substr(sp.start, sp.length);
        tdoc.lower_tokens.push_back(ascii_lower_copy(tok));
        tdoc.tokens.push_back(std::move(tok));
        tdoc.token_starts.push_back(sp.start);
    }
    tdoc.doc = std::move(doc);
    return tdoc;
}

ExpansionMatcher::ExpansionMatcher(const MappingTable& table) : table_(&table) {
    nodes_.emplace_back();  // root
    for (uint32_t idx = 0; idx < table.entries().size(); ++idx) {
        const Mapping& m = table.entries()[idx];
        uint32_t node = 0;
        for (const std::string& tok : m.expansion_tokens) {
            auto [it, inserted] = token_ids_.try_emplace(tok, static_cast<uint32_t>(token_ids_.size()));
            uint32_t tid = it->second;
            auto child = nodes_[node].children.find(tid);
            if (child == nodes_[node].children.end()) {
                nodes_.emplace_back();
                child = nodes_[node].children.emplace(tid, static_cast<uint32_t>(nodes_.size() - 1)).first;
            }
            node = child->second;
        }
        if (nodes_[node].terminal < 0 ||
            m.abbreviation < table.entries()[nodes_[node].terminal].abbreviation) {
            nodes_[node].terminal = static_cast<int32_t>(idx);
        }
    }
}

uint32_t ExpansionMatcher::token_id(const std::string& token) const {
    auto it = token_ids_.find(token);
    return it == token_ids_.end() ? UINT32_MAX : it->second;
}

std::vector<MatchSpan> ExpansionMatcher::find(const TokenizedDoc& tdoc) const {
    std::vector<MatchSpan> matches;
    const auto& toks = tdoc.lower_tokens;
    const size_t n = toks.size();
    size_t i = 0;
    while (i < n) {
        uint32_t node = 0;
        int32_t best_entry = -1;
        size_t best_len = 0;
        for (size_t j = i; j < n; ++j) {
            uint32_t tid = token_id(toks[j]);
            if (tid == UINT32_MAX) break;
            auto it = nodes_[node].children.find(tid);
            if (it == nodes_[node].children.end()) break;
            node = it->second;
            if (nodes_[node].terminal >= 0) {
                best_entry = nodes_[node].terminal;
                best_len = j - i + 1;
            }
        }
        if (best_entry >= 0) {
            matches.push_back({i, best_len, static_cast<uint32_t>(best_entry)});
            i += best_len;
        } else {
            ++i;
        }
    }
    return matches;
}

std::vector<MatchSpan> find_expansion_matches(const TokenizedDoc& tdoc, const MappingTable& table) {
    return ExpansionMatcher(table).find(tdoc);
}

uint64_t per_document_seed(uint64_t global_seed, uint64_t ordinal) {
    return splitmix64(global_seed ^ fnv1a64(std::to_string(ordinal)));
}

SubstitutionResult substitute(const TokenizedDoc& tdoc, const std::vector<MatchSpan>& matches,
                              const MappingTable& table, const SubstitutionConfig& cfg) {
    if (cfg.probability < 0.0 || cfg.probability > 1.0) {
        throw std::invalid_argument("substitution probability must be in [0, 1]");
    }
    SubstitutionResult result;
    result.match_count = matches.size();

    SplitMix64 gen(per_document_seed(cfg.global_seed, tdoc.doc.ordinal));

    // Output token sequence plus (location, entry) for each substitution.
    std::vector<std::pair<uint64_t, uint32_t>> hits;
    std::vector<const std::string*> out_tokens;
    out_tokens.reserve(tdoc.tokens.size());
    size_t next_tok = 0;
    for (const MatchSpan& m : matches) {
        double u = gen.next_unit();
        while (next_tok < m.start) out_tokens.push_back(&tdoc.tokens[next_tok++]);
        if (u < cfg.probability) {
            const Mapping& mapping = table.entries()[m.mapping_index];
            hits.emplace_back(out_tokens.size(), m.mapping_index);
            out_tokens.push_back(&mapping.abbreviation);
            next_tok += m.length;
        }
        // An unsubstituted match keeps its tokens; they are copied by the
        // catch-up loop on the next iteration.
    }
    while (next_tok < tdoc.tokens.size()) out_tokens.push_back(&tdoc.tokens[next_tok++]);

    size_t text_len = out_tokens.empty() ? 0 : out_tokens.size() - 1;
    for (const auto* t : out_tokens) text_len += t->size();
    result.text.reserve(text_len);
    for (size_t k = 0; k < out_tokens.size(); ++k) {
        if (k) result.text.push_back(' ');
        result.text.append(*out_tokens[k]);
    }

    result.substituted_count = hits.size();
    result.samples.reserve(hits.size());
    for (const auto& [location, entry_idx] : hits) {
        const Mapping& mapping = table.entries()[entry_idx];
        AbbrevSample s;
        s.doc_id = tdoc.doc.id;
        s.text = result.text;
        s.location = location;
        s.label = mapping.expansion;
        s.abbreviation = mapping.abbreviation;
        result.samples.push_back(std::move(s));
    }
    return result;
}

}  // namespace medalforge

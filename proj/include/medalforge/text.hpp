#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace medalforge {

// Byte span of one token within the original text.
struct TokenSpan {
    size_t start = 0;
    size_t length = 0;
};

// A token is a maximal run of word bytes, where a word byte is an ASCII
// alphanumeric or any byte >= 0x80 (so multi-byte UTF-8 sequences stay
// intact). '-' and '\'' join a run only when flanked by word bytes on both
// sides; every other byte separates tokens.
std::vector<TokenSpan> tokenize_spans(std::string_view text);

inline bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
           (c >= 'a' && c <= 'z') || c >= 0x80;
}

// ASCII-only lowercasing; non-ASCII bytes pass through.
inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string ascii_lower_copy(std::string_view s);

}  // namespace medalforge

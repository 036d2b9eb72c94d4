#include "medalforge/text.hpp"

namespace medalforge {

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
    std::vector<TokenSpan> spans;
    const size_t n = text.size();
    size_t i = 0;
    while (i < n) {
        if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        ++i;
        while (i < n) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (is_word_byte(c)) {
                ++i;
            } else if ((c == '-' || c == '\'') && i + 1 < n &&
                       is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
                i += 2;
            } else {
                break;
            }
        }
        spans.push_back({start, i - start});
    }
    return spans;
}

std::string ascii_lower_copy(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = ascii_lower(c);
    return out;
}

}  // namespace medalforge

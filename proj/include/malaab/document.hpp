#pragma once

#include "malaab/morphology.hpp"

#include <string>
#include <vector>

namespace malaab {

enum class TokenKind : uint8_t { Word, Number, Punct };

struct Token {
    std::string raw;         // surface as written
    std::string normalized;  // diacritics and tatweel stripped
    size_t begin = 0;        // byte offsets into the document text
    size_t end = 0;
    TokenKind kind = TokenKind::Word;
    int digit_count = 0;     // Number tokens only
    std::vector<Segmentation> analyses;  // Word tokens only

    bool unknown() const { return kind == TokenKind::Word && analyses.empty(); }
};

struct Document {
    std::string id;
    std::string text;
    std::vector<Token> tokens;
};

// Splits on whitespace and punctuation (punctuation tokens retained), turns
// digit runs into Number tokens, and attaches segmentation analyses to every
// word token.
Document tokenize(const std::string& id, std::string text, const Lexicon& lexicon);

}  // namespace malaab

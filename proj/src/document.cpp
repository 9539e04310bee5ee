#include "malaab/document.hpp"

#include "malaab/utf8.hpp"

namespace malaab {

namespace {

bool is_space(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x00A0;
}

bool is_punct(char32_t cp) {
    switch (cp) {
        case '.': case ',': case ';': case ':': case '!': case '?':
        case '(': case ')': case '[': case ']': case '"': case '\'':
        case '-': case '/': case 0x2013: case 0x2014:  // en/em dash
        case 0x060C:  // ،
        case 0x061B:  // ؛
        case 0x061F:  // ؟
        case 0x00AB: case 0x00BB:  // « »
            return true;
        default:
            return false;
    }
}

}  // namespace

Document tokenize(const std::string& id, std::string text, const Lexicon& lexicon) {
    Document doc;
    doc.id = id;
    doc.text = std::move(text);

    const std::string_view sv = doc.text;
    size_t i = 0;
    while (i < sv.size()) {
        size_t start = i;
        char32_t cp = utf8::decode(sv, i);
        if (is_space(cp)) continue;

        Token tok;
        tok.begin = start;
        if (is_punct(cp)) {
            tok.kind = TokenKind::Punct;
            tok.end = i;
        } else if (utf8::is_digit(cp)) {
            tok.kind = TokenKind::Number;
            tok.digit_count = 1;
            size_t next = i;
            while (next < sv.size()) {
                size_t probe = next;
                const char32_t d = utf8::decode(sv, probe);
                if (!utf8::is_digit(d)) break;
                next = probe;
                ++tok.digit_count;
            }
            i = next;
            tok.end = i;
        } else {
            tok.kind = TokenKind::Word;
            size_t next = i;
            while (next < sv.size()) {
                size_t probe = next;
                const char32_t c = utf8::decode(sv, probe);
                if (is_space(c) || is_punct(c) || utf8::is_digit(c)) break;
                next = probe;
            }
            i = next;
            tok.end = i;
        }
        tok.raw = std::string(sv.substr(tok.begin, tok.end - tok.begin));
        tok.normalized =
            tok.kind == TokenKind::Word ? utf8::normalize_arabic(tok.raw) : tok.raw;
        if (tok.kind == TokenKind::Word && !tok.normalized.empty())
            tok.analyses = segment(tok.normalized, lexicon);
        doc.tokens.push_back(std::move(tok));
    }
    return doc;
}

}  // namespace malaab

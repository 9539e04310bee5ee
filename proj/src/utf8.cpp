#include "malaab/utf8.hpp"

namespace malaab::utf8 {

char32_t decode(std::string_view s, size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> codepoints(std::string_view s) {
    std::vector<char32_t> cps;
    size_t i = 0;
    while (i < s.size()) cps.push_back(decode(s, i));
    return cps;
}

std::string from_codepoints(const std::vector<char32_t>& cps) {
    std::string out;
    for (char32_t cp : cps) append(out, cp);
    return out;
}

size_t encoded_size(char32_t cp) {
    if (cp < 0x80) return 1;
    if (cp < 0x800) return 2;
    if (cp < 0x10000) return 3;
    return 4;
}

bool is_arabic_letter(char32_t cp) {
    if (cp >= 0x0621 && cp <= 0x063A) return true;
    if (cp >= 0x0641 && cp <= 0x064A) return true;
    if (cp == 0x0629 || cp == 0x0649) return true;  // covered above; kept explicit
    if (cp >= 0x0671 && cp <= 0x06D3) return true;  // extended letters (e.g. Farsi yeh)
    return false;
}

bool is_arabic_diacritic(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

bool is_tatweel(char32_t cp) { return cp == 0x0640; }

bool is_digit(char32_t cp) {
    return (cp >= '0' && cp <= '9') || (cp >= 0x0660 && cp <= 0x0669);
}

int digit_value(char32_t cp) {
    if (cp >= '0' && cp <= '9') return static_cast<int>(cp - '0');
    if (cp >= 0x0660 && cp <= 0x0669) return static_cast<int>(cp - 0x0660);
    return -1;
}

std::string normalize_arabic(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        const char32_t cp = decode(s, i);
        if (is_arabic_diacritic(cp) || is_tatweel(cp)) continue;
        append(out, cp);
    }
    return out;
}

}  // namespace malaab::utf8

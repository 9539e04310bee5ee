#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace malaab::utf8 {

// Decodes the code point starting at byte offset i and advances i past it.
// Invalid bytes decode as U+FFFD and advance by one.
char32_t decode(std::string_view s, size_t& i);

void append(std::string& out, char32_t cp);

std::vector<char32_t> codepoints(std::string_view s);

std::string from_codepoints(const std::vector<char32_t>& cps);

size_t encoded_size(char32_t cp);

bool is_arabic_letter(char32_t cp);
bool is_arabic_diacritic(char32_t cp);  // tashkeel, U+064B..U+0652
bool is_tatweel(char32_t cp);           // U+0640
bool is_digit(char32_t cp);             // ASCII or Arabic-Indic
int digit_value(char32_t cp);

// Strips tashkeel diacritics and tatweel; leaves hamza/alef variants alone.
std::string normalize_arabic(std::string_view s);

}  // namespace malaab::utf8

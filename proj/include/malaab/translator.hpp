#pragma once

#include "malaab/recognizer.hpp"

#include <map>
#include <optional>
#include <string>

namespace malaab {

// One translated component with the features that drive agreement, linker
// selection, and elision.
struct FrenchFragment {
    std::string surface;
    std::optional<Gender> gender;
    std::optional<Number> number;
    bool detz = false;
    bool apostrophe = false;
    ComponentType role = ComponentType::CommonNoun;
    const LexEntry* fr_entry = nullptr;
};

// Deterministic Arabic→Latin letter map with multi-letter overrides and a
// named vowel policy. File lines are `arabic TAB latin`; a `policy` line
// names the policy.
class RomanizationTable {
public:
    static RomanizationTable parse(std::string_view text,
                                   const std::string& filename = "<translit>");
    std::string serialize() const;

    const std::map<std::string, std::string>& mappings() const { return map_; }
    const std::string& policy() const { return policy_; }
    size_t max_key_codepoints() const { return max_key_cps_; }

    // Letters of `word` (normalized Arabic) that have no mapping.
    std::vector<std::string> unmapped_letters(std::string_view word) const;

private:
    std::map<std::string, std::string> map_;
    std::string policy_ = "fr-final-e";
    size_t max_key_cps_ = 1;
};

// Letter-by-letter romanization, idempotent on Latin input, first letter
// capitalized. Throws EmptyInput on an empty string.
std::string transliterate(const std::string& arabic, const RomanizationTable& table);

class MonthTable {
public:
    static MonthTable parse(std::string_view text, const std::string& filename = "<months>");
    std::string serialize() const;

    std::optional<std::string> french_for(std::string_view arabic_month) const;
    const std::map<std::string, std::string>& mappings() const { return map_; }

private:
    std::map<std::string, std::string> map_;
};

// Generates the French rendering of a component tree: per-component transfer,
// adjective fronting, linker selection, agreement, elision, transliteration
// fallback, and date months.
class Translator {
public:
    Translator(const Lexicon& french, const std::vector<Paradigm>& paradigms,
               const RomanizationTable& translit, const MonthTable& months)
        : french_(french), paradigms_(paradigms), translit_(translit), months_(months) {}

    // Leaf or Date transfer into a French fragment.
    FrenchFragment transfer(const ComponentTree& node) const;

    // Adjective inflection matching the head's gender and number.
    std::string agree(const FrenchFragment& adjective, const FrenchFragment& head) const;

    // Joining string before a Toponym/CommonNoun complement.
    std::string choose_linker(const FrenchFragment& left, const FrenchFragment& right) const;

    // French component order: category, dates, adjectives, name parts,
    // trailing toponyms. Returns indices into `children`.
    std::vector<size_t> reorder(const std::vector<ComponentTree>& children) const;

    // "<day> <french month>" through the month table.
    std::string translate_date(const ComponentTree& date) const;

    // Recursive translation; annotates every node's french field and returns
    // the venue's French string.
    std::string translate(ComponentTree& tree) const;

private:
    FrenchFragment translate_venue(ComponentTree& tree) const;
    FrenchFragment fragment_for(ComponentTree& child) const;

    const Lexicon& french_;
    const std::vector<Paradigm>& paradigms_;
    const RomanizationTable& translit_;
    const MonthTable& months_;
};

}  // namespace malaab

#pragma once

#include "malaab/features.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace malaab {

enum class Lang : uint8_t { Arabic, French };

struct SourceLoc {
    std::string file;
    int line = 0;

    std::string to_string() const { return file + ":" + std::to_string(line); }
};

// One dictionary line: lemma, category, feature flags, optional inflection
// paradigm (FLX=) and optional French translation link (FR=).
struct LexEntry {
    std::string lemma;
    Lang lang = Lang::Arabic;
    FeatureSet features;
    std::string paradigm_id;   // empty when absent
    std::string translation;   // empty when absent
    SourceLoc source;

    bool operator==(const LexEntry& o) const {
        return lemma == o.lemma && lang == o.lang && features == o.features &&
               paradigm_id == o.paradigm_id && translation == o.translation;
    }
};

// One surface transform: strip `strip` code points from the lemma end, then
// append `append` (or prepend when `prefix` is set), emitting extra features.
struct ParadigmRule {
    int strip = 0;
    std::string append;
    bool prefix = false;
    FlagSet flags;
    std::optional<Gender> gender;
    std::optional<Number> number;
};

struct Paradigm {
    std::string id;
    std::vector<ParadigmRule> rules;
};

// Dictionary file parsing. Line grammar:
//   lemma , CAT ( '+' flag | '+' key '=' value )*
// '#' starts a comment line; whitespace around '+' is tolerated; multiword
// lemmas and values are double-quoted.
std::vector<LexEntry> parse_dictionary(std::string_view text, Lang lang,
                                       const std::string& filename = "<dict>");

std::string serialize_dictionary(const std::vector<LexEntry>& entries);

// Paradigm file: `id : rule (';' rule)*`, rule `<strip>:<append>[/features]`,
// `0:` being the identity rule. A leading '^' on the append string marks a
// prefix transform.
std::vector<Paradigm> parse_paradigms(std::string_view text,
                                      const std::string& filename = "<flx>");

std::string serialize_paradigms(const std::vector<Paradigm>& paradigms);

struct InflectedForm {
    std::string surface;
    FeatureSet features;
};

// Applies every paradigm rule to the entry's lemma. Entries without a
// paradigm yield just the lemma with its base features.
std::vector<InflectedForm> expand_inflections(const LexEntry& entry,
                                              const std::vector<Paradigm>& paradigms);

struct Analysis {
    const LexEntry* entry = nullptr;
    FeatureSet features;  // entry features merged with inflection features
};

// Immutable surface-form index over a dictionary plus its paradigms. Safe to
// share across threads once built.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(const Lexicon&) = delete;
    Lexicon& operator=(const Lexicon&) = delete;
    Lexicon(Lexicon&&) = default;
    Lexicon& operator=(Lexicon&&) = default;

    static Lexicon build(std::vector<LexEntry> entries, const std::vector<Paradigm>& paradigms);

    // Exact match on a normalized surface form; returns all homographs.
    const std::vector<Analysis>& lookup(std::string_view surface) const;

    // Entries whose lemma is exactly `lemma` (used to resolve FR= links).
    std::vector<const LexEntry*> lookup_lemma(std::string_view lemma) const;

    const std::vector<LexEntry>& entries() const { return entries_; }

    // Longest multiword surface in the index, in whitespace-separated tokens.
    int max_surface_tokens() const { return max_surface_tokens_; }

    // All indexed surface forms, in deterministic order.
    std::vector<std::string> surfaces() const;

private:
    std::vector<LexEntry> entries_;
    std::unordered_map<std::string, std::vector<Analysis>> index_;
    std::unordered_map<std::string, std::vector<const LexEntry*>> by_lemma_;
    int max_surface_tokens_ = 1;
};

}  // namespace malaab

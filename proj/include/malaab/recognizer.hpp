#pragma once

#include "malaab/engine.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace malaab {

enum class ComponentType : uint8_t {
    SportVenue,
    SportVenueCategory,
    Ethnonym,
    Toponym,
    Adjective,
    Pragmonym,
    CommonNoun,
    Function,
    Demonym,
    Date,
};

enum class ToponymKind : uint8_t { Unspecified, Ville, Pays, Region };

const char* component_type_name(ComponentType t);
const char* toponym_kind_name(ToponymKind k);

// A recognized venue NE with typed, possibly nested children. Lexical leaves
// carry exactly one resolved analysis; the French side is attached by the
// translator.
struct ComponentTree {
    ComponentType type = ComponentType::SportVenue;
    ToponymKind kind = ToponymKind::Unspecified;
    std::string arabic;
    size_t char_begin = 0;
    size_t char_end = 0;
    const LexEntry* lex_entry = nullptr;
    FeatureSet lex_features;
    std::string french;
    bool hyphen_before = false;      // preceded by a hyphen inside the NE
    bool club_candidate = false;     // category + demonym only (trigger ambiguity)
    bool untranslated_month = false; // date whose month has no French rendering
    std::string day;                 // Date nodes: day-number surface
    std::string month_arabic;        // Date nodes: month surface
    const LexEntry* month_entry = nullptr;
    FeatureSet month_features;
    std::vector<ComponentTree> children;
};

std::vector<ComponentTree> recognize(const Document& doc, const Grammar& grammar,
                                     const Lexicon& lexicon);

// Nested XML in the component-tree tag vocabulary; element text is
// "arabic = french" once a translation is attached.
std::string to_xml(const ComponentTree& tree, int indent = 0);

nlohmann::json to_json(const ComponentTree& tree);

}  // namespace malaab

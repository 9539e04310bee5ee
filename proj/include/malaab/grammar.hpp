#pragma once

#include "malaab/features.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace malaab {

enum class CaptureTag : uint8_t {
    None,
    SportVenueCategory,
    Ethnonym,
    Toponym,
    Adjective,
    Pragmonym,
    CommonNoun,
    Function,
    CatGeo,
    DateNum,
    Month,
    SportVenue,
    Date,
};

const char* capture_tag_name(CaptureTag tag);
std::optional<CaptureTag> parse_capture_tag(std::string_view name);

// How a lexical arc treats the token's proclitics. Conjunction clitics are
// never accepted inside an NE.
enum class ArticlePolicy : uint8_t {
    EntryDetOpt,  // article accepted only when the entry carries DetOpt
    Require,
    Forbid,
    Any,
};

namespace label {

struct Literal {
    std::string text;
    bool operator==(const Literal&) const = default;
};

struct Lexical {
    FeatureConstraint constraint;
    ArticlePolicy article = ArticlePolicy::EntryDetOpt;
    bool require_preposition = false;
    bool operator==(const Lexical&) const = default;
};

struct DigitRun {
    int min_digits = 1;
    int max_digits = 1;
    bool operator==(const DigitRun&) const = default;
};

struct SubgraphCall {
    std::string name;
    bool operator==(const SubgraphCall&) const = default;
};

struct Epsilon {
    bool operator==(const Epsilon&) const = default;
};

// A word token with no lexicon analysis (transliterable proper-name slot).
struct Unknown {
    bool operator==(const Unknown&) const = default;
};

}  // namespace label

using ArcLabel = std::variant<label::Literal, label::Lexical, label::DigitRun,
                              label::SubgraphCall, label::Epsilon, label::Unknown>;

struct Arc {
    int from = 0;
    int to = 0;
    ArcLabel label;
    CaptureTag capture = CaptureTag::None;
    bool operator==(const Arc&) const = default;
};

struct Graph {
    std::string name;
    std::vector<std::string> state_names;  // index == state id; [0] is initial
    std::vector<int> finals;
    std::vector<Arc> arcs;
    bool operator==(const Graph&) const = default;

    bool is_final(int state) const;
    int initial() const { return 0; }
};

struct Grammar {
    std::vector<Graph> graphs;
    int main = 0;
    bool operator==(const Grammar&) const = default;

    const Graph* find(std::string_view name) const;
    int index_of(std::string_view name) const;  // -1 when absent
};

// Parses and structurally validates the textual grammar DSL:
//   graph NAME { qA -[LABEL (@Tag)?]-> qB; final qX; }  main NAME;
// Labels: "literal", <CAT+flag+...>, <UNK>, #digits(min,max), :SUBGRAPH, ~eps.
// '//' starts a comment. The first state mentioned in a graph is its initial.
Grammar parse_grammar(std::string_view text);

std::string serialize_grammar(const Grammar& grammar);

}  // namespace malaab

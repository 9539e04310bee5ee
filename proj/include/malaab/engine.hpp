#pragma once

#include "malaab/document.hpp"
#include "malaab/grammar.hpp"

#include <optional>
#include <vector>

namespace malaab {

// One analysis accepted by a lexical arc; seg_index addresses the token's
// segmentation list, -1 for multiword surface matches.
struct LexChoice {
    Analysis analysis;
    int seg_index = -1;
};

struct CaptureNode {
    CaptureTag tag = CaptureTag::None;
    int tok_begin = 0;
    int tok_end = 0;  // exclusive
    std::vector<LexChoice> choices;      // lexical arcs
    std::vector<CaptureNode> children;   // tagged subgraph calls
};

struct MatchResult {
    int tok_begin = 0;
    int tok_end = 0;  // exclusive
    size_t char_begin = 0;
    size_t char_end = 0;
    std::vector<CaptureNode> captures;
};

// Longest match beginning at `start`, depth-first over arcs in declaration
// order; equal-length matches resolve to the first path found. Subgraph
// recursion is bounded; a non-consuming cycle raises RecursionLimit.
std::optional<MatchResult> apply(const Grammar& grammar, const Document& doc,
                                 const Lexicon& lexicon, int start);

// Left-to-right sweep emitting non-overlapping leftmost-longest matches.
std::vector<MatchResult> scan(const Grammar& grammar, const Document& doc,
                              const Lexicon& lexicon);

}  // namespace malaab

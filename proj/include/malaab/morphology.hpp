#pragma once

#include "malaab/lexicon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace malaab {

// Decomposition of one agglutinated token into proclitics plus a
// lexicon-validated stem. Proclitic order is conjunction (و/ف), then
// preposition (ل/ب), then the definite article ال, each at most once.
struct Segmentation {
    std::vector<std::string> proclitics;
    std::string stem;
    std::vector<Analysis> stem_analyses;
    bool determined = false;  // ال present
    bool has_preposition = false;
    bool has_conjunction = false;

    std::string reconstruct() const;
};

// Every decomposition of a normalized token whose residual stem has at least
// one lexicon analysis, ordered by decreasing stem length. An unanalyzable
// token yields an empty list.
std::vector<Segmentation> segment(const std::string& token, const Lexicon& lexicon);

// Remainder after a leading ال, if the remainder is non-empty.
std::optional<std::string> strip_article(const std::string& token);

}  // namespace malaab

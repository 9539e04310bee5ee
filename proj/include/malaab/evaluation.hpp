#pragma once

#include "malaab/recognizer.hpp"

#include <set>
#include <string>
#include <vector>

namespace malaab {

struct GoldAnnotation {
    std::string doc_id;
    size_t begin = 0;  // byte offsets into the document text
    size_t end = 0;
    std::string arabic;
    std::string french;
};

struct Prediction {
    std::string doc_id;
    size_t begin = 0;
    size_t end = 0;
    std::string arabic;
    std::string french;
};

struct EvalReport {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    double translation_accuracy = 0.0;  // over true positives
};

// Collapses whitespace runs, trims, and drops spaces around hyphens so that
// inconsistent hyphen spacing does not affect string comparison.
std::string normalize_ws(std::string_view s);

// Strict char-span matching; translation accuracy compares the French strings
// of span-matched pairs after whitespace normalization. Throws DocMismatch
// when a prediction references a doc id outside `doc_ids`.
EvalReport score(const std::vector<Prediction>& predicted,
                 const std::vector<GoldAnnotation>& gold,
                 const std::set<std::string>& doc_ids);

struct ConcordanceRow {
    std::string before;  // verbatim source context
    std::string pair;    // "arabic/french"
    std::string after;
};

// One row per match, in document order, with at most `width` context tokens
// on each side.
std::vector<ConcordanceRow> concordance(const Document& doc,
                                        const std::vector<ComponentTree>& matches, int width);

// Plain-text report, ratios rounded to two decimals.
std::string format_eval_report(const EvalReport& report);

// Gold corpus TSV: doc_id, start, end, arabic, french.
std::vector<GoldAnnotation> parse_gold_tsv(std::string_view text,
                                           const std::string& filename = "<gold>");
std::string serialize_predictions_tsv(const std::vector<Prediction>& predictions);

}  // namespace malaab

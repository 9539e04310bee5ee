#pragma once

#include "malaab/evaluation.hpp"
#include "malaab/translator.hpp"

#include <string>
#include <vector>

namespace malaab {

struct ResourceTexts {
    std::string dict_ar;
    std::string dict_fr;
    std::string paradigms;
    std::string grammar;
    std::string translit;
    std::string months;
};

struct ResourcePaths {
    std::string dict_ar;
    std::string dict_fr;
    std::string paradigms;
    std::string grammar;
    std::string translit;
    std::string months;
};

// Validated, cross-linked resources: every FLX and FR link resolves, every
// grammar subgraph exists, and the romanization table covers the Arabic
// letters used by the dictionaries.
struct Bundle {
    Lexicon arabic;
    Lexicon french;
    std::vector<Paradigm> paradigms;
    Grammar grammar;
    RomanizationTable translit;
    MonthTable months;
};

Bundle compile_bundle(const ResourceTexts& texts);
Bundle compile_bundle(const ResourcePaths& paths);

// The on-disk bundle is a versioned container around the canonical text form
// of each resource; recompiling unchanged sources is byte-identical.
std::string serialize_bundle(const Bundle& bundle);
Bundle parse_bundle(std::string_view data);

void save_bundle(const Bundle& bundle, const std::string& path);
Bundle load_bundle(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// Tokenize → recognize → translate over a shared immutable bundle.
class Pipeline {
public:
    explicit Pipeline(const Bundle& bundle)
        : bundle_(bundle),
          translator_(bundle.french, bundle.paradigms, bundle.translit, bundle.months) {}

    Document make_document(const std::string& id, std::string text) const {
        return tokenize(id, std::move(text), bundle_.arabic);
    }

    std::vector<ComponentTree> process(const Document& doc) const;

    const Translator& translator() const { return translator_; }
    const Bundle& bundle() const { return bundle_; }

private:
    const Bundle& bundle_;
    Translator translator_;
};

std::vector<Prediction> predictions_from(const std::string& doc_id,
                                         const std::vector<ComponentTree>& trees);

}  // namespace malaab

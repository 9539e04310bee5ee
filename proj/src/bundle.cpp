#include "malaab/bundle.hpp"

#include "malaab/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace malaab {

namespace {

void check_cross_links(const Bundle& bundle) {
    for (const LexEntry& entry : bundle.arabic.entries()) {
        if (entry.translation.empty()) continue;
        if (bundle.french.lookup_lemma(entry.translation).empty())
            throw Error(ErrorCode::MissingFrenchEntry,
                        "'" + entry.translation + "' (linked from '" + entry.lemma +
                            "' at " + entry.source.to_string() + ")");
    }
    for (const LexEntry& entry : bundle.arabic.entries()) {
        const auto missing = bundle.translit.unmapped_letters(entry.lemma);
        if (!missing.empty())
            throw Error(ErrorCode::ResourceError,
                        "romanization table lacks a mapping for '" + missing.front() +
                            "' used in '" + entry.lemma + "'");
    }
}

}  // namespace

Bundle compile_bundle(const ResourceTexts& texts) {
    Bundle bundle;
    std::vector<LexEntry> ar = parse_dictionary(texts.dict_ar, Lang::Arabic, "dict_ar");
    std::vector<LexEntry> fr = parse_dictionary(texts.dict_fr, Lang::French, "dict_fr");
    bundle.paradigms = parse_paradigms(texts.paradigms, "paradigms");
    bundle.arabic = Lexicon::build(std::move(ar), bundle.paradigms);
    bundle.french = Lexicon::build(std::move(fr), bundle.paradigms);
    bundle.grammar = parse_grammar(texts.grammar);
    bundle.translit = RomanizationTable::parse(texts.translit, "translit");
    bundle.months = MonthTable::parse(texts.months, "months");
    check_cross_links(bundle);
    return bundle;
}

Bundle compile_bundle(const ResourcePaths& paths) {
    ResourceTexts texts;
    texts.dict_ar = read_text_file(paths.dict_ar);
    texts.dict_fr = read_text_file(paths.dict_fr);
    texts.paradigms = read_text_file(paths.paradigms);
    texts.grammar = read_text_file(paths.grammar);
    texts.translit = read_text_file(paths.translit);
    texts.months = read_text_file(paths.months);
    return compile_bundle(texts);
}

std::string serialize_bundle(const Bundle& bundle) {
    nlohmann::json j;
    j["format"] = "malaab-bundle";
    j["version"] = 1;
    j["resources"] = {
        {"dict_ar", serialize_dictionary(bundle.arabic.entries())},
        {"dict_fr", serialize_dictionary(bundle.french.entries())},
        {"paradigms", serialize_paradigms(bundle.paradigms)},
        {"grammar", serialize_grammar(bundle.grammar)},
        {"translit", bundle.translit.serialize()},
        {"months", bundle.months.serialize()},
    };
    return j.dump(1) + "\n";
}

Bundle parse_bundle(std::string_view data) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(data);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ResourceError, std::string("malformed bundle: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "malaab-bundle")
        throw Error(ErrorCode::ResourceError, "not a malaab bundle");
    if (j.value("version", 0) != 1)
        throw Error(ErrorCode::ResourceError, "unsupported bundle version");
    const auto& r = j.at("resources");
    ResourceTexts texts;
    texts.dict_ar = r.value("dict_ar", "");
    texts.dict_fr = r.value("dict_fr", "");
    texts.paradigms = r.value("paradigms", "");
    texts.grammar = r.value("grammar", "");
    texts.translit = r.value("translit", "");
    texts.months = r.value("months", "");
    return compile_bundle(texts);
}

void save_bundle(const Bundle& bundle, const std::string& path) {
    write_text_file(path, serialize_bundle(bundle));
}

Bundle load_bundle(const std::string& path) { return parse_bundle(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

std::vector<ComponentTree> Pipeline::process(const Document& doc) const {
    std::vector<ComponentTree> trees = recognize(doc, bundle_.grammar, bundle_.arabic);
    for (ComponentTree& tree : trees) translator_.translate(tree);
    return trees;
}

std::vector<Prediction> predictions_from(const std::string& doc_id,
                                         const std::vector<ComponentTree>& trees) {
    std::vector<Prediction> out;
    out.reserve(trees.size());
    for (const ComponentTree& t : trees)
        out.push_back({doc_id, t.char_begin, t.char_end, t.arabic, t.french});
    return out;
}

}  // namespace malaab

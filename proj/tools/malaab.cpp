#include "malaab/bundle.hpp"
#include "malaab/errors.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <set>

namespace {

using namespace malaab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitIo = 3;

std::string doc_id_for(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct TaggedDoc {
    Document doc;
    std::vector<ComponentTree> trees;
};

// Documents are independent; process them concurrently and merge in input
// order so output stays deterministic.
std::vector<TaggedDoc> tag_documents(const Pipeline& pipeline,
                                     const std::vector<std::string>& inputs) {
    std::vector<std::string> texts;
    texts.reserve(inputs.size());
    for (const std::string& path : inputs) texts.push_back(read_text_file(path));

    std::vector<std::future<TaggedDoc>> futures;
    futures.reserve(inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&pipeline, &inputs, &texts, i] {
            TaggedDoc out;
            out.doc = pipeline.make_document(doc_id_for(inputs[i]), std::move(texts[i]));
            out.trees = pipeline.process(out.doc);
            return out;
        }));
    }
    std::vector<TaggedDoc> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        write_text_file(out_path, content);
    }
}

int run_compile(const ResourcePaths& paths, const std::string& out_path) {
    Bundle bundle = compile_bundle(paths);
    save_bundle(bundle, out_path);
    return kExitOk;
}

int run_tag(const std::string& bundle_path, const std::vector<std::string>& inputs,
            const std::string& format, int width, const std::string& out_path) {
    const Bundle bundle = load_bundle(bundle_path);
    const Pipeline pipeline(bundle);
    const std::vector<TaggedDoc> tagged = tag_documents(pipeline, inputs);

    std::string content;
    if (format == "xml") {
        content += "<Examples>\n";
        int n = 0;
        for (const TaggedDoc& td : tagged) {
            for (const ComponentTree& tree : td.trees) {
                ++n;
                content += "<Example" + std::to_string(n) + ">\n";
                content += to_xml(tree, 1);
                content += "</Example" + std::to_string(n) + ">\n";
            }
        }
        content += "</Examples>\n";
    } else if (format == "json") {
        nlohmann::json docs = nlohmann::json::array();
        for (const TaggedDoc& td : tagged) {
            nlohmann::json entities = nlohmann::json::array();
            for (const ComponentTree& tree : td.trees) entities.push_back(to_json(tree));
            docs.push_back({{"doc", td.doc.id}, {"entities", std::move(entities)}});
        }
        content = docs.dump(1) + "\n";
    } else if (format == "concordance") {
        for (const TaggedDoc& td : tagged) {
            for (const ConcordanceRow& row : concordance(td.doc, td.trees, width))
                content += row.before + "\t" + row.pair + "\t" + row.after + "\n";
        }
    } else if (format == "tsv") {
        for (const TaggedDoc& td : tagged)
            content += serialize_predictions_tsv(predictions_from(td.doc.id, td.trees));
    } else {
        std::cerr << "unknown format '" << format << "'\n";
        return kExitUsage;
    }
    emit(content, out_path);
    return kExitOk;
}

int run_eval(const std::string& bundle_path, const std::string& gold_path,
             const std::vector<std::string>& inputs, const std::string& out_path) {
    const Bundle bundle = load_bundle(bundle_path);
    const Pipeline pipeline(bundle);
    const std::vector<GoldAnnotation> gold =
        parse_gold_tsv(read_text_file(gold_path), gold_path);

    std::set<std::string> doc_ids;
    for (const std::string& path : inputs) doc_ids.insert(doc_id_for(path));
    for (const GoldAnnotation& g : gold)
        if (!doc_ids.count(g.doc_id))
            throw Error(ErrorCode::DocMismatch,
                        "gold references doc '" + g.doc_id + "' not among the inputs");

    std::vector<Prediction> predictions;
    for (const TaggedDoc& td : tag_documents(pipeline, inputs)) {
        const auto preds = predictions_from(td.doc.id, td.trees);
        predictions.insert(predictions.end(), preds.begin(), preds.end());
    }

    const EvalReport report = score(predictions, gold, doc_ids);
    std::fputs(format_eval_report(report).c_str(), stdout);
    if (!out_path.empty()) {
        nlohmann::json j = {
            {"tp", report.tp},
            {"fp", report.fp},
            {"fn", report.fn},
            {"precision", report.precision},
            {"recall", report.recall},
            {"f_measure", report.f_measure},
            {"translation_accuracy", report.translation_accuracy},
        };
        write_text_file(out_path, j.dump(1) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arabic sport-venue named-entity recognizer and Arabic-French translator"};
    app.require_subcommand(1);

    ResourcePaths paths;
    std::string bundle_path;
    if (const char* env = std::getenv("MALAAB_BUNDLE")) bundle_path = env;
    std::string out_path;
    std::string gold_path;
    std::string format = "xml";
    int width = 5;
    std::vector<std::string> inputs;

    CLI::App* compile = app.add_subcommand("compile", "Validate resources and build a bundle");
    compile->add_option("--dict-ar", paths.dict_ar, "Arabic dictionary")->required();
    compile->add_option("--dict-fr", paths.dict_fr, "French dictionary")->required();
    compile->add_option("--paradigms", paths.paradigms, "Inflection paradigms")->required();
    compile->add_option("--grammar", paths.grammar, "Venue grammar (DSL)")->required();
    compile->add_option("--translit", paths.translit, "Romanization table")->required();
    compile->add_option("--months", paths.months, "Month table")->required();
    compile->add_option("--out", out_path, "Bundle output path")->required();

    CLI::App* tag = app.add_subcommand("tag", "Recognize and translate venue NEs");
    tag->add_option("--bundle", bundle_path, "Compiled bundle (or $MALAAB_BUNDLE)");
    tag->add_option("--format", format, "xml|json|concordance|tsv");
    tag->add_option("--width", width, "Concordance context width in tokens");
    tag->add_option("--out", out_path, "Output file (default stdout)");
    tag->add_option("inputs", inputs, "Input documents")->required();

    CLI::App* eval = app.add_subcommand("eval", "Score against a gold corpus");
    eval->add_option("--bundle", bundle_path, "Compiled bundle (or $MALAAB_BUNDLE)");
    eval->add_option("--gold", gold_path, "Gold TSV")->required();
    eval->add_option("--out", out_path, "JSON report output path");
    eval->add_option("inputs", inputs, "Input documents")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compile->parsed()) return run_compile(paths, out_path);
        if (bundle_path.empty()) {
            std::cerr << "no bundle given (use --bundle or MALAAB_BUNDLE)\n";
            return kExitUsage;
        }
        if (tag->parsed()) return run_tag(bundle_path, inputs, format, width, out_path);
        if (eval->parsed()) return run_eval(bundle_path, gold_path, inputs, out_path);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::IoError ? kExitIo : kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}

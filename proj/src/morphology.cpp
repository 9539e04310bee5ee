#include "malaab/morphology.hpp"

#include <algorithm>

namespace malaab {

namespace {

const std::string kWaw = "و";        // و
const std::string kFa = "ف";         // ف
const std::string kLam = "ل";        // ل
const std::string kBa = "ب";         // ب
const std::string kArticle = "ال";  // ال

}  // namespace

std::string Segmentation::reconstruct() const {
    std::string out;
    for (const std::string& p : proclitics) out += p;
    out += stem;
    return out;
}

std::vector<Segmentation> segment(const std::string& token, const Lexicon& lexicon) {
    std::vector<Segmentation> results;

    const std::string* conjunctions[] = {nullptr, &kWaw, &kFa};
    const std::string* prepositions[] = {nullptr, &kLam, &kBa};
    const std::string* articles[] = {nullptr, &kArticle};

    for (const std::string* conj : conjunctions) {
        size_t off_c = 0;
        if (conj) {
            if (token.compare(0, conj->size(), *conj) != 0) continue;
            off_c = conj->size();
        }
        for (const std::string* prep : prepositions) {
            size_t off_p = off_c;
            if (prep) {
                if (token.compare(off_c, prep->size(), *prep) != 0) continue;
                off_p = off_c + prep->size();
            }
            for (const std::string* art : articles) {
                size_t off_a = off_p;
                if (art) {
                    if (token.compare(off_p, art->size(), *art) != 0) continue;
                    off_a = off_p + art->size();
                }
                if (off_a >= token.size()) continue;  // empty stem
                const std::string stem = token.substr(off_a);
                const std::vector<Analysis>& analyses = lexicon.lookup(stem);
                if (analyses.empty()) continue;

                Segmentation seg;
                if (conj) seg.proclitics.push_back(*conj);
                if (prep) seg.proclitics.push_back(*prep);
                if (art) seg.proclitics.push_back(*art);
                seg.stem = stem;
                seg.stem_analyses = analyses;
                seg.determined = art != nullptr;
                seg.has_preposition = prep != nullptr;
                seg.has_conjunction = conj != nullptr;
                results.push_back(std::move(seg));
            }
        }
    }

    std::stable_sort(results.begin(), results.end(),
                     [](const Segmentation& a, const Segmentation& b) {
                         return a.stem.size() > b.stem.size();
                     });
    return results;
}

std::optional<std::string> strip_article(const std::string& token) {
    if (token.size() <= kArticle.size()) return std::nullopt;
    if (token.compare(0, kArticle.size(), kArticle) != 0) return std::nullopt;
    return token.substr(kArticle.size());
}

}  // namespace malaab

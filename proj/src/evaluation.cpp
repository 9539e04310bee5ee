#include "malaab/evaluation.hpp"

#include "malaab/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace malaab {

std::string normalize_ws(std::string_view s) {
    std::string collapsed;
    bool in_space = false;
    for (char c : s) {
        const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
        if (space) {
            in_space = true;
            continue;
        }
        if (in_space && !collapsed.empty()) collapsed.push_back(' ');
        in_space = false;
        collapsed.push_back(c);
    }
    // Hyphen spacing varies in source material; normalize "a - b" to "a-b".
    std::string out;
    for (size_t i = 0; i < collapsed.size(); ++i) {
        if (collapsed[i] == '-' && !out.empty() && out.back() == ' ') out.pop_back();
        out.push_back(collapsed[i]);
        if (collapsed[i] == '-' && i + 1 < collapsed.size() && collapsed[i + 1] == ' ') ++i;
    }
    return out;
}

EvalReport score(const std::vector<Prediction>& predicted,
                 const std::vector<GoldAnnotation>& gold,
                 const std::set<std::string>& doc_ids) {
    for (const Prediction& p : predicted)
        if (!doc_ids.count(p.doc_id))
            throw Error(ErrorCode::DocMismatch, "prediction references unknown doc '" + p.doc_id + "'");

    std::map<std::tuple<std::string, size_t, size_t>, const GoldAnnotation*> gold_by_span;
    for (const GoldAnnotation& g : gold) gold_by_span[{g.doc_id, g.begin, g.end}] = &g;

    EvalReport report;
    long translated_ok = 0;
    std::set<std::tuple<std::string, size_t, size_t>> claimed;
    for (const Prediction& p : predicted) {
        const auto key = std::make_tuple(p.doc_id, p.begin, p.end);
        const auto it = gold_by_span.find(key);
        if (it != gold_by_span.end() && !claimed.count(key)) {
            claimed.insert(key);
            ++report.tp;
            if (normalize_ws(p.french) == normalize_ws(it->second->french)) ++translated_ok;
        } else {
            ++report.fp;
        }
    }
    report.fn = static_cast<long>(gold.size()) - report.tp;

    const auto ratio = [](long num, long den) { return den == 0 ? 0.0 : double(num) / double(den); };
    report.precision = ratio(report.tp, report.tp + report.fp);
    report.recall = ratio(report.tp, report.tp + report.fn);
    const double pr = report.precision + report.recall;
    report.f_measure = pr == 0.0 ? 0.0 : 2.0 * report.precision * report.recall / pr;
    report.translation_accuracy = ratio(translated_ok, report.tp);
    return report;
}

std::vector<ConcordanceRow> concordance(const Document& doc,
                                        const std::vector<ComponentTree>& matches, int width) {
    std::vector<ConcordanceRow> rows;
    const auto& tokens = doc.tokens;
    for (const ComponentTree& m : matches) {
        // Token range covered by the match.
        size_t first = 0;
        while (first < tokens.size() && tokens[first].end <= m.char_begin) ++first;
        size_t past = first;
        while (past < tokens.size() && tokens[past].begin < m.char_end) ++past;

        ConcordanceRow row;
        const size_t ctx_from = first >= static_cast<size_t>(width) ? first - width : 0;
        if (width > 0 && ctx_from < first)
            row.before = doc.text.substr(tokens[ctx_from].begin,
                                         m.char_begin - tokens[ctx_from].begin);
        const size_t ctx_to = std::min(tokens.size(), past + static_cast<size_t>(width));
        if (width > 0 && past < ctx_to)
            row.after = doc.text.substr(m.char_end, tokens[ctx_to - 1].end - m.char_end);
        row.pair = m.arabic + "/" + m.french;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_eval_report(const EvalReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "tp %ld\nfp %ld\nfn %ld\nprecision %.2f\nrecall %.2f\nf_measure %.2f\n"
                  "translation_accuracy %.2f\n",
                  r.tp, r.fp, r.fn, r.precision, r.recall, r.f_measure,
                  r.translation_accuracy);
    return buf;
}

std::vector<GoldAnnotation> parse_gold_tsv(std::string_view text, const std::string& filename) {
    std::vector<GoldAnnotation> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string line(
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        if (cols.size() != 5)
            throw Error(ErrorCode::ResourceError,
                        filename + ":" + std::to_string(lineno) + ": expected 5 TSV columns");
        GoldAnnotation g;
        g.doc_id = cols[0];
        try {
            g.begin = std::stoul(cols[1]);
            g.end = std::stoul(cols[2]);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ResourceError,
                        filename + ":" + std::to_string(lineno) + ": bad span offsets");
        }
        g.arabic = cols[3];
        g.french = cols[4];
        out.push_back(std::move(g));
    }
    return out;
}

std::string serialize_predictions_tsv(const std::vector<Prediction>& predictions) {
    std::ostringstream out;
    for (const Prediction& p : predictions)
        out << p.doc_id << '\t' << p.begin << '\t' << p.end << '\t' << p.arabic << '\t'
            << p.french << '\n';
    return out.str();
}

}  // namespace malaab

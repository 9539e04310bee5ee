#include "malaab/lexicon.hpp"

#include "malaab/errors.hpp"
#include "malaab/utf8.hpp"

#include <algorithm>
#include <sstream>

namespace malaab {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void malformed(const std::string& file, int line, const std::string& reason) {
    throw Error(ErrorCode::MalformedLine,
                file + ":" + std::to_string(line) + ": " + reason);
}

// Splits on `sep` outside double quotes and strips the quotes.
std::vector<std::string> split_unquoted(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : s) {
        if (c == '"') {
            quoted = !quoted;
            continue;
        }
        if (c == sep && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool needs_quotes(std::string_view s) {
    return s.find(' ') != std::string_view::npos;
}

std::string maybe_quote(const std::string& s) {
    return needs_quotes(s) ? "\"" + s + "\"" : s;
}

}  // namespace

std::vector<LexEntry> parse_dictionary(std::string_view text, Lang lang,
                                       const std::string& filename) {
    std::vector<LexEntry> entries;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        // Lemma runs to the first comma outside quotes.
        size_t comma = std::string::npos;
        bool quoted = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            else if (line[i] == ',' && !quoted) { comma = i; break; }
        }
        if (comma == std::string::npos) malformed(filename, lineno, "missing ',' after lemma");

        std::string lemma = trim(line.substr(0, comma));
        if (lemma.size() >= 2 && lemma.front() == '"' && lemma.back() == '"')
            lemma = lemma.substr(1, lemma.size() - 2);
        if (lemma.empty()) malformed(filename, lineno, "missing lemma");
        if (lemma.find(',') != std::string::npos || lemma.find('+') != std::string::npos)
            malformed(filename, lineno, "lemma contains a format delimiter");

        LexEntry entry;
        entry.lemma = lemma;
        entry.lang = lang;
        entry.source = {filename, lineno};

        const std::vector<std::string> fields = split_unquoted(line.substr(comma + 1), '+');
        if (fields.empty() || trim(fields[0]).empty())
            malformed(filename, lineno, "missing category");
        const auto cat = parse_category(trim(fields[0]));
        if (!cat) malformed(filename, lineno, "unknown category '" + trim(fields[0]) + "'");
        entry.features.category = *cat;

        for (size_t i = 1; i < fields.size(); ++i) {
            const std::string field = trim(fields[i]);
            if (field.empty()) malformed(filename, lineno, "empty feature");
            const size_t eq = field.find('=');
            if (eq != std::string::npos) {
                const std::string key = trim(field.substr(0, eq));
                const std::string value = trim(field.substr(eq + 1));
                if (value.empty()) malformed(filename, lineno, "empty value for '" + key + "'");
                if (key == "FLX") {
                    if (!entry.paradigm_id.empty())
                        malformed(filename, lineno, "duplicate FLX attribute");
                    entry.paradigm_id = value;
                } else if (key == "FR") {
                    if (!entry.translation.empty())
                        malformed(filename, lineno, "duplicate FR attribute");
                    entry.translation = value;
                } else {
                    malformed(filename, lineno, "unknown attribute '" + key + "'");
                }
                continue;
            }
            if (field == "m" || field == "f") {
                const Gender g = field == "m" ? Gender::Masculine : Gender::Feminine;
                if (entry.features.gender && entry.features.gender != g)
                    malformed(filename, lineno, "conflicting gender values");
                entry.features.gender = g;
                continue;
            }
            if (field == "s" || field == "p") {
                const Number n = field == "s" ? Number::Singular : Number::Plural;
                if (entry.features.number && entry.features.number != n)
                    malformed(filename, lineno, "conflicting number values");
                entry.features.number = n;
                continue;
            }
            const auto flag = parse_flag(field);
            if (!flag) malformed(filename, lineno, "unknown feature '" + field + "'");
            entry.features.flags.set(*flag);
        }
        entry.features.close_implications();

        if (lang == Lang::Arabic) {
            if (entry.features.flags.has(Flag::DETZ) || entry.features.flags.has(Flag::Apostrophe))
                malformed(filename, lineno, "DETZ/Apostrophe are French-side features");
        } else {
            if (!entry.translation.empty())
                malformed(filename, lineno, "FR link on a French-side entry");
        }

        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string serialize_dictionary(const std::vector<LexEntry>& entries) {
    std::ostringstream out;
    for (const LexEntry& e : entries) {
        out << maybe_quote(e.lemma) << ',' << category_name(e.features.category);
        for (Flag f : e.features.flags.to_list()) out << '+' << flag_name(f);
        if (e.features.gender) out << '+' << gender_letter(*e.features.gender);
        if (e.features.number) out << '+' << number_letter(*e.features.number);
        if (!e.paradigm_id.empty()) out << "+FLX=" << maybe_quote(e.paradigm_id);
        if (!e.translation.empty()) out << "+FR=" << maybe_quote(e.translation);
        out << '\n';
    }
    return out.str();
}

std::vector<Paradigm> parse_paradigms(std::string_view text, const std::string& filename) {
    std::vector<Paradigm> paradigms;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        const size_t colon = line.find(':');
        if (colon == std::string::npos) malformed(filename, lineno, "missing ':' after paradigm id");
        Paradigm paradigm;
        paradigm.id = trim(line.substr(0, colon));
        if (paradigm.id.empty()) malformed(filename, lineno, "missing paradigm id");

        for (const std::string& piece : split_unquoted(line.substr(colon + 1), ';')) {
            const std::string rule_text = trim(piece);
            if (rule_text.empty()) malformed(filename, lineno, "empty rule");
            const size_t rc = rule_text.find(':');
            if (rc == std::string::npos) malformed(filename, lineno, "rule missing ':'");
            ParadigmRule rule;
            try {
                rule.strip = std::stoi(rule_text.substr(0, rc));
            } catch (const std::exception&) {
                malformed(filename, lineno, "bad strip count in rule '" + rule_text + "'");
            }
            if (rule.strip < 0) malformed(filename, lineno, "negative strip count");

            std::string rest = trim(rule_text.substr(rc + 1));
            std::string feats;
            const size_t slash = rest.find('/');
            if (slash != std::string::npos) {
                feats = trim(rest.substr(slash + 1));
                rest = trim(rest.substr(0, slash));
            }
            if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"')
                rest = rest.substr(1, rest.size() - 2);
            if (!rest.empty() && rest[0] == '^') {
                rule.prefix = true;
                rest = rest.substr(1);
            }
            rule.append = rest;

            if (!feats.empty()) {
                for (const std::string& tok_raw : split_unquoted(feats, '+')) {
                    const std::string tok = trim(tok_raw);
                    if (tok.empty()) continue;
                    if (tok == "m") rule.gender = Gender::Masculine;
                    else if (tok == "f") rule.gender = Gender::Feminine;
                    else if (tok == "s") rule.number = Number::Singular;
                    else if (tok == "p") rule.number = Number::Plural;
                    else {
                        const auto flag = parse_flag(tok);
                        if (!flag) malformed(filename, lineno, "unknown rule feature '" + tok + "'");
                        rule.flags.set(*flag);
                    }
                }
            }
            paradigm.rules.push_back(std::move(rule));
        }
        paradigms.push_back(std::move(paradigm));
    }
    return paradigms;
}

std::string serialize_paradigms(const std::vector<Paradigm>& paradigms) {
    std::ostringstream out;
    for (const Paradigm& p : paradigms) {
        out << p.id << " : ";
        for (size_t i = 0; i < p.rules.size(); ++i) {
            const ParadigmRule& r = p.rules[i];
            if (i > 0) out << " ; ";
            out << r.strip << ':';
            if (r.prefix) out << '^';
            out << r.append;
            std::string feats;
            for (Flag f : r.flags.to_list()) feats += std::string(feats.empty() ? "" : "+") + flag_name(f);
            if (r.gender) feats += std::string(feats.empty() ? "" : "+") + gender_letter(*r.gender);
            if (r.number) feats += std::string(feats.empty() ? "" : "+") + number_letter(*r.number);
            if (!feats.empty()) out << '/' << feats;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<InflectedForm> expand_inflections(const LexEntry& entry,
                                              const std::vector<Paradigm>& paradigms) {
    std::vector<InflectedForm> out;
    if (entry.paradigm_id.empty()) {
        out.push_back({entry.lemma, entry.features});
        return out;
    }
    const Paradigm* paradigm = nullptr;
    for (const Paradigm& p : paradigms) {
        if (p.id == entry.paradigm_id) {
            paradigm = &p;
            break;
        }
    }
    if (!paradigm)
        throw Error(ErrorCode::UnknownParadigm,
                    "'" + entry.paradigm_id + "' referenced at " + entry.source.to_string());

    const std::vector<char32_t> lemma_cps = utf8::codepoints(entry.lemma);
    bool lemma_surface_seen = false;
    for (const ParadigmRule& rule : paradigm->rules) {
        if (rule.strip >= static_cast<int>(lemma_cps.size()) && !rule.prefix && rule.append.empty())
            throw Error(ErrorCode::ResourceError,
                        "paradigm '" + paradigm->id + "' strips lemma '" + entry.lemma +
                            "' to an empty surface");
        std::string surface;
        if (rule.prefix) {
            surface = rule.append + entry.lemma;
        } else {
            const int keep = static_cast<int>(lemma_cps.size()) - rule.strip;
            if (keep < 0)
                throw Error(ErrorCode::ResourceError,
                            "paradigm '" + paradigm->id + "' strips past lemma '" + entry.lemma + "'");
            std::vector<char32_t> kept(lemma_cps.begin(), lemma_cps.begin() + keep);
            surface = utf8::from_codepoints(kept) + rule.append;
        }
        if (surface.empty())
            throw Error(ErrorCode::ResourceError,
                        "paradigm '" + paradigm->id + "' produced an empty surface");
        const FeatureSet features =
            entry.features.merged_with_rule(rule.flags, rule.gender, rule.number);
        InflectedForm form{surface, features};
        const bool dup = std::any_of(out.begin(), out.end(), [&](const InflectedForm& f) {
            return f.surface == form.surface && f.features == form.features;
        });
        if (!dup) out.push_back(std::move(form));
        if (surface == entry.lemma) lemma_surface_seen = true;
    }
    if (!lemma_surface_seen)
        out.insert(out.begin(), {entry.lemma, entry.features});
    return out;
}

Lexicon Lexicon::build(std::vector<LexEntry> entries, const std::vector<Paradigm>& paradigms) {
    Lexicon lex;
    lex.entries_ = std::move(entries);
    for (const LexEntry& entry : lex.entries_) {
        for (const InflectedForm& form : expand_inflections(entry, paradigms)) {
            const std::string key = utf8::normalize_arabic(form.surface);
            lex.index_[key].push_back({&entry, form.features});
            const int tokens = 1 + static_cast<int>(std::count(key.begin(), key.end(), ' '));
            lex.max_surface_tokens_ = std::max(lex.max_surface_tokens_, tokens);
        }
        lex.by_lemma_[entry.lemma].push_back(&entry);
    }
    return lex;
}

const std::vector<Analysis>& Lexicon::lookup(std::string_view surface) const {
    static const std::vector<Analysis> kEmpty;
    const auto it = index_.find(std::string(surface));
    return it == index_.end() ? kEmpty : it->second;
}

std::vector<const LexEntry*> Lexicon::lookup_lemma(std::string_view lemma) const {
    const auto it = by_lemma_.find(std::string(lemma));
    return it == by_lemma_.end() ? std::vector<const LexEntry*>{} : it->second;
}

std::vector<std::string> Lexicon::surfaces() const {
    std::vector<std::string> keys;
    keys.reserve(index_.size());
    for (const auto& [key, _] : index_) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace malaab

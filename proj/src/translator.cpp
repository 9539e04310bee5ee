#include "malaab/translator.hpp"

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

std::vector<std::pair<std::string, std::string>> parse_tsv(std::string_view text,
                                                           const std::string& filename) {
    std::vector<std::pair<std::string, std::string>> rows;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(ErrorCode::ResourceError,
                        filename + ":" + std::to_string(lineno) + ": expected TAB-separated row");
        rows.emplace_back(trim(line.substr(0, tab)), trim(line.substr(tab + 1)));
    }
    return rows;
}

}  // namespace

RomanizationTable RomanizationTable::parse(std::string_view text, const std::string& filename) {
    RomanizationTable table;
    for (const auto& [key, value] : parse_tsv(text, filename)) {
        if (key == "policy") {
            table.policy_ = value;
            continue;
        }
        const std::string norm_key = utf8::normalize_arabic(key);
        table.map_[norm_key] = value;
        table.max_key_cps_ = std::max(table.max_key_cps_, utf8::codepoints(norm_key).size());
    }
    return table;
}

std::string RomanizationTable::serialize() const {
    std::ostringstream out;
    out << "policy\t" << policy_ << '\n';
    for (const auto& [key, value] : map_) out << key << '\t' << value << '\n';
    return out.str();
}

std::vector<std::string> RomanizationTable::unmapped_letters(std::string_view word) const {
    std::vector<std::string> missing;
    for (char32_t cp : utf8::codepoints(utf8::normalize_arabic(word))) {
        if (!utf8::is_arabic_letter(cp)) continue;
        std::string letter;
        utf8::append(letter, cp);
        if (!map_.count(letter)) missing.push_back(letter);
    }
    return missing;
}

std::string transliterate(const std::string& arabic, const RomanizationTable& table) {
    if (arabic.empty()) throw Error(ErrorCode::EmptyInput, "cannot transliterate an empty string");

    const std::vector<char32_t> cps = utf8::codepoints(utf8::normalize_arabic(arabic));
    std::string out;
    size_t i = 0;
    while (i < cps.size()) {
        // Longest source sequence first.
        bool matched = false;
        const size_t max_len = std::min(table.max_key_codepoints(), cps.size() - i);
        for (size_t len = max_len; len >= 1 && !matched; --len) {
            std::string key;
            for (size_t k = 0; k < len; ++k) utf8::append(key, cps[i + k]);
            const auto it = table.mappings().find(key);
            if (it != table.mappings().end()) {
                out += it->second;
                i += len;
                matched = true;
            }
        }
        if (!matched) {
            utf8::append(out, cps[i]);  // Latin and punctuation pass through
            ++i;
        }
    }

    if (table.policy() == "fr-final-e") {
        if (out.size() >= 2 && out.compare(out.size() - 2, 2, "in") == 0) out += 'e';
    }
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

MonthTable MonthTable::parse(std::string_view text, const std::string& filename) {
    MonthTable table;
    for (const auto& [key, value] : parse_tsv(text, filename))
        table.map_[utf8::normalize_arabic(key)] = value;
    return table;
}

std::string MonthTable::serialize() const {
    std::ostringstream out;
    for (const auto& [key, value] : map_) out << key << '\t' << value << '\n';
    return out.str();
}

std::optional<std::string> MonthTable::french_for(std::string_view arabic_month) const {
    const auto it = map_.find(utf8::normalize_arabic(arabic_month));
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

FrenchFragment Translator::transfer(const ComponentTree& node) const {
    FrenchFragment frag;
    frag.role = node.type;

    if (node.type == ComponentType::Date) {
        frag.surface = translate_date(node);
        return frag;
    }

    if (node.lex_entry && !node.lex_entry->translation.empty()) {
        const std::string& lemma = node.lex_entry->translation;
        const std::vector<const LexEntry*> targets = french_.lookup_lemma(lemma);
        if (targets.empty())
            throw Error(ErrorCode::MissingFrenchEntry,
                        "'" + lemma + "' (linked from '" + node.lex_entry->lemma + "')");
        const LexEntry* fr = targets.front();
        frag.surface = lemma;
        frag.gender = fr->features.gender;
        frag.number = fr->features.number;
        frag.detz = fr->features.flags.has(Flag::DETZ);
        frag.apostrophe = fr->features.flags.has(Flag::Apostrophe);
        frag.fr_entry = fr;
        return frag;
    }

    // No dictionary route: transliterate the surface.
    frag.surface = transliterate(node.arabic, translit_);
    return frag;
}

std::string Translator::agree(const FrenchFragment& adjective, const FrenchFragment& head) const {
    if (!adjective.fr_entry) return adjective.surface;  // transliterated adjectives stay as-is
    const Gender g = head.gender.value_or(Gender::Masculine);
    const Number n = head.number.value_or(Number::Singular);
    const std::vector<InflectedForm> forms = expand_inflections(*adjective.fr_entry, paradigms_);
    for (const InflectedForm& f : forms)
        if (f.features.gender == g && f.features.number == n) return f.surface;
    for (const InflectedForm& f : forms) {
        const bool g_ok = !f.features.gender || f.features.gender == g;
        const bool n_ok = !f.features.number || f.features.number == n;
        if (g_ok && n_ok) return f.surface;
    }
    throw Error(ErrorCode::MissingInflection,
                "'" + adjective.fr_entry->lemma + "' has no " +
                    std::string(1, gender_letter(g)) + std::string(1, number_letter(n)) + " cell");
}

std::string Translator::choose_linker(const FrenchFragment& left,
                                      const FrenchFragment& right) const {
    (void)left;  // selection depends on the complement only
    if (right.detz) return "de ";
    if (right.apostrophe) return "de l'";
    if (right.number == Number::Plural) return "des ";
    if (right.gender == Gender::Masculine) return "du ";
    if (right.gender == Gender::Feminine) return "de la ";
    return "de ";
}

std::vector<size_t> Translator::reorder(const std::vector<ComponentTree>& children) const {
    auto group = [](const ComponentTree& c) {
        switch (c.type) {
            case ComponentType::SportVenueCategory: return 0;
            case ComponentType::Date: return 1;
            case ComponentType::Adjective:
            case ComponentType::Demonym: return 2;
            case ComponentType::Toponym: return 4;
            default: return 3;  // Ethnonym, Pragmonym, nested venue, common noun
        }
    };
    std::vector<size_t> order(children.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return group(children[a]) < group(children[b]);
    });
    return order;
}

std::string Translator::translate_date(const ComponentTree& date) const {
    const auto month = months_.french_for(date.month_arabic);
    if (!month)
        throw Error(ErrorCode::UnknownMonth, "'" + date.month_arabic + "'");
    return date.day + " " + *month;
}

FrenchFragment Translator::fragment_for(ComponentTree& child) const {
    if (child.type == ComponentType::SportVenue) return translate_venue(child);

    if (child.type == ComponentType::Date) {
        FrenchFragment frag;
        frag.role = ComponentType::Date;
        const auto month = months_.french_for(child.month_arabic);
        if (month) {
            frag.surface = child.day + " " + *month;
        } else {
            child.untranslated_month = true;
            frag.surface = child.day + " " + child.month_arabic;
        }
        child.french = frag.surface;
        return frag;
    }

    if (!child.children.empty()) {
        // Composite name (function word plus person-name tokens): transfer the
        // pieces and join them.
        std::string joined;
        for (ComponentTree& part : child.children) {
            FrenchFragment pf = fragment_for(part);
            if (!joined.empty()) joined += ' ';
            joined += pf.surface;
        }
        FrenchFragment frag;
        frag.role = child.type;
        frag.surface = joined;
        child.french = joined;
        return frag;
    }

    FrenchFragment frag = transfer(child);
    child.french = frag.surface;
    return frag;
}

FrenchFragment Translator::translate_venue(ComponentTree& tree) const {
    std::vector<FrenchFragment> frags;
    frags.reserve(tree.children.size());
    for (ComponentTree& child : tree.children) frags.push_back(fragment_for(child));

    // The venue category fragment is the agreement head.
    FrenchFragment head;
    head.gender = Gender::Masculine;
    for (size_t i = 0; i < tree.children.size(); ++i) {
        if (tree.children[i].type == ComponentType::SportVenueCategory) {
            head = frags[i];
            break;
        }
    }

    for (size_t i = 0; i < tree.children.size(); ++i) {
        ComponentTree& child = tree.children[i];
        if (child.type == ComponentType::Adjective || child.type == ComponentType::Demonym) {
            frags[i].surface = agree(frags[i], head);
            child.french = frags[i].surface;
        }
    }

    std::string out;
    for (size_t idx : reorder(tree.children)) {
        const ComponentTree& child = tree.children[idx];
        const FrenchFragment& frag = frags[idx];
        std::string piece = frag.surface;
        const bool complement = child.type == ComponentType::Toponym ||
                                child.type == ComponentType::CommonNoun ||
                                child.type == ComponentType::SportVenue;
        if (complement) {
            if (child.hyphen_before)
                piece = "- " + piece;
            else
                piece = choose_linker(head, frag) + piece;
        }
        if (!out.empty()) out += ' ';
        out += piece;
    }

    tree.french = out;

    FrenchFragment venue_frag;
    venue_frag.role = ComponentType::SportVenue;
    venue_frag.surface = out;
    venue_frag.gender = head.gender;
    venue_frag.number = head.number;
    venue_frag.detz = head.detz;
    venue_frag.apostrophe = head.apostrophe;
    return venue_frag;
}

std::string Translator::translate(ComponentTree& tree) const {
    if (tree.type == ComponentType::SportVenue) return translate_venue(tree).surface;
    const FrenchFragment frag = fragment_for(tree);
    return frag.surface;
}

}  // namespace malaab

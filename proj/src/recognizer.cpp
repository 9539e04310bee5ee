#include "malaab/recognizer.hpp"

#include "malaab/utf8.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace malaab {

namespace {

// Prefer a city reading over a country one when a slot admits both.
const LexChoice* pick_choice(const std::vector<LexChoice>& choices) {
    if (choices.empty()) return nullptr;
    for (const LexChoice& c : choices)
        if (c.analysis.features.flags.has(Flag::Ville)) return &c;
    for (const LexChoice& c : choices)
        if (c.analysis.features.flags.has(Flag::Pays)) return &c;
    return &choices.front();
}

// Byte offset of the first code point past the conjunction/preposition
// proclitics, skipping diacritics the normalizer removed. The article stays
// part of the component surface.
size_t clitic_trimmed_start(const Token& tok, const Segmentation& seg) {
    size_t skip_norm = 0;
    for (const std::string& p : seg.proclitics)
        if (p != "ال") skip_norm += p.size();
    if (skip_norm == 0) return tok.begin;

    const std::string_view raw = tok.raw;
    size_t i = 0, counted = 0;
    while (i < raw.size() && counted < skip_norm) {
        size_t j = i;
        const char32_t cp = utf8::decode(raw, j);
        if (!utf8::is_arabic_diacritic(cp) && !utf8::is_tatweel(cp))
            counted += utf8::encoded_size(cp);
        i = j;
    }
    while (i < raw.size()) {
        size_t j = i;
        const char32_t cp = utf8::decode(raw, j);
        if (!utf8::is_arabic_diacritic(cp) && !utf8::is_tatweel(cp)) break;
        i = j;
    }
    return tok.begin + i;
}

class TreeBuilder {
public:
    TreeBuilder(const Document& doc) : doc_(doc) {}

    ComponentTree build(const MatchResult& match) {
        ComponentTree root;
        root.type = ComponentType::SportVenue;
        root.char_begin = match.char_begin;
        root.char_end = match.char_end;
        root.arabic = doc_.text.substr(match.char_begin, match.char_end - match.char_begin);
        for (const CaptureNode& c : match.captures) root.children.push_back(convert(c));
        flag_club_candidate(root);
        return root;
    }

private:
    ComponentTree convert(const CaptureNode& cap) {
        switch (cap.tag) {
            case CaptureTag::SportVenue: return convert_venue(cap);
            case CaptureTag::Date: return convert_date(cap);
            default: return convert_leaf(cap);
        }
    }

    ComponentTree convert_venue(const CaptureNode& cap) {
        ComponentTree node;
        node.type = ComponentType::SportVenue;
        assign_span(node, cap.tok_begin, cap.tok_end);
        for (const CaptureNode& c : cap.children) node.children.push_back(convert(c));
        flag_club_candidate(node);
        return node;
    }

    ComponentTree convert_date(const CaptureNode& cap) {
        ComponentTree node;
        node.type = ComponentType::Date;
        assign_span(node, cap.tok_begin, cap.tok_end);
        for (const CaptureNode& c : cap.children) {
            if (c.tag == CaptureTag::DateNum) {
                node.day = doc_.tokens[static_cast<size_t>(c.tok_begin)].normalized;
            } else if (c.tag == CaptureTag::Month) {
                size_t begin = doc_.tokens[static_cast<size_t>(c.tok_begin)].begin;
                size_t end = doc_.tokens[static_cast<size_t>(c.tok_end - 1)].end;
                node.month_arabic = utf8::normalize_arabic(
                    doc_.text.substr(begin, end - begin));
                if (const LexChoice* choice = pick_choice(c.choices)) {
                    node.month_entry = choice->analysis.entry;
                    node.month_features = choice->analysis.features;
                }
            }
        }
        return node;
    }

    ComponentTree convert_leaf(const CaptureNode& cap) {
        ComponentTree node;
        switch (cap.tag) {
            case CaptureTag::SportVenueCategory: node.type = ComponentType::SportVenueCategory; break;
            case CaptureTag::Ethnonym: node.type = ComponentType::Ethnonym; break;
            case CaptureTag::Toponym: node.type = ComponentType::Toponym; break;
            case CaptureTag::Adjective: node.type = ComponentType::Adjective; break;
            case CaptureTag::Pragmonym: node.type = ComponentType::Pragmonym; break;
            case CaptureTag::CommonNoun: node.type = ComponentType::CommonNoun; break;
            case CaptureTag::Function: node.type = ComponentType::Function; break;
            case CaptureTag::CatGeo: node.type = ComponentType::CommonNoun; break;
            default: node.type = ComponentType::Pragmonym; break;
        }

        // Subgraph captures (e.g. the anthroponym slot) become inner nodes
        // whose children are their own captured pieces.
        if (!cap.children.empty()) {
            assign_span(node, cap.tok_begin, cap.tok_end);
            for (const CaptureNode& c : cap.children) node.children.push_back(convert(c));
            return node;
        }

        const LexChoice* choice = pick_choice(cap.choices);
        const Token& first = doc_.tokens[static_cast<size_t>(cap.tok_begin)];
        size_t begin = first.begin;
        if (choice && choice->seg_index >= 0)
            begin = clitic_trimmed_start(first, first.analyses[static_cast<size_t>(choice->seg_index)]);
        const size_t end = doc_.tokens[static_cast<size_t>(cap.tok_end - 1)].end;
        node.char_begin = begin;
        node.char_end = end;
        node.arabic = doc_.text.substr(begin, end - begin);

        if (choice) {
            node.lex_entry = choice->analysis.entry;
            node.lex_features = choice->analysis.features;
            if (node.type == ComponentType::Adjective &&
                node.lex_features.flags.has(Flag::Demonym))
                node.type = ComponentType::Demonym;
            if (node.type == ComponentType::Toponym) {
                if (node.lex_features.flags.has(Flag::Ville)) node.kind = ToponymKind::Ville;
                else if (node.lex_features.flags.has(Flag::Pays)) node.kind = ToponymKind::Pays;
                else if (node.lex_features.flags.has(Flag::Region)) node.kind = ToponymKind::Region;
            }
        }
        if (cap.tok_begin > 0) {
            const Token& prev = doc_.tokens[static_cast<size_t>(cap.tok_begin - 1)];
            if (prev.kind == TokenKind::Punct && prev.normalized == "-")
                node.hyphen_before = true;
        }
        return node;
    }

    void assign_span(ComponentTree& node, int tok_begin, int tok_end) {
        node.char_begin = doc_.tokens[static_cast<size_t>(tok_begin)].begin;
        node.char_end = doc_.tokens[static_cast<size_t>(tok_end - 1)].end;
        node.arabic = doc_.text.substr(node.char_begin, node.char_end - node.char_begin);
    }

    void flag_club_candidate(ComponentTree& venue) {
        bool has_demonym = false;
        for (const ComponentTree& c : venue.children) {
            if (c.type == ComponentType::Demonym) {
                has_demonym = true;
            } else if (c.type != ComponentType::SportVenueCategory) {
                return;
            }
        }
        venue.club_candidate = has_demonym;
    }

    const Document& doc_;
};

void xml_escape(std::ostream& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
            case '&': out << "&amp;"; break;
            case '<': out << "&lt;"; break;
            case '>': out << "&gt;"; break;
            default: out << c;
        }
    }
}

void write_xml(std::ostream& out, const ComponentTree& node, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const char* tag = component_type_name(node.type);
    if (node.type == ComponentType::SportVenue) {
        out << pad << '<' << tag << '>';
        xml_escape(out, node.arabic);
        if (!node.french.empty()) {
            out << " = ";
            xml_escape(out, node.french);
        }
        out << "</" << tag << ">\n";
        out << pad << "<Categories>\n";
        for (const ComponentTree& c : node.children) write_xml(out, c, indent + 1);
        out << pad << "</Categories>\n";
        return;
    }
    out << pad << '<' << tag << '>';
    xml_escape(out, node.arabic);
    if (!node.french.empty()) {
        out << " = ";
        xml_escape(out, node.french);
    }
    out << "</" << tag << ">\n";
}

}  // namespace

const char* component_type_name(ComponentType t) {
    switch (t) {
        case ComponentType::SportVenue: return "SportVenue";
        case ComponentType::SportVenueCategory: return "SportVenueCategory";
        case ComponentType::Ethnonym: return "Ethnonym";
        case ComponentType::Toponym: return "Toponym";
        case ComponentType::Adjective: return "Adjective";
        case ComponentType::Pragmonym: return "Pragmonym";
        case ComponentType::CommonNoun: return "CommonNoun";
        case ComponentType::Function: return "Function";
        case ComponentType::Demonym: return "Demonym";
        case ComponentType::Date: return "Date";
    }
    return "?";
}

const char* toponym_kind_name(ToponymKind k) {
    switch (k) {
        case ToponymKind::Unspecified: return "unspecified";
        case ToponymKind::Ville: return "Ville";
        case ToponymKind::Pays: return "Pays";
        case ToponymKind::Region: return "Region";
    }
    return "?";
}

std::vector<ComponentTree> recognize(const Document& doc, const Grammar& grammar,
                                     const Lexicon& lexicon) {
    std::vector<ComponentTree> trees;
    TreeBuilder builder(doc);
    for (const MatchResult& match : scan(grammar, doc, lexicon))
        trees.push_back(builder.build(match));
    return trees;
}

std::string to_xml(const ComponentTree& tree, int indent) {
    std::ostringstream out;
    write_xml(out, tree, indent);
    return out.str();
}

nlohmann::json to_json(const ComponentTree& tree) {
    nlohmann::json j;
    j["type"] = component_type_name(tree.type);
    if (tree.type == ComponentType::Toponym)
        j["kind"] = toponym_kind_name(tree.kind);
    j["arabic"] = tree.arabic;
    j["french"] = tree.french;
    if (tree.club_candidate) j["ambiguous"] = "club-candidate";
    if (tree.untranslated_month) j["untranslated_month"] = true;
    if (tree.type == ComponentType::Date) {
        j["day"] = tree.day;
        j["month"] = tree.month_arabic;
    }
    nlohmann::json children = nlohmann::json::array();
    for (const ComponentTree& c : tree.children) children.push_back(to_json(c));
    j["children"] = std::move(children);
    return j;
}

}  // namespace malaab

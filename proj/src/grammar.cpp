#include "malaab/grammar.hpp"

#include "malaab/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace malaab {

namespace {

constexpr std::array<const char*, 13> kTagNames = {
    "None",     "SportVenueCategory", "Ethnonym", "Toponym", "Adjective", "Pragmonym",
    "CommonNoun", "Function",         "CatGeo",   "DateNum", "Month",     "SportVenue",
    "Date",
};

[[noreturn]] void syntax_error(int line, const std::string& reason) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + reason);
}

// Minimal scanner over the DSL text with line tracking.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    bool try_consume(std::string_view token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token, const std::string& what) {
        if (!try_consume(token)) syntax_error(line_, "expected " + what);
    }

    // A word runs to whitespace or one of the structural delimiters.
    std::string word(const std::string& what) {
        skip_space();
        const size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == '{' ||
                c == '}' || c == ']' || c == '>' || c == '(' || c == ')' || c == '+' ||
                c == ',' || c == '@')
                break;
            ++pos_;
        }
        if (pos_ == start) syntax_error(line_, "expected " + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string quoted_string() {
        // Opening quote already consumed.
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n') ++line_;
            out.push_back(text_[pos_++]);
        }
        if (pos_ >= text_.size()) syntax_error(line_, "unterminated string literal");
        ++pos_;  // closing quote
        return out;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void advance() { ++pos_; }

    int line() const { return line_; }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
};

int state_id(Graph& graph, std::map<std::string, int>& names, const std::string& name) {
    const auto it = names.find(name);
    if (it != names.end()) return it->second;
    const int id = static_cast<int>(graph.state_names.size());
    graph.state_names.push_back(name);
    names.emplace(name, id);
    return id;
}

ArcLabel parse_lexical(Scanner& sc) {
    // '<' already consumed; reads CAT+item+... up to '>'.
    const std::string first = sc.word("category");
    if (first == "UNK") {
        sc.expect(">", "'>'");
        return label::Unknown{};
    }
    label::Lexical lex;
    const auto cat = parse_category(first);
    if (!cat) syntax_error(sc.line(), "unknown category '" + first + "'");
    lex.constraint.category = *cat;
    while (sc.try_consume("+")) {
        const std::string item = sc.word("feature");
        if (item == "m") lex.constraint.gender = Gender::Masculine;
        else if (item == "f") lex.constraint.gender = Gender::Feminine;
        else if (item == "s") lex.constraint.number = Number::Singular;
        else if (item == "p") lex.constraint.number = Number::Plural;
        else if (item == "det") lex.article = ArticlePolicy::Require;
        else if (item == "nodet") lex.article = ArticlePolicy::Forbid;
        else if (item == "detopt") lex.article = ArticlePolicy::Any;
        else if (item == "prep") lex.require_preposition = true;
        else {
            const auto flag = parse_flag(item);
            if (!flag) syntax_error(sc.line(), "unknown feature '" + item + "'");
            lex.constraint.required.set(*flag);
        }
    }
    sc.expect(">", "'>'");
    return lex;
}

ArcLabel parse_label(Scanner& sc) {
    const char c = sc.peek();
    if (c == '"') {
        sc.advance();
        return label::Literal{sc.quoted_string()};
    }
    if (c == '<') {
        sc.advance();
        return parse_lexical(sc);
    }
    if (c == ':') {
        sc.advance();
        return label::SubgraphCall{sc.word("subgraph name")};
    }
    if (c == '~') {
        sc.advance();
        const std::string w = sc.word("eps");
        if (w != "eps") syntax_error(sc.line(), "expected 'eps' after '~'");
        return label::Epsilon{};
    }
    if (c == '#') {
        sc.advance();
        const std::string w = sc.word("digits");
        if (w != "digits") syntax_error(sc.line(), "expected 'digits' after '#'");
        sc.expect("(", "'('");
        label::DigitRun run;
        try {
            run.min_digits = std::stoi(sc.word("min digit count"));
            sc.expect(",", "','");
            run.max_digits = std::stoi(sc.word("max digit count"));
        } catch (const std::exception&) {
            syntax_error(sc.line(), "bad digit count");
        }
        sc.expect(")", "')'");
        if (run.min_digits < 1 || run.max_digits < run.min_digits)
            syntax_error(sc.line(), "bad digit range");
        return run;
    }
    syntax_error(sc.line(), "expected an arc label");
}

void check_zero_consumption(const Grammar& grammar) {
    const size_t n = grammar.graphs.size();

    // Nullable fixpoint: a graph is nullable when a final state is reachable
    // from its initial through arcs that consume no token.
    std::vector<bool> nullable(n, false);
    auto zero_arc = [&](const Arc& arc) {
        if (std::holds_alternative<label::Epsilon>(arc.label)) return true;
        if (const auto* call = std::get_if<label::SubgraphCall>(&arc.label))
            return nullable[static_cast<size_t>(grammar.index_of(call->name))];
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t g = 0; g < n; ++g) {
            if (nullable[g]) continue;
            const Graph& graph = grammar.graphs[g];
            std::vector<bool> seen(graph.state_names.size(), false);
            std::vector<int> stack = {graph.initial()};
            seen[0] = true;
            bool accepts = false;
            while (!stack.empty() && !accepts) {
                const int s = stack.back();
                stack.pop_back();
                if (graph.is_final(s)) accepts = true;
                for (const Arc& arc : graph.arcs) {
                    if (arc.from != s || !zero_arc(arc) || seen[arc.to]) continue;
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
            if (accepts) {
                nullable[g] = true;
                changed = true;
            }
        }
    }

    // Within-graph cycles over zero-consuming arcs.
    for (const Graph& graph : grammar.graphs) {
        const size_t m = graph.state_names.size();
        std::vector<int> color(m, 0);
        auto dfs = [&](auto&& self, int s) -> bool {
            color[s] = 1;
            for (const Arc& arc : graph.arcs) {
                if (arc.from != s || !zero_arc(arc)) continue;
                if (color[arc.to] == 1) return true;
                if (color[arc.to] == 0 && self(self, arc.to)) return true;
            }
            color[s] = 2;
            return false;
        };
        for (size_t s = 0; s < m; ++s)
            if (color[s] == 0 && dfs(dfs, static_cast<int>(s)))
                throw Error(ErrorCode::RecursionLimit,
                            "graph '" + graph.name + "' has a cycle that consumes no input");
    }

    // Left recursion: calls reachable from the initial state with zero
    // consumption form a relation between graphs; a cycle never terminates.
    std::vector<std::vector<int>> calls(n);
    for (size_t g = 0; g < n; ++g) {
        const Graph& graph = grammar.graphs[g];
        std::vector<bool> seen(graph.state_names.size(), false);
        std::vector<int> stack = {graph.initial()};
        seen[0] = true;
        while (!stack.empty()) {
            const int s = stack.back();
            stack.pop_back();
            for (const Arc& arc : graph.arcs) {
                if (arc.from != s) continue;
                if (const auto* call = std::get_if<label::SubgraphCall>(&arc.label))
                    calls[g].push_back(grammar.index_of(call->name));
                if (zero_arc(arc) && !seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
        }
    }
    std::vector<int> color(n, 0);
    auto dfs = [&](auto&& self, int g) -> bool {
        color[g] = 1;
        for (int h : calls[g]) {
            if (color[h] == 1) return true;
            if (color[h] == 0 && self(self, h)) return true;
        }
        color[g] = 2;
        return false;
    };
    for (size_t g = 0; g < n; ++g)
        if (color[g] == 0 && dfs(dfs, static_cast<int>(g)))
            throw Error(ErrorCode::RecursionLimit,
                        "left-recursive subgraph calls starting at '" + grammar.graphs[g].name + "'");
}

void validate(Grammar& grammar, const std::string& main_name) {
    if (grammar.graphs.empty()) throw Error(ErrorCode::SyntaxError, "no graphs defined");

    if (!main_name.empty()) {
        grammar.main = grammar.index_of(main_name);
        if (grammar.main < 0)
            throw Error(ErrorCode::UndefinedSubgraph, "main graph '" + main_name + "'");
    } else if (grammar.index_of("MAIN") >= 0) {
        grammar.main = grammar.index_of("MAIN");
    } else if (grammar.graphs.size() == 1) {
        grammar.main = 0;
    } else {
        throw Error(ErrorCode::SyntaxError, "no main graph declared");
    }

    for (const Graph& graph : grammar.graphs) {
        if (graph.finals.empty())
            throw Error(ErrorCode::NoFinalState, "graph '" + graph.name + "'");
        for (const Arc& arc : graph.arcs) {
            if (const auto* call = std::get_if<label::SubgraphCall>(&arc.label)) {
                if (grammar.index_of(call->name) < 0)
                    throw Error(ErrorCode::UndefinedSubgraph, call->name);
            }
        }
        // Every final state must be reachable from the initial state.
        std::vector<bool> seen(graph.state_names.size(), false);
        std::vector<int> stack = {graph.initial()};
        seen[0] = true;
        while (!stack.empty()) {
            const int s = stack.back();
            stack.pop_back();
            for (const Arc& arc : graph.arcs) {
                if (arc.from == s && !seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        for (int f : graph.finals)
            if (!seen[f])
                throw Error(ErrorCode::NoFinalState,
                            "graph '" + graph.name + "': final state '" +
                                graph.state_names[f] + "' is unreachable");
    }

    check_zero_consumption(grammar);
}

}  // namespace

const char* capture_tag_name(CaptureTag tag) { return kTagNames[static_cast<size_t>(tag)]; }

std::optional<CaptureTag> parse_capture_tag(std::string_view name) {
    for (size_t i = 1; i < kTagNames.size(); ++i)
        if (name == kTagNames[i]) return static_cast<CaptureTag>(i);
    return std::nullopt;
}

bool Graph::is_final(int state) const {
    return std::find(finals.begin(), finals.end(), state) != finals.end();
}

const Graph* Grammar::find(std::string_view name) const {
    const int i = index_of(name);
    return i < 0 ? nullptr : &graphs[static_cast<size_t>(i)];
}

int Grammar::index_of(std::string_view name) const {
    for (size_t i = 0; i < graphs.size(); ++i)
        if (graphs[i].name == name) return static_cast<int>(i);
    return -1;
}

Grammar parse_grammar(std::string_view text) {
    Grammar grammar;
    Scanner sc(text);
    std::string main_name;

    while (!sc.eof()) {
        if (sc.try_consume("main")) {
            if (!main_name.empty()) syntax_error(sc.line(), "duplicate main declaration");
            main_name = sc.word("main graph name");
            sc.expect(";", "';'");
            continue;
        }
        if (!sc.try_consume("graph")) syntax_error(sc.line(), "expected 'graph' or 'main'");
        Graph graph;
        graph.name = sc.word("graph name");
        if (grammar.index_of(graph.name) >= 0)
            syntax_error(sc.line(), "duplicate graph '" + graph.name + "'");
        std::map<std::string, int> names;
        sc.expect("{", "'{'");
        while (!sc.try_consume("}")) {
            if (sc.try_consume("final")) {
                const int s = state_id(graph, names, sc.word("state name"));
                if (!graph.is_final(s)) graph.finals.push_back(s);
                sc.expect(";", "';'");
                continue;
            }
            Arc arc;
            arc.from = state_id(graph, names, sc.word("state name"));
            sc.expect("-[", "'-['");
            arc.label = parse_label(sc);
            if (sc.try_consume("@")) {
                const std::string tag = sc.word("capture tag");
                const auto parsed = parse_capture_tag(tag);
                if (!parsed) syntax_error(sc.line(), "unknown capture tag '" + tag + "'");
                arc.capture = *parsed;
            }
            sc.expect("]->", "']->'");
            arc.to = state_id(graph, names, sc.word("state name"));
            sc.expect(";", "';'");
            graph.arcs.push_back(std::move(arc));
        }
        grammar.graphs.push_back(std::move(graph));
    }

    validate(grammar, main_name);
    return grammar;
}

std::string serialize_grammar(const Grammar& grammar) {
    std::ostringstream out;
    out << "main " << grammar.graphs[static_cast<size_t>(grammar.main)].name << ";\n\n";
    for (const Graph& graph : grammar.graphs) {
        out << "graph " << graph.name << " {\n";
        for (const Arc& arc : graph.arcs) {
            out << "  " << graph.state_names[arc.from] << " -[";
            std::visit(
                [&](const auto& l) {
                    using T = std::decay_t<decltype(l)>;
                    if constexpr (std::is_same_v<T, label::Literal>) {
                        out << '"' << l.text << '"';
                    } else if constexpr (std::is_same_v<T, label::Lexical>) {
                        out << '<' << category_name(l.constraint.category);
                        for (Flag f : l.constraint.required.to_list()) out << '+' << flag_name(f);
                        if (l.constraint.gender) out << '+' << gender_letter(*l.constraint.gender);
                        if (l.constraint.number) out << '+' << number_letter(*l.constraint.number);
                        switch (l.article) {
                            case ArticlePolicy::Require: out << "+det"; break;
                            case ArticlePolicy::Forbid: out << "+nodet"; break;
                            case ArticlePolicy::Any: out << "+detopt"; break;
                            case ArticlePolicy::EntryDetOpt: break;
                        }
                        if (l.require_preposition) out << "+prep";
                        out << '>';
                    } else if constexpr (std::is_same_v<T, label::DigitRun>) {
                        out << "#digits(" << l.min_digits << "," << l.max_digits << ")";
                    } else if constexpr (std::is_same_v<T, label::SubgraphCall>) {
                        out << ':' << l.name;
                    } else if constexpr (std::is_same_v<T, label::Epsilon>) {
                        out << "~eps";
                    } else if constexpr (std::is_same_v<T, label::Unknown>) {
                        out << "<UNK>";
                    }
                },
                arc.label);
            if (arc.capture != CaptureTag::None) out << " @" << capture_tag_name(arc.capture);
            out << "]-> " << graph.state_names[arc.to] << ";\n";
        }
        for (int f : graph.finals) out << "  final " << graph.state_names[f] << ";\n";
        out << "}\n\n";
    }
    return out.str();
}

}  // namespace malaab

#include "malaab/engine.hpp"

#include "malaab/errors.hpp"

#include <functional>

namespace malaab {

namespace {

struct LexGroup {
    int n_tokens = 1;
    std::vector<LexChoice> choices;
};

class Matcher {
public:
    Matcher(const Grammar& grammar, const Document& doc, const Lexicon& lexicon)
        : grammar_(grammar), doc_(doc), lexicon_(lexicon) {}

    std::optional<MatchResult> run(int start) {
        best_.reset();
        caps_.clear();
        steps_ = 0;
        start_ = start;
        dfs(grammar_.main, 0, start, [this](int end) {
            if (!best_ || end > best_->tok_end) {
                MatchResult m;
                m.tok_begin = start_;
                m.tok_end = end;
                m.captures = caps_;
                best_ = std::move(m);
            }
        });
        if (best_ && best_->tok_end > best_->tok_begin) {
            best_->char_begin = doc_.tokens[static_cast<size_t>(best_->tok_begin)].begin;
            best_->char_end = doc_.tokens[static_cast<size_t>(best_->tok_end - 1)].end;
        }
        return best_;
    }

private:
    using Cont = std::function<void(int)>;

    void dfs(int graph_id, int state, int pos, const Cont& accept) {
        if (++steps_ > kMaxSteps)
            throw Error(ErrorCode::RecursionLimit,
                        "match exploration exceeded the step budget");
        const Graph& graph = grammar_.graphs[static_cast<size_t>(graph_id)];
        if (graph.is_final(state)) accept(pos);
        for (const Arc& arc : graph.arcs) {
            if (arc.from != state) continue;
            std::visit(
                [&](const auto& label) { follow(graph_id, arc, label, pos, accept); },
                arc.label);
        }
    }

    void follow(int graph_id, const Arc& arc, const label::Epsilon&, int pos,
                const Cont& accept) {
        dfs(graph_id, arc.to, pos, accept);
    }

    void follow(int graph_id, const Arc& arc, const label::Literal& lit, int pos,
                const Cont& accept) {
        if (pos >= n_tokens() || token(pos).normalized != lit.text) return;
        consume(graph_id, arc, pos, 1, {}, accept);
    }

    void follow(int graph_id, const Arc& arc, const label::DigitRun& run, int pos,
                const Cont& accept) {
        if (pos >= n_tokens()) return;
        const Token& t = token(pos);
        if (t.kind != TokenKind::Number) return;
        if (t.digit_count < run.min_digits || t.digit_count > run.max_digits) return;
        consume(graph_id, arc, pos, 1, {}, accept);
    }

    void follow(int graph_id, const Arc& arc, const label::Unknown&, int pos,
                const Cont& accept) {
        if (pos >= n_tokens() || !token(pos).unknown()) return;
        consume(graph_id, arc, pos, 1, {}, accept);
    }

    void follow(int graph_id, const Arc& arc, const label::Lexical& lex, int pos,
                const Cont& accept) {
        for (const LexGroup& group : match_lexical(pos, lex))
            consume(graph_id, arc, pos, group.n_tokens, group.choices, accept);
    }

    void follow(int graph_id, const Arc& arc, const label::SubgraphCall& call, int pos,
                const Cont& accept) {
        const int callee = grammar_.index_of(call.name);
        const size_t mark = caps_.size();
        dfs(callee, 0, pos, [&, mark, pos](int sub_end) {
            if (arc.capture == CaptureTag::None) {
                dfs(graph_id, arc.to, sub_end, accept);
                return;
            }
            CaptureNode node;
            node.tag = arc.capture;
            node.tok_begin = pos;
            node.tok_end = sub_end;
            node.children.assign(caps_.begin() + static_cast<long>(mark), caps_.end());
            caps_.resize(mark);
            caps_.push_back(std::move(node));
            dfs(graph_id, arc.to, sub_end, accept);
            CaptureNode taken = std::move(caps_.back());
            caps_.pop_back();
            for (CaptureNode& child : taken.children) caps_.push_back(std::move(child));
        });
    }

    void consume(int graph_id, const Arc& arc, int pos, int n,
                 std::vector<LexChoice> choices, const Cont& accept) {
        bool captured = false;
        if (arc.capture != CaptureTag::None) {
            CaptureNode node;
            node.tag = arc.capture;
            node.tok_begin = pos;
            node.tok_end = pos + n;
            node.choices = std::move(choices);
            caps_.push_back(std::move(node));
            captured = true;
        }
        dfs(graph_id, arc.to, pos + n, accept);
        if (captured) caps_.pop_back();
    }

    std::vector<LexGroup> match_lexical(int pos, const label::Lexical& lex) const {
        std::vector<LexGroup> groups;
        if (pos >= n_tokens()) return groups;

        // Multiword surfaces, longest first. A joined surface carries no
        // clitics, so arcs requiring an article or preposition never take it.
        if (!lex.require_preposition && lex.article != ArticlePolicy::Require) {
            const int max_n =
                std::min(lexicon_.max_surface_tokens(), n_tokens() - pos);
            for (int n = max_n; n >= 2; --n) {
                bool all_words = true;
                std::string joined;
                for (int k = 0; k < n; ++k) {
                    const Token& t = token(pos + k);
                    if (t.kind != TokenKind::Word) {
                        all_words = false;
                        break;
                    }
                    if (k > 0) joined += ' ';
                    joined += t.normalized;
                }
                if (!all_words) continue;
                LexGroup group;
                group.n_tokens = n;
                for (const Analysis& a : lexicon_.lookup(joined))
                    if (satisfies(a.features, lex.constraint))
                        group.choices.push_back({a, -1});
                if (!group.choices.empty()) groups.push_back(std::move(group));
            }
        }

        const Token& t = token(pos);
        if (t.kind != TokenKind::Word) return groups;
        LexGroup single;
        for (size_t si = 0; si < t.analyses.size(); ++si) {
            const Segmentation& seg = t.analyses[si];
            if (seg.has_conjunction) continue;
            if (seg.has_preposition != lex.require_preposition) continue;
            for (const Analysis& a : seg.stem_analyses) {
                if (!satisfies(a.features, lex.constraint)) continue;
                bool article_ok = true;
                switch (lex.article) {
                    case ArticlePolicy::Require: article_ok = seg.determined; break;
                    case ArticlePolicy::Forbid: article_ok = !seg.determined; break;
                    case ArticlePolicy::Any: article_ok = true; break;
                    case ArticlePolicy::EntryDetOpt:
                        article_ok = !seg.determined || a.features.flags.has(Flag::DetOpt);
                        break;
                }
                if (article_ok) single.choices.push_back({a, static_cast<int>(si)});
            }
        }
        if (!single.choices.empty()) groups.push_back(std::move(single));
        return groups;
    }

    int n_tokens() const { return static_cast<int>(doc_.tokens.size()); }
    const Token& token(int i) const { return doc_.tokens[static_cast<size_t>(i)]; }

    static constexpr long kMaxSteps = 2'000'000;

    const Grammar& grammar_;
    const Document& doc_;
    const Lexicon& lexicon_;
    std::vector<CaptureNode> caps_;
    std::optional<MatchResult> best_;
    long steps_ = 0;
    int start_ = 0;
};

}  // namespace

std::optional<MatchResult> apply(const Grammar& grammar, const Document& doc,
                                 const Lexicon& lexicon, int start) {
    Matcher matcher(grammar, doc, lexicon);
    return matcher.run(start);
}

std::vector<MatchResult> scan(const Grammar& grammar, const Document& doc,
                              const Lexicon& lexicon) {
    std::vector<MatchResult> matches;
    Matcher matcher(grammar, doc, lexicon);
    int pos = 0;
    const int n = static_cast<int>(doc.tokens.size());
    while (pos < n) {
        std::optional<MatchResult> m = matcher.run(pos);
        if (m && m->tok_end > pos) {
            const int next = m->tok_end;
            matches.push_back(std::move(*m));
            pos = next;
        } else {
            ++pos;
        }
    }
    return matches;
}

}  // namespace malaab

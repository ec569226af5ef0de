#include "rpq/ast.hpp"

#include <algorithm>
#include <unordered_set>

namespace rpq {

namespace ast {

AstPtr label(std::string name) {
    auto n = std::make_shared<AstNode>();
    n->kind = NodeKind::Label;
    n->label = std::move(name);
    return n;
}

AstPtr epsilon() {
    static const AstPtr eps = [] {
        auto n = std::make_shared<AstNode>();
        n->kind = NodeKind::Epsilon;
        return AstPtr(n);
    }();
    return eps;
}

namespace {
AstPtr make_nary(NodeKind kind, std::vector<AstPtr> children, bool drop_epsilon) {
    std::vector<AstPtr> flat;
    for (auto& c : children) {
        if (drop_epsilon && c->kind == NodeKind::Epsilon) continue;
        if (c->kind == kind) {
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (flat.empty()) return epsilon();
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<AstNode>();
    n->kind = kind;
    n->children = std::move(flat);
    return n;
}
} // namespace

AstPtr concat(std::vector<AstPtr> children) {
    return make_nary(NodeKind::Concat, std::move(children), /*drop_epsilon=*/true);
}

AstPtr alt(std::vector<AstPtr> children) {
    return make_nary(NodeKind::Alt, std::move(children), /*drop_epsilon=*/false);
}

AstPtr plus(AstPtr child) {
    auto n = std::make_shared<AstNode>();
    n->kind = NodeKind::Plus;
    n->children.push_back(std::move(child));
    return n;
}

AstPtr star(AstPtr child) {
    auto n = std::make_shared<AstNode>();
    n->kind = NodeKind::Star;
    n->children.push_back(std::move(child));
    return n;
}

} // namespace ast

bool structural_equal(const AstPtr& a, const AstPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == NodeKind::Label) return a->label == b->label;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!structural_equal(a->children[i], b->children[i])) return false;
    return true;
}

bool contains_closure(const AstPtr& a) {
    if (a->kind == NodeKind::Plus || a->kind == NodeKind::Star) return true;
    return std::any_of(a->children.begin(), a->children.end(),
                       [](const AstPtr& c) { return contains_closure(c); });
}

bool is_epsilon(const AstPtr& a) { return a->kind == NodeKind::Epsilon; }

std::string canonical_text(const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::Label:
        return a->label;
    case NodeKind::Epsilon:
        return "ε";
    case NodeKind::Plus:
        return canonical_text(a->children.front()) + "+";
    case NodeKind::Star:
        return canonical_text(a->children.front()) + "*";
    case NodeKind::Concat:
    case NodeKind::Alt: {
        const char sep = a->kind == NodeKind::Concat ? '.' : '|';
        std::string out = "(";
        for (std::size_t i = 0; i < a->children.size(); ++i) {
            if (i) out += sep;
            out += canonical_text(a->children[i]);
        }
        out += ')';
        return out;
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AstPtr parse() {
        skip_ws();
        if (eof()) throw ParseError("empty query", 0);
        AstPtr a = parse_alt();
        skip_ws();
        if (!eof()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                                     pos_);
        return a;
    }

private:
    AstPtr parse_alt() {
        std::vector<AstPtr> branches;
        branches.push_back(parse_concat());
        skip_ws();
        while (at('|')) {
            ++pos_;
            skip_ws();
            if (eof() || at(')') || at('|'))
                throw ParseError("empty alternation branch", pos_);
            branches.push_back(parse_concat());
            skip_ws();
        }
        return ast::alt(std::move(branches));
    }

    AstPtr parse_concat() {
        std::vector<AstPtr> parts;
        parts.push_back(parse_postfix());
        skip_ws();
        while (at_dot()) {
            consume_dot();
            skip_ws();
            if (eof() || at(')') || at('|'))
                throw ParseError("dangling concatenation operator", pos_);
            parts.push_back(parse_postfix());
            skip_ws();
        }
        return ast::concat(std::move(parts));
    }

    AstPtr parse_postfix() {
        AstPtr a = parse_primary();
        skip_ws();
        while (at('+') || at('*')) {
            a = text_[pos_] == '+' ? ast::plus(a) : ast::star(a);
            ++pos_;
            skip_ws();
        }
        return a;
    }

    AstPtr parse_primary() {
        skip_ws();
        if (eof()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            AstPtr a = parse_alt();
            skip_ws();
            if (!at(')')) throw ParseError("unbalanced parenthesis", open);
            ++pos_;
            return a;
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (!eof() && is_ident_char(text_[pos_])) ++pos_;
            return ast::label(std::string(text_.substr(start, pos_ - start)));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    static bool is_ident_start(char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

    bool eof() const { return pos_ >= text_.size(); }
    bool at(char c) const { return !eof() && text_[pos_] == c; }
    // '.' or the UTF-8 middle dot U+00B7.
    bool at_dot() const {
        if (at('.')) return true;
        return pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xC2 &&
               static_cast<unsigned char>(text_[pos_ + 1]) == 0xB7;
    }
    void consume_dot() { pos_ += at('.') ? 1 : 2; }
    void skip_ws() {
        while (!eof() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

AstPtr parse_rpq(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// DNF conversion and clause decomposition
// ---------------------------------------------------------------------------

namespace {

std::vector<AstPtr> dnf_rec(const AstPtr& a, std::size_t cap) {
    switch (a->kind) {
    case NodeKind::Alt: {
        std::vector<AstPtr> out;
        for (const AstPtr& c : a->children) {
            auto sub = dnf_rec(c, cap);
            out.insert(out.end(), sub.begin(), sub.end());
            if (out.size() > cap) throw DnfCapError("DNF clause count exceeds cap");
        }
        return out;
    }
    case NodeKind::Concat: {
        std::vector<std::vector<AstPtr>> acc{{}};
        for (const AstPtr& c : a->children) {
            auto sub = dnf_rec(c, cap);
            if (acc.size() * sub.size() > cap)
                throw DnfCapError("DNF clause count exceeds cap");
            std::vector<std::vector<AstPtr>> next;
            next.reserve(acc.size() * sub.size());
            for (const auto& prefix : acc) {
                for (const AstPtr& s : sub) {
                    auto item = prefix;
                    item.push_back(s);
                    next.push_back(std::move(item));
                }
            }
            acc = std::move(next);
        }
        std::vector<AstPtr> out;
        out.reserve(acc.size());
        for (auto& parts : acc) out.push_back(ast::concat(std::move(parts)));
        return out;
    }
    default:
        // Labels, Epsilon, and closures are DNF literals.
        return {a};
    }
}

} // namespace

std::vector<AstPtr> to_dnf(const AstPtr& a, std::size_t clause_cap) {
    auto clauses = dnf_rec(a, clause_cap);
    std::vector<AstPtr> out;
    std::unordered_set<std::string> seen;
    for (AstPtr& c : clauses)
        if (seen.insert(canonical_text(c)).second) out.push_back(std::move(c));
    return out;
}

Clause decompose_clause(const AstPtr& clause) {
    std::vector<AstPtr> items;
    if (clause->kind == NodeKind::Concat)
        items = clause->children;
    else
        items.push_back(clause);

    std::ptrdiff_t closure = -1;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(items.size()) - 1; i >= 0; --i) {
        if (items[i]->kind == NodeKind::Plus || items[i]->kind == NodeKind::Star) {
            closure = i;
            break;
        }
    }
    if (closure < 0) return {ast::epsilon(), ast::epsilon(), ClosureType::None, clause};

    Clause out;
    out.pre = ast::concat({items.begin(), items.begin() + closure});
    out.r = items[closure]->children.front();
    out.type = items[closure]->kind == NodeKind::Plus ? ClosureType::Plus : ClosureType::Star;
    out.post = ast::concat({items.begin() + closure + 1, items.end()});
    return out;
}

} // namespace rpq

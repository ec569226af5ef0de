#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpq {

enum class NodeKind { Label, Epsilon, Concat, Alt, Plus, Star };

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

// Immutable regular-expression tree. Concat/Alt are n-ary (>= 2 children);
// Plus/Star have exactly one child. Epsilon is representable but only
// produced internally, never parsed from user text.
struct AstNode {
    NodeKind kind;
    std::string label;          // Label nodes only
    std::vector<AstPtr> children;
};

namespace ast {
AstPtr label(std::string name);
AstPtr epsilon();
// Flattens nested Concat children and drops Epsilon children; returns
// epsilon() for an empty list and the sole child for a singleton.
AstPtr concat(std::vector<AstPtr> children);
AstPtr alt(std::vector<AstPtr> children);
AstPtr plus(AstPtr child);
AstPtr star(AstPtr child);
} // namespace ast

bool structural_equal(const AstPtr& a, const AstPtr& b);
bool contains_closure(const AstPtr& a);
bool is_epsilon(const AstPtr& a);

// Deterministic parenthesis-normalized rendering; structurally equal trees
// render identically. Used as the RTC cache key.
std::string canonical_text(const AstPtr& a);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Grammar: `.` (or `·`) concatenation, `|` alternation, postfix `+`/`*`,
// parentheses; labels are [A-Za-z_][A-Za-z0-9_]*. `.` binds tighter than
// `|`; postfix operators bind tightest.
AstPtr parse_rpq(std::string_view text);

class DnfCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Disjunctive normal form treating each outermost Kleene closure as a
// literal: alternation reachable through Concat/Alt nodes is distributed
// left to right, closure bodies stay atomic, structural duplicates are
// dropped. Throws DnfCapError past `clause_cap`.
std::vector<AstPtr> to_dnf(const AstPtr& a, std::size_t clause_cap = 4096);

enum class ClosureType { None, Plus, Star };

// One DNF clause split around its rightmost top-level Kleene closure.
// `post` is closure-free by construction.
struct Clause {
    AstPtr pre;
    AstPtr r;
    ClosureType type = ClosureType::None;
    AstPtr post;
};

Clause decompose_clause(const AstPtr& clause);

} // namespace rpq

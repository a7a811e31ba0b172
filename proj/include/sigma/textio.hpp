#pragma once

#include "sigma/sigma_set.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sigma {

/// Expression tree over σ-sets. Binary operators all share one precedence
/// level and parse left-associatively; `~` (antiset) binds tightest.
enum class ExprKind {
    literal,            // a set literal
    anti,               // ~x
    fuse,               // x + y
    star_intersection,  // x ^ y
    star_difference,    // x \ y
    set_union,          // x | y
};

struct ExprNode {
    ExprKind kind = ExprKind::literal;
    SigmaSet literal;                // literal nodes only
    std::unique_ptr<ExprNode> left;  // anti: the operand; binary: lhs
    std::unique_ptr<ExprNode> right; // binary: rhs
};

/// Structural equality of expression trees.
bool expr_equal(const ExprNode& a, const ExprNode& b);

/// Parses a set literal:
///   set  := '{' [atom (',' atom)*] '}'
///   atom := INT ('*' | '_0')?        with INT ≥ 1
/// Whitespace-insensitive; duplicates collapse; an inverse pair in one
/// literal throws ProperClassError; syntax faults throw ParseError.
/// '★' is accepted as an input alias for '*'.
SigmaSet parse_set(const std::string& text);

/// Parses an expression:
///   expr    := unary (BINOP unary)*   — single precedence, LEFT-associative
///   unary   := '~' unary | primary
///   primary := set | '(' expr ')'
///   BINOP   := '+' | '^' | '\' | '|'
/// Unicode operators ⊕, ∩̂ (with or without the circumflex), ⋇ and ★ are
/// accepted as input aliases for '+', '^', '\' and '*'.
std::unique_ptr<ExprNode> parse_expr(const std::string& text);

/// Annihilation counts of every fusion node, in evaluation order
/// (depth-first, left operand before right).
struct EvalTrace {
    std::vector<int> fusion_annihilations;
};

/// Evaluates the tree with the core operators. Antiset of a non-entire
/// operand throws NotEntireError; union of inverse-paired operands throws
/// ProperClassError.
SigmaSet eval_expr(const ExprNode& node, EvalTrace* trace = nullptr);

/// Canonical rendering: "{1, 2_0, 3*}", empty set as "{}". Inverse of
/// parse_set: parse_set(format_set(s)) == s.
std::string format_set(const SigmaSet& s);

} // namespace sigma

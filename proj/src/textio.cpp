#include "sigma/textio.hpp"

#include "sigma/errors.hpp"

#include <cctype>
#include <string_view>
#include <utility>

namespace sigma {

namespace {

enum class TokKind {
    lbrace, rbrace, comma, lparen, rparen,
    tilde, plus, caret, backslash, pipe,
    integer, star, zero_mark, end,
};

struct Token {
    TokKind kind = TokKind::end;
    int value = 0;           // integer tokens
    std::size_t offset = 0;  // byte offset, for error messages
};

const char* token_name(TokKind kind) {
    switch (kind) {
    case TokKind::lbrace: return "'{'";
    case TokKind::rbrace: return "'}'";
    case TokKind::comma: return "','";
    case TokKind::lparen: return "'('";
    case TokKind::rparen: return "')'";
    case TokKind::tilde: return "'~'";
    case TokKind::plus: return "'+'";
    case TokKind::caret: return "'^'";
    case TokKind::backslash: return "'\\'";
    case TokKind::pipe: return "'|'";
    case TokKind::integer: return "an integer";
    case TokKind::star: return "'*'";
    case TokKind::zero_mark: return "'_0'";
    case TokKind::end: return "end of input";
    }
    return "?";
}

/// Tokenizer over the ASCII surface syntax. The Unicode operators ⊕, ⋇, ★
/// and ∩ (optionally carrying a combining circumflex) are accepted as input
/// aliases for '+', '\', '*' and '^'.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token tok = current_;
        advance();
        return tok;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("expected " + expected + " but found " +
                         token_name(current_.kind) + " at offset " +
                         std::to_string(current_.offset));
    }

private:
    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_).substr(0, prefix.size()) == prefix;
    }

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = TokKind::end;
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '{': current_.kind = TokKind::lbrace; ++pos_; return;
        case '}': current_.kind = TokKind::rbrace; ++pos_; return;
        case ',': current_.kind = TokKind::comma; ++pos_; return;
        case '(': current_.kind = TokKind::lparen; ++pos_; return;
        case ')': current_.kind = TokKind::rparen; ++pos_; return;
        case '~': current_.kind = TokKind::tilde; ++pos_; return;
        case '+': current_.kind = TokKind::plus; ++pos_; return;
        case '^': current_.kind = TokKind::caret; ++pos_; return;
        case '\\': current_.kind = TokKind::backslash; ++pos_; return;
        case '|': current_.kind = TokKind::pipe; ++pos_; return;
        default: break;
        }
        if (c == '_') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '0') {
                current_.kind = TokKind::zero_mark;
                pos_ += 2;
                return;
            }
            throw ParseError("expected '_0' at offset " + std::to_string(pos_));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long value = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > Atom::max_index) {
                    throw SizeLimitError("atom index at offset " +
                                         std::to_string(current_.offset) +
                                         " exceeds the supported maximum of " +
                                         std::to_string(Atom::max_index));
                }
                ++pos_;
            }
            current_.kind = TokKind::integer;
            current_.value = static_cast<int>(value);
            return;
        }
        if (starts_with("⊕")) { current_.kind = TokKind::plus; pos_ += 3; return; }
        if (starts_with("⋇")) { current_.kind = TokKind::backslash; pos_ += 3; return; }
        if (starts_with("★")) { current_.kind = TokKind::star; pos_ += 3; return; }
        if (starts_with("∩")) {  // '∩', optionally with a combining '̂'
            current_.kind = TokKind::caret;
            pos_ += 3;
            if (starts_with("̂")) pos_ += 2;
            return;
        }
        if (c == '*') { current_.kind = TokKind::star; ++pos_; return; }
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

Atom parse_atom(Lexer& lex) {
    if (lex.peek().kind != TokKind::integer) lex.fail("an atom");
    Token index = lex.next();
    if (index.value < 1) {
        throw ParseError("atom index must be >= 1 at offset " +
                         std::to_string(index.offset));
    }
    if (lex.peek().kind == TokKind::star) {
        lex.next();
        return Atom::antinatural(index.value);
    }
    if (lex.peek().kind == TokKind::zero_mark) {
        lex.next();
        return Atom::zero_natural(index.value);
    }
    return Atom::natural(index.value);
}

SigmaSet parse_set_body(Lexer& lex) {
    if (lex.peek().kind != TokKind::lbrace) lex.fail("'{'");
    lex.next();
    std::vector<Atom> atoms;
    if (lex.peek().kind != TokKind::rbrace) {
        atoms.push_back(parse_atom(lex));
        while (lex.peek().kind == TokKind::comma) {
            lex.next();
            atoms.push_back(parse_atom(lex));
        }
    }
    if (lex.peek().kind != TokKind::rbrace) lex.fail("',' or '}'");
    lex.next();
    return SigmaSet(std::span<const Atom>(atoms.data(), atoms.size()));
}

std::unique_ptr<ExprNode> make_literal(SigmaSet value) {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprKind::literal;
    node->literal = std::move(value);
    return node;
}

std::unique_ptr<ExprNode> parse_expression(Lexer& lex);

std::unique_ptr<ExprNode> parse_unary(Lexer& lex) {
    if (lex.peek().kind == TokKind::tilde) {
        lex.next();
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprKind::anti;
        node->left = parse_unary(lex);
        return node;
    }
    if (lex.peek().kind == TokKind::lbrace) {
        return make_literal(parse_set_body(lex));
    }
    if (lex.peek().kind == TokKind::lparen) {
        lex.next();
        auto node = parse_expression(lex);
        if (lex.peek().kind != TokKind::rparen) lex.fail("')'");
        lex.next();
        return node;
    }
    lex.fail("a set literal, '(' or '~'");
}

// All binary operators share one precedence level and fold to the LEFT, so
// "a + b + c" is "(a + b) + c" — fusion's non-associativity stays visible.
std::unique_ptr<ExprNode> parse_expression(Lexer& lex) {
    std::unique_ptr<ExprNode> node = parse_unary(lex);
    for (;;) {
        ExprKind kind;
        switch (lex.peek().kind) {
        case TokKind::plus: kind = ExprKind::fuse; break;
        case TokKind::caret: kind = ExprKind::star_intersection; break;
        case TokKind::backslash: kind = ExprKind::star_difference; break;
        case TokKind::pipe: kind = ExprKind::set_union; break;
        default: return node;
        }
        lex.next();
        auto parent = std::make_unique<ExprNode>();
        parent->kind = kind;
        parent->left = std::move(node);
        parent->right = parse_unary(lex);
        node = std::move(parent);
    }
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != TokKind::end) lex.fail("end of input");
}

} // namespace

bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ExprKind::literal) return a.literal == b.literal;
    if (a.kind == ExprKind::anti) return expr_equal(*a.left, *b.left);
    return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
}

SigmaSet parse_set(const std::string& text) {
    Lexer lex(text);
    SigmaSet value = parse_set_body(lex);
    expect_end(lex);
    return value;
}

std::unique_ptr<ExprNode> parse_expr(const std::string& text) {
    Lexer lex(text);
    std::unique_ptr<ExprNode> node = parse_expression(lex);
    expect_end(lex);
    return node;
}

SigmaSet eval_expr(const ExprNode& node, EvalTrace* trace) {
    switch (node.kind) {
    case ExprKind::literal:
        return node.literal;
    case ExprKind::anti: {
        SigmaSet operand = eval_expr(*node.left, trace);
        std::optional<SigmaSet> anti = anti_set(operand);
        if (!anti) {
            throw NotEntireError("cannot take the antiset of " + format_set(operand) +
                                 "; zero-naturals have no antielement");
        }
        return *anti;
    }
    case ExprKind::fuse: {
        SigmaSet lhs = eval_expr(*node.left, trace);
        SigmaSet rhs = eval_expr(*node.right, trace);
        FusionOutcome out = fuse(lhs, rhs);
        if (trace) trace->fusion_annihilations.push_back(out.annihilation_count);
        return out.result;
    }
    case ExprKind::star_intersection: {
        SigmaSet lhs = eval_expr(*node.left, trace);
        SigmaSet rhs = eval_expr(*node.right, trace);
        return star_intersection(lhs, rhs);
    }
    case ExprKind::star_difference: {
        SigmaSet lhs = eval_expr(*node.left, trace);
        SigmaSet rhs = eval_expr(*node.right, trace);
        return star_difference(lhs, rhs);
    }
    case ExprKind::set_union: {
        SigmaSet lhs = eval_expr(*node.left, trace);
        SigmaSet rhs = eval_expr(*node.right, trace);
        return set_union(lhs, rhs);
    }
    }
    throw Error("unreachable expression kind");
}

std::string format_set(const SigmaSet& s) {
    std::string out = "{";
    bool first = true;
    for (Atom a : s.atoms()) {
        if (!first) out += ", ";
        first = false;
        out += to_string(a);
    }
    out += "}";
    return out;
}

} // namespace sigma

#ifndef FANO_PARSER_HPP
#define FANO_PARSER_HPP

#include <string>
#include <string_view>

#include "fano/polynomial.hpp"

namespace fano {

namespace detail {

enum class TokenKind { Variable, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::size_t pos;
    std::string text; // digits for Variable (index) and Number
};

/// Splits polynomial text into tokens; whitespace is skipped.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    /// Character immediately following the current token, or '\0'.
    char raw_after() const noexcept { return cursor_ < text_.size() ? text_[cursor_] : '\0'; }
    std::string_view text() const noexcept { return text_; }

private:
    void advance();

    std::string_view text_;
    std::size_t cursor_ = 0;
    Token current_{TokenKind::End, 0, {}};
};

[[noreturn]] void syntax_error(const Token& at, std::string_view expected);

} // namespace detail

/// Parses `text` into canonical form. Grammar (whitespace insignificant):
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := var | int ('/' uint)? | '(' expr ')'
///   var    := 'z' uint
///
/// The optional "/uint" lets every canonical rational coefficient round-trip.
template <FieldScalar S>
Polynomial<S> parse_polynomial(std::string_view text, std::size_t nvars, const FieldSpec& field) {
    using detail::TokenKind;
    detail::Lexer lex(text);
    using P = Polynomial<S>;

    auto expect = [&](TokenKind kind, std::string_view what) {
        if (lex.peek().kind != kind) detail::syntax_error(lex.peek(), what);
        lex.take();
    };

    struct Rules {
        detail::Lexer& lex;
        std::size_t nvars;
        const FieldSpec& field;

        P expr() {
            bool negate = false;
            if (lex.peek().kind == TokenKind::Plus || lex.peek().kind == TokenKind::Minus)
                negate = lex.take().kind == TokenKind::Minus;
            P acc = term();
            if (negate) acc = -acc;
            while (lex.peek().kind == TokenKind::Plus || lex.peek().kind == TokenKind::Minus) {
                const bool minus = lex.take().kind == TokenKind::Minus;
                P rhs = term();
                if (minus)
                    acc -= rhs;
                else
                    acc += rhs;
            }
            return acc;
        }

        P term() {
            P acc = factor();
            while (lex.peek().kind == TokenKind::Star) {
                lex.take();
                acc *= factor();
            }
            return acc;
        }

        P factor() {
            P b = base();
            if (lex.peek().kind != TokenKind::Caret) return b;
            const detail::Token caret = lex.take();
            const detail::Token& t = lex.peek();
            if (t.kind != TokenKind::Number)
                throw Error(ErrorCode::NonIntegerExponent, "exponent at offset " + std::to_string(caret.pos + 1) +
                                                               " is not a non-negative integer literal");
            const char after = lex.raw_after();
            if (after == '.' || after == '/')
                throw Error(ErrorCode::NonIntegerExponent, "fractional exponent at offset " + std::to_string(t.pos));
            const BigInt e(t.text);
            if (e > 1000000) throw Error(ErrorCode::InvalidDegree, "exponent " + t.text + " too large");
            lex.take();
            return b.pow(static_cast<std::uint32_t>(e.get_ui()));
        }

        P base() {
            const detail::Token t = lex.peek();
            switch (t.kind) {
            case TokenKind::Variable: {
                lex.take();
                const BigInt idx(t.text);
                if (idx >= nvars)
                    throw Error(ErrorCode::VariableOutOfRange,
                                "z" + t.text + " with only " + std::to_string(nvars) + " variables");
                return P::variable(nvars, idx.get_ui(), field);
            }
            case TokenKind::Number: {
                lex.take();
                S value = S::from(BigInt(t.text), field);
                if (lex.peek().kind == TokenKind::Slash) {
                    lex.take();
                    const detail::Token d = lex.peek();
                    if (d.kind != TokenKind::Number) detail::syntax_error(d, "integer denominator");
                    lex.take();
                    value = value / S::from(BigInt(d.text), field);
                }
                return P::constant(nvars, value, field);
            }
            case TokenKind::LParen: {
                lex.take();
                P inner = expr();
                if (lex.peek().kind != TokenKind::RParen) detail::syntax_error(lex.peek(), "')'");
                lex.take();
                return inner;
            }
            default:
                detail::syntax_error(t, "variable, integer or '('");
            }
        }
    };

    Rules rules{lex, nvars, field};
    P result = rules.expr();
    expect(TokenKind::End, "end of input");
    return result;
}

} // namespace fano

#endif // FANO_PARSER_HPP

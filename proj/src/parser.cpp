#include "fano/parser.hpp"

#include <cctype>

namespace fano::detail {

void Lexer::advance() {
    while (cursor_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[cursor_]))) ++cursor_;
    const std::size_t start = cursor_;
    if (cursor_ >= text_.size()) {
        current_ = {TokenKind::End, start, {}};
        return;
    }
    const char c = text_[cursor_];
    auto digits = [&]() {
        const std::size_t from = cursor_;
        while (cursor_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[cursor_]))) ++cursor_;
        return std::string(text_.substr(from, cursor_ - from));
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
        current_ = {TokenKind::Number, start, digits()};
        return;
    }
    if (c == 'z') {
        ++cursor_;
        std::string idx = digits();
        if (idx.empty()) syntax_error({TokenKind::Variable, start, {}}, "variable index after 'z'");
        current_ = {TokenKind::Variable, start, std::move(idx)};
        return;
    }
    ++cursor_;
    switch (c) {
    case '+': current_ = {TokenKind::Plus, start, "+"}; return;
    case '-': current_ = {TokenKind::Minus, start, "-"}; return;
    case '*': current_ = {TokenKind::Star, start, "*"}; return;
    case '^': current_ = {TokenKind::Caret, start, "^"}; return;
    case '/': current_ = {TokenKind::Slash, start, "/"}; return;
    case '(': current_ = {TokenKind::LParen, start, "("}; return;
    case ')': current_ = {TokenKind::RParen, start, ")"}; return;
    default:
        throw Error(ErrorCode::SyntaxError,
                    "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(start));
    }
}

void syntax_error(const Token& at, std::string_view expected) {
    const std::string found = at.kind == TokenKind::End ? "end of input" : "'" + at.text + "'";
    throw Error(ErrorCode::SyntaxError,
                "expected " + std::string(expected) + " at offset " + std::to_string(at.pos) + ", found " + found);
}

} // namespace fano::detail

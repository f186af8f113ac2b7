#include "fano/forms.hpp"

#include <cctype>

namespace fano {

std::size_t infer_variable_count(const std::vector<std::string>& exprs) {
    std::size_t count = 1;
    for (const auto& e : exprs) {
        detail::Lexer lex(e);
        while (lex.peek().kind != detail::TokenKind::End) {
            const detail::Token t = lex.take();
            if (t.kind == detail::TokenKind::Variable) {
                const BigInt idx(t.text);
                if (idx > 4096) throw Error(ErrorCode::VariableOutOfRange, "z" + t.text);
                count = std::max<std::size_t>(count, idx.get_ui() + 1);
            }
        }
    }
    return count;
}

} // namespace fano

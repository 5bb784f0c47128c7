#include "lexer.hpp"

#include <cctype>

namespace trisect::script::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n = 1) {
        i += n;
        col += static_cast<int>(n);
    };

    while (i < text.size()) {
        const char c = text[i];
        const SourcePos pos{line, col};
        if (c == '\n') {
            out.push_back({Tok::newline, "\\n", pos});
            ++i;
            ++line;
            col = 1;
        } else if (c == '\r' || c == ' ' || c == '\t') {
            advance();
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance();
        } else if (ident_start(c)) {
            const std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) advance();
            out.push_back({Tok::ident, std::string(text.substr(start, i - start)), pos});
        } else if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
            const std::size_t start = i;
            if (c == '-') advance();
            while (i < text.size() && digit(text[i])) advance();
            if (i < text.size() && text[i] == '.') {
                if (i + 1 >= text.size() || !digit(text[i + 1])) {
                    throw ScriptError(ScriptErrc::syntax_error, pos, std::string(text.substr(start, i - start + 1)),
                                      "malformed number");
                }
                advance();
                while (i < text.size() && digit(text[i])) advance();
            }
            if (i < text.size() && ident_char(text[i])) {
                throw ScriptError(ScriptErrc::syntax_error, pos, std::string(text.substr(start, i - start + 1)),
                                  "malformed number");
            }
            out.push_back({Tok::number, std::string(text.substr(start, i - start)), pos});
        } else {
            Tok kind;
            switch (c) {
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case ',': kind = Tok::comma; break;
                case ':': kind = Tok::colon; break;
                case '=': kind = Tok::equals; break;
                default:
                    throw ScriptError(ScriptErrc::syntax_error, pos, std::string(1, c), "unexpected character");
            }
            out.push_back({kind, std::string(1, c), pos});
            advance();
        }
    }
    out.push_back({Tok::end, "<end>", {line, col}});
    return out;
}

}  // namespace trisect::script::detail

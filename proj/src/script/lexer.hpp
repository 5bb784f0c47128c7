#pragma once

#include "trisect/script.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trisect::script::detail {

enum class Tok { ident, number, lparen, rparen, comma, colon, equals, newline, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourcePos pos;
};

/// Splits a script into tokens. Comments are dropped; CRLF counts as one
/// newline. Throws ScriptError(syntax_error) on stray characters.
std::vector<Token> tokenize(std::string_view text);

}  // namespace trisect::script::detail

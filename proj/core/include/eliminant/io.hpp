#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eliminant/poly.hpp"

namespace eliminant {

struct Token {
    enum class Kind {
        Ident,
        Integer,
        Rational,
        Plus,
        Minus,
        Star,
        Caret,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Comma,
        Semicolon,
        Equals,
        End,
    };
    Kind kind;
    std::string text;
    int line = 1;
    int col = 1;
};

// throws Error(ParseError) with line:column on bad input
std::vector<Token> tokenize(const std::string& input);

[[noreturn]] void parse_fail(const Token& at, const std::string& msg);

// Resolves a bare identifier to a polynomial (ring variable, parameter, or a
// script binding).
using NameResolver = std::function<Poly(const std::string& name, const Token& at)>;

// Parses one expression from tokens[pos...]; advances pos past it.
Poly parse_expression(const std::vector<Token>& toks, size_t& pos,
                      const RingPtr& ring, const NameResolver& resolve);

// Parses a whole string as a single polynomial over `ring`; identifiers must
// be ring variables or domain parameters.
Poly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace eliminant

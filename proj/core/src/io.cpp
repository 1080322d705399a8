#include "eliminant/io.hpp"

#include <cctype>

namespace eliminant {

void parse_fail(const Token& at, const std::string& msg) {
    fail(ErrCode::ParseError, std::to_string(at.line) + ":" +
                                  std::to_string(at.col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c) {
        out.push_back({k, std::move(text), l, c});
    };
    while (i < input.size()) {
        char ch = input[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {  // comment to end of line
            while (i < input.size() && input[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < input.size() &&
                   std::isdigit(static_cast<unsigned char>(input[j])))
                ++j;
            // rational literal: digits '/' digits with no spaces
            if (j < input.size() && input[j] == '/' && j + 1 < input.size() &&
                std::isdigit(static_cast<unsigned char>(input[j + 1]))) {
                size_t k = j + 1;
                while (k < input.size() &&
                       std::isdigit(static_cast<unsigned char>(input[k])))
                    ++k;
                push(Token::Kind::Rational, input.substr(i, k - i), tl, tc);
                col += static_cast<int>(k - i);
                i = k;
            } else {
                push(Token::Kind::Integer, input.substr(i, j - i), tl, tc);
                col += static_cast<int>(j - i);
                i = j;
            }
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) ||
                    input[j] == '_'))
                ++j;
            push(Token::Kind::Ident, input.substr(i, j - i), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case '[': k = Token::Kind::LBracket; break;
            case ']': k = Token::Kind::RBracket; break;
            case ',': k = Token::Kind::Comma; break;
            case ';': k = Token::Kind::Semicolon; break;
            case '=': k = Token::Kind::Equals; break;
            default:
                fail(ErrCode::ParseError,
                     std::to_string(line) + ":" + std::to_string(col) +
                         ": unexpected character '" + std::string(1, ch) + "'");
        }
        push(k, std::string(1, ch), tl, tc);
        ++col;
        ++i;
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

namespace {

struct ExprParser {
    const std::vector<Token>& toks;
    size_t& pos;
    const RingPtr& ring;
    const NameResolver& resolve;

    const Token& peek() const { return toks[pos]; }
    const Token& next() { return toks[pos++]; }
    bool accept(Token::Kind k) {
        if (toks[pos].kind == k) {
            ++pos;
            return true;
        }
        return false;
    }
    const Token& expect(Token::Kind k, const char* what) {
        if (toks[pos].kind != k) parse_fail(toks[pos], std::string("expected ") + what);
        return toks[pos++];
    }

    Poly expr() {
        Poly r = term();
        while (true) {
            if (accept(Token::Kind::Plus)) {
                r = poly_add(r, term());
            } else if (accept(Token::Kind::Minus)) {
                r = poly_sub(r, term());
            } else {
                return r;
            }
        }
    }

    Poly term() {
        Poly r = factor();
        while (accept(Token::Kind::Star)) r = poly_mul(r, factor());
        return r;
    }

    Poly factor() {
        bool neg = false;
        while (true) {
            if (accept(Token::Kind::Minus)) {
                neg = !neg;
            } else if (accept(Token::Kind::Plus)) {
                // unary plus, no-op
            } else {
                break;
            }
        }
        Poly a = atom();
        if (accept(Token::Kind::Caret)) {
            const Token& e = peek();
            if (e.kind != Token::Kind::Integer)
                parse_fail(e, "exponent must be a nonnegative integer");
            next();
            a = poly_pow(a, std::stoul(e.text));
        }
        return neg ? poly_neg(a) : a;
    }

    Poly atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Integer: {
                next();
                return Poly::from_int(ring, Int(t.text));
            }
            case Token::Kind::Rational: {
                next();
                Rat q(t.text);
                q.canonicalize();
                return Poly::constant(ring, ring->domain()->from_rat(q));
            }
            case Token::Kind::LParen: {
                next();
                Poly r = expr();
                expect(Token::Kind::RParen, "')'");
                return r;
            }
            case Token::Kind::Ident: {
                next();
                std::string name = t.text;
                if (peek().kind == Token::Kind::LBracket) {
                    // subscripted variable, e.g. x[0,1]
                    name += next().text;
                    while (true) {
                        const Token& n = expect(Token::Kind::Integer, "index");
                        name += n.text;
                        if (accept(Token::Kind::Comma)) {
                            name += ",";
                            continue;
                        }
                        expect(Token::Kind::RBracket, "']'");
                        name += "]";
                        break;
                    }
                }
                return resolve(name, t);
            }
            default:
                parse_fail(t, "expected a polynomial expression");
        }
    }
};

}  // namespace

Poly parse_expression(const std::vector<Token>& toks, size_t& pos,
                      const RingPtr& ring, const NameResolver& resolve) {
    ExprParser p{toks, pos, ring, resolve};
    return p.expr();
}

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    auto toks = tokenize(text);
    size_t pos = 0;
    NameResolver resolve = [&](const std::string& name, const Token& at) -> Poly {
        if (auto idx = ring->var_index(name))
            return Poly::variable(ring, *idx);
        const auto& dom = ring->domain();
        if (dom->kind() == DomainKind::PolynomialDomain) {
            const auto& ps = dom->params();
            for (size_t i = 0; i < ps.size(); ++i)
                if (ps[i] == name)
                    return Poly::constant(ring,
                                          dom->param_var(static_cast<int>(i)));
        }
        parse_fail(at, "undeclared identifier '" + name + "'");
    };
    Poly r = parse_expression(toks, pos, ring, resolve);
    if (toks[pos].kind != Token::Kind::End)
        parse_fail(toks[pos], "trailing input after expression");
    return r;
}

}  // namespace eliminant

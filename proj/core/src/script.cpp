#include "eliminant/script.hpp"

#include <chrono>
#include <map>
#include <variant>

#include "json.hpp"

#include "eliminant/chow.hpp"
#include "eliminant/io.hpp"

namespace eliminant {

namespace {

const std::vector<std::string> kCommands = {
    "resultant",  "discriminant", "chowform",    "chowequations", "dualize",
    "stiefel",    "cayleytrick",  "dualvariety", "veronese"};

bool is_command(const std::string& name) {
    for (const auto& c : kCommands)
        if (c == name) return true;
    return false;
}

// canonical spacing: binary +/- and = spaced, everything else tight,
// one space after argument commas
std::string render_tokens(const std::vector<Token>& toks, size_t from,
                          size_t to) {
    std::string out;
    for (size_t i = from; i < to; ++i) {
        const Token& t = toks[i];
        bool unary =
            (t.kind == Token::Kind::Minus || t.kind == Token::Kind::Plus) &&
            (i == from || toks[i - 1].kind == Token::Kind::LParen ||
             toks[i - 1].kind == Token::Kind::LBracket ||
             toks[i - 1].kind == Token::Kind::Comma ||
             toks[i - 1].kind == Token::Kind::Equals ||
             toks[i - 1].kind == Token::Kind::Plus ||
             toks[i - 1].kind == Token::Kind::Minus);
        switch (t.kind) {
            case Token::Kind::Plus:
            case Token::Kind::Minus:
                out += unary ? t.text : " " + t.text + " ";
                break;
            case Token::Kind::Equals:
                out += " = ";
                break;
            case Token::Kind::Comma:
                out += ", ";
                break;
            default:
                out += t.text;
        }
    }
    return out;
}

size_t statement_end(const std::vector<Token>& toks, size_t pos) {
    while (toks[pos].kind != Token::Kind::Semicolon &&
           toks[pos].kind != Token::Kind::End)
        ++pos;
    if (toks[pos].kind != Token::Kind::Semicolon)
        parse_fail(toks[pos], "expected ';'");
    return pos;
}

// Pure syntax walk over one right-hand side: expressions with + - * ^,
// literals, (possibly subscripted) identifiers, and call forms f(a, b).
// Reports errors at the original source position.
struct SyntaxCheck {
    const std::vector<Token>& toks;
    size_t pos;
    size_t end;

    const Token& peek() const { return toks[pos]; }
    bool at_end() const { return pos >= end; }
    bool accept(Token::Kind k) {
        if (!at_end() && toks[pos].kind == k) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const char* what) {
        if (at_end() || toks[pos].kind != k)
            parse_fail(toks[pos], std::string("expected ") + what);
        ++pos;
    }

    void expr() {
        term();
        while (accept(Token::Kind::Plus) || accept(Token::Kind::Minus)) term();
    }
    void term() {
        factor();
        while (accept(Token::Kind::Star)) factor();
    }
    void factor() {
        while (accept(Token::Kind::Plus) || accept(Token::Kind::Minus)) {
        }
        atom();
        if (accept(Token::Kind::Caret))
            expect(Token::Kind::Integer, "a nonnegative integer exponent");
    }
    void atom() {
        if (accept(Token::Kind::Integer) || accept(Token::Kind::Rational))
            return;
        if (accept(Token::Kind::LParen)) {
            expr();
            expect(Token::Kind::RParen, "')'");
            return;
        }
        if (accept(Token::Kind::Ident)) {
            if (accept(Token::Kind::LBracket)) {
                do {
                    expect(Token::Kind::Integer, "index");
                } while (accept(Token::Kind::Comma));
                expect(Token::Kind::RBracket, "']'");
                return;
            }
            if (accept(Token::Kind::LParen)) {
                if (!accept(Token::Kind::RParen)) {
                    do {
                        expr();
                    } while (accept(Token::Kind::Comma));
                    expect(Token::Kind::RParen, "')'");
                }
            }
            return;
        }
        parse_fail(peek(), "expected a polynomial expression");
    }
};

void check_statement_syntax(const std::vector<Token>& toks, size_t from,
                            size_t to) {
    SyntaxCheck c{toks, from, to};
    c.expr();
    if (c.pos != to) parse_fail(toks[c.pos], "unexpected token in statement");
}

}  // namespace

Script parse_script(const std::string& text) {
    auto toks = tokenize(text);
    size_t pos = 0;
    auto expect = [&](Token::Kind k, const char* what) -> const Token& {
        if (toks[pos].kind != k) parse_fail(toks[pos], std::string("expected ") + what);
        return toks[pos++];
    };

    Script s;
    const Token& kw = expect(Token::Kind::Ident, "'ring' declaration");
    if (kw.text != "ring") parse_fail(kw, "script must start with a ring declaration");
    const Token& dom = expect(Token::Kind::Ident, "coefficient domain");
    if (dom.text == "ZZ" || dom.text == "QQ") {
        s.domain = dom.text;
    } else if (dom.text == "GF") {
        expect(Token::Kind::LParen, "'('");
        const Token& p = expect(Token::Kind::Integer, "prime");
        expect(Token::Kind::RParen, "')'");
        s.domain = "GF(" + p.text + ")";
    } else {
        parse_fail(dom, "domain must be ZZ, QQ, or GF(p)");
    }

    std::vector<std::vector<std::string>> blocks;
    while (toks[pos].kind == Token::Kind::LBracket) {
        ++pos;
        std::vector<std::string> names;
        while (true) {
            names.push_back(expect(Token::Kind::Ident, "variable name").text);
            if (toks[pos].kind == Token::Kind::Comma) {
                ++pos;
                continue;
            }
            break;
        }
        expect(Token::Kind::RBracket, "']'");
        blocks.push_back(std::move(names));
    }
    if (blocks.empty()) parse_fail(toks[pos], "ring declaration needs a variable block");
    if (blocks.size() > 2)
        parse_fail(toks[pos], "at most one coefficient-parameter block is supported");
    if (blocks.size() == 2) s.params = std::move(blocks[0]);
    s.vars = std::move(blocks.back());
    expect(Token::Kind::Semicolon, "';'");

    while (toks[pos].kind != Token::Kind::End) {
        size_t end = statement_end(toks, pos);
        ScriptStatement st;
        size_t body = pos;
        if (toks[pos].kind == Token::Kind::Ident &&
            toks[pos + 1].kind == Token::Kind::Equals) {
            st.name = toks[pos].text;
            body = pos + 2;
        }
        if (body == end) parse_fail(toks[pos], "empty statement");
        check_statement_syntax(toks, body, end);
        st.rhs = render_tokens(toks, body, end);
        s.statements.push_back(std::move(st));
        pos = end + 1;
    }
    if (s.statements.empty())
        fail(ErrCode::ParseError, "script has no command statement");
    for (size_t i = 0; i < s.statements.size(); ++i)
        if (s.statements[i].name.empty() && i + 1 != s.statements.size()) {
            fail(ErrCode::ParseError,
                 "only the final statement may be a bare command");
        }
    if (!s.statements.back().name.empty())
        fail(ErrCode::ParseError, "the final statement must be a command");
    return s;
}

std::string print_script(const Script& s) {
    std::string out = "ring " + s.domain;
    auto block = [](const std::vector<std::string>& names) {
        std::string b = "[";
        for (size_t i = 0; i < names.size(); ++i) {
            if (i) b += ",";
            b += names[i];
        }
        return b + "]";
    };
    if (!s.params.empty()) out += block(s.params);
    out += block(s.vars) + ";\n";
    for (const auto& st : s.statements) {
        if (!st.name.empty()) out += st.name + " = ";
        out += st.rhs + ";\n";
    }
    return out;
}

namespace {

using Value = std::variant<Poly, Ideal, ChowFormResult, CayleyTrickResult>;

std::string ideal_string(const Ideal& I) {
    std::string s = "ideal(";
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i) s += ", ";
        s += poly_to_string(I.gens()[i]);
    }
    return s + ")";
}

std::string value_string(const Value& v) {
    if (const auto* p = std::get_if<Poly>(&v)) return poly_to_string(*p);
    if (const auto* I = std::get_if<Ideal>(&v)) return ideal_string(*I);
    if (const auto* w = std::get_if<ChowFormResult>(&v))
        return poly_to_string(w->element.rep);
    const auto& ct = std::get<CayleyTrickResult>(v);
    return ideal_string(ct.segre);
}

struct Evaluator {
    RingPtr ring;
    const RunFlags& flags;
    std::map<std::string, Value> env;
    // filled by the outermost command call
    RunResult* record = nullptr;
    int depth = 0;

    Poly as_poly(const Value& v, const Token& at) {
        if (const auto* p = std::get_if<Poly>(&v)) return *p;
        parse_fail(at, "expected a polynomial argument");
    }
    Ideal as_ideal(const Value& v, const Token& at) {
        if (const auto* I = std::get_if<Ideal>(&v)) return *I;
        if (const auto* p = std::get_if<Poly>(&v))
            return Ideal(p->ring(), {*p});
        parse_fail(at, "expected an ideal argument");
    }
    ChowFormResult as_chow(const Value& v, const Token& at) {
        if (const auto* w = std::get_if<ChowFormResult>(&v)) return *w;
        parse_fail(at, "expected a Chow form argument");
    }

    Value eval(const std::vector<Token>& toks, size_t& pos) {
        const Token& t = toks[pos];
        if (t.kind == Token::Kind::Ident &&
            toks[pos + 1].kind == Token::Kind::LParen &&
            (is_command(t.text) || t.text == "ideal")) {
            return call(toks, pos);
        }
        // a bound ideal/Chow-form referenced by name
        if (t.kind == Token::Kind::Ident) {
            auto next = toks[pos + 1].kind;
            bool bare = next == Token::Kind::Comma ||
                        next == Token::Kind::RParen ||
                        next == Token::Kind::End;
            auto it = env.find(t.text);
            if (bare && it != env.end() &&
                !std::holds_alternative<Poly>(it->second)) {
                ++pos;
                return it->second;
            }
        }
        NameResolver resolve = [&](const std::string& name,
                                   const Token& at) -> Poly {
            if (auto idx = ring->var_index(name))
                return Poly::variable(ring, *idx);
            const auto& dom = ring->domain();
            if (dom->kind() == DomainKind::PolynomialDomain) {
                const auto& ps = dom->params();
                for (size_t i = 0; i < ps.size(); ++i)
                    if (ps[i] == name)
                        return Poly::constant(
                            ring, dom->param_var(static_cast<int>(i)));
            }
            auto it = env.find(name);
            if (it != env.end()) {
                if (const auto* p = std::get_if<Poly>(&it->second)) return *p;
                parse_fail(at, "'" + name + "' is not a polynomial");
            }
            parse_fail(at, "undeclared identifier '" + name + "'");
        };
        return parse_expression(toks, pos, ring, resolve);
    }

    Value call(const std::vector<Token>& toks, size_t& pos) {
        const Token& name = toks[pos];
        pos += 2;  // ident '('
        ++depth;
        std::vector<Value> args;
        std::vector<Token> arg_at;
        if (toks[pos].kind != Token::Kind::RParen) {
            while (true) {
                arg_at.push_back(toks[pos]);
                args.push_back(eval(toks, pos));
                if (toks[pos].kind == Token::Kind::Comma) {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        if (toks[pos].kind != Token::Kind::RParen)
            parse_fail(toks[pos], "expected ')'");
        ++pos;
        --depth;
        if (depth == 0 && record && record->command.empty()) {
            record->command = name.text;
            for (const auto& a : args) record->inputs.push_back(value_string(a));
        }
        return apply(name, args, arg_at);
    }

    Value apply(const Token& name, std::vector<Value>& args,
                const std::vector<Token>& at) {
        const std::string& cmd = name.text;
        auto need = [&](size_t n) {
            if (args.size() != n)
                parse_fail(name, cmd + " expects " + std::to_string(n) +
                                     " argument(s), got " +
                                     std::to_string(args.size()));
        };
        if (cmd == "ideal") {
            if (args.empty()) parse_fail(name, "ideal needs generators");
            std::vector<Poly> gens;
            for (size_t i = 0; i < args.size(); ++i)
                gens.push_back(as_poly(args[i], at[i]));
            return Ideal(ring, std::move(gens));
        }
        if (cmd == "resultant") {
            std::vector<Poly> fs;
            for (size_t i = 0; i < args.size(); ++i)
                fs.push_back(as_poly(args[i], at[i]));
            auto out = resultant(make_hom_system(fs), flags.algorithm,
                                 flags.seed, flags.threads);
            return finish_resultant(out);
        }
        if (cmd == "discriminant") {
            need(1);
            auto out = discriminant(as_poly(args[0], at[0]), -1,
                                    flags.algorithm, flags.seed, flags.threads);
            return finish_resultant(out);
        }
        if (cmd == "veronese") {
            need(2);
            return kernel(veronese(small_int(args[0], at[0]),
                                   small_int(args[1], at[1])));
        }
        if (cmd == "chowform") {
            need(1);
            return chow_form(as_ideal(args[0], at[0]));
        }
        if (cmd == "chowequations") {
            need(1);
            return chow_equations(as_chow(args[0], at[0]));
        }
        if (cmd == "dualize") {
            need(1);
            ChowFormResult w = as_chow(args[0], at[0]);
            w.element = dualize(w.element);
            return w;
        }
        if (cmd == "stiefel") {
            need(1);
            return from_plucker_to_stiefel(as_chow(args[0], at[0]).element);
        }
        if (cmd == "cayleytrick") {
            need(1);
            return cayley_trick(as_ideal(args[0], at[0]));
        }
        if (cmd == "dualvariety") {
            need(1);
            return dual_variety(as_ideal(args[0], at[0]));
        }
        parse_fail(name, "unknown command '" + cmd + "'");
    }

    int small_int(const Value& v, const Token& at) {
        const Poly* p = std::get_if<Poly>(&v);
        if (!p || !p->is_constant() || p->is_zero())
            parse_fail(at, "expected a positive integer");
        const Coeff c = p->leading().second;
        const auto* r = std::get_if<Rat>(&c.v);
        if (!r || r->get_den() != 1 || *r <= 0 || *r > 64)
            parse_fail(at, "expected a small positive integer");
        return static_cast<int>(r->get_num().get_si());
    }

    Value finish_resultant(const ResultantOutcome& out) {
        if (record) {
            record->algorithm = out.algorithm;
            record->coordinate_changes = out.coordinate_changes;
        }
        return Poly::constant(ring, out.value);
    }
};

DomainPtr domain_from_decl(const Script& s) {
    DomainPtr base;
    if (s.domain == "ZZ") {
        base = CoeffDomain::integers();
    } else if (s.domain == "QQ") {
        base = CoeffDomain::rationals();
    } else {
        // "GF(p)"
        const std::string p = s.domain.substr(3, s.domain.size() - 4);
        base = CoeffDomain::prime_field(std::stoull(p));
    }
    if (!s.params.empty()) base = CoeffDomain::polynomial(base, s.params);
    return base;
}

void result_lines(const Value& v, RunResult& r) {
    if (const auto* p = std::get_if<Poly>(&v)) {
        r.result.push_back(poly_to_string(*p));
        return;
    }
    if (const auto* I = std::get_if<Ideal>(&v)) {
        for (const auto& g : I->gens()) r.result.push_back(poly_to_string(g));
        if (I->gens().empty()) r.result.push_back("0");
        return;
    }
    if (const auto* w = std::get_if<ChowFormResult>(&v)) {
        r.result.push_back(poly_to_string(w->element.rep));
        return;
    }
    const auto& ct = std::get<CayleyTrickResult>(v);
    for (const auto& g : ct.segre.gens())
        r.result.push_back("segre: " + poly_to_string(g));
    for (const auto& g : ct.x_resultant.gens())
        r.result.push_back("xresultant: " + poly_to_string(g));
}

}  // namespace

RunResult run_script(const Script& s, const RunFlags& flags) {
    const auto t0 = std::chrono::steady_clock::now();
    RunResult r;
    r.seed = flags.seed;
    r.algorithm = "groebner";

    Evaluator ev{RingCtx::make(s.vars, domain_from_decl(s)), flags, {}, nullptr};
    for (size_t i = 0; i + 1 < s.statements.size(); ++i) {
        auto toks = tokenize(s.statements[i].rhs);
        size_t pos = 0;
        Value v = ev.eval(toks, pos);
        if (toks[pos].kind != Token::Kind::End)
            parse_fail(toks[pos], "trailing input after expression");
        ev.env.insert_or_assign(s.statements[i].name, std::move(v));
    }
    ev.record = &r;
    auto toks = tokenize(s.statements.back().rhs);
    if (toks[0].kind != Token::Kind::Ident || !is_command(toks[0].text))
        parse_fail(toks[0], "the final statement must call a command");
    size_t pos = 0;
    Value v = ev.eval(toks, pos);
    if (toks[pos].kind != Token::Kind::End)
        parse_fail(toks[pos], "trailing input after command");
    result_lines(v, r);

    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

std::string render_text(const RunResult& r, bool timing) {
    std::string out;
    for (const auto& line : r.result) out += line + "\n";
    if (timing) out += "elapsed_ms: " + std::to_string(r.elapsed_ms) + "\n";
    return out;
}

std::string render_json(const RunResult& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["algorithm"] = r.algorithm;
    j["coordinateChanges"] = r.coordinate_changes;
    j["seed"] = r.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string render_error_json(const std::string& code,
                              const std::string& message) {
    nlohmann::json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    return j.dump(2) + "\n";
}

}  // namespace eliminant

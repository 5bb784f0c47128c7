#include "checker.hpp"
#include "lexer.hpp"

#include <array>
#include <optional>
#include <utility>

namespace trisect::script {

namespace {

using detail::Tok;
using detail::Token;

std::optional<Op> op_from_name(std::string_view name) {
    static constexpr std::array ops = {
        Op::line_through,    Op::midpoint,          Op::perpendicular_bisector, Op::perpendicular_at,
        Op::angle_bisector,  Op::intersect,         Op::intersect_line_line,    Op::intersect_line_circle,
        Op::intersect_circle_circle, Op::ray_from_angle, Op::circle,            Op::angle_at,
    };
    for (Op op : ops) {
        if (name == op_name(op)) return op;
    }
    return std::nullopt;
}

std::optional<StmtKind> stmt_from_keyword(std::string_view word) {
    static constexpr std::array kinds = {StmtKind::point, StmtKind::line, StmtKind::ray, StmtKind::circle,
                                         StmtKind::angle};
    for (StmtKind k : kinds) {
        if (word == stmt_keyword(k)) return k;
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const ScriptSource& src) : tokens_(detail::tokenize(src.text)) { program_.name = src.name; }

    ConstructionProgram run() {
        while (peek().kind != Tok::end) {
            if (peek().kind == Tok::newline) {
                ++at_;
                continue;
            }
            statement();
            if (peek().kind != Tok::newline && peek().kind != Tok::end) {
                fail(ScriptErrc::syntax_error, peek(), "expected end of line");
            }
        }
        return std::move(program_);
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }

    [[noreturn]] static void fail(ScriptErrc code, const Token& t, const std::string& message) {
        throw ScriptError(code, t.pos, t.text, message);
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(ScriptErrc::syntax_error, peek(), std::string("expected ") + what);
        return next();
    }

    const Token& expect_word(std::string_view word) {
        if (peek().kind != Tok::ident || peek().text != word) {
            fail(ScriptErrc::syntax_error, peek(), "expected '" + std::string(word) + "'");
        }
        return next();
    }

    const Token& expect_name() {
        const Token& t = expect(Tok::ident, "an identifier");
        if (detail::is_reserved(t.text)) fail(ScriptErrc::syntax_error, t, "reserved word used as a name");
        return t;
    }

    void statement() {
        const Token& head = expect(Tok::ident, "a statement keyword");
        if (head.text == "param") {
            const Token& name = expect_name();
            expect(Tok::colon, "':'");
            const Token& kind = expect(Tok::ident, "'angle' or 'length'");
            Param p{name.text, ParamKind::angle};
            if (kind.text == "length") {
                p.kind = ParamKind::length;
            } else if (kind.text != "angle") {
                fail(ScriptErrc::syntax_error, kind, "expected 'angle' or 'length'");
            }
            checker_.add_param(p, name.pos);
            program_.params.push_back(std::move(p));
            return;
        }
        if (head.text == "export") {
            while (true) {
                const Token& name = expect(Tok::ident, "an identifier");
                checker_.add_export(name.text, name.pos);
                program_.exports.push_back(name.text);
                if (peek().kind != Tok::comma) break;
                next();
            }
            return;
        }
        const auto kind = stmt_from_keyword(head.text);
        if (!kind) fail(ScriptErrc::syntax_error, head, "unknown statement");

        Step step;
        step.kind = *kind;
        const Token& name = expect_name();
        step.name = name.text;
        expect(Tok::equals, "'='");

        std::vector<SourcePos> arg_pos;
        SourcePos pick_pos;
        if (peek().kind == Tok::lparen) {
            coord(step, arg_pos);
        } else {
            call(step, arg_pos);
            if (peek().kind == Tok::ident && peek().text == "pick") {
                pick_pos = next().pos;
                step.pick = hint();
            }
        }
        if (peek().kind == Tok::ident && peek().text == "optional") {
            next();
            step.optional = true;
        }
        checker_.add_step(step, name.pos, arg_pos, pick_pos);
        program_.steps.push_back(std::move(step));
        program_.step_pos.push_back(head.pos);
    }

    void coord(Step& step, std::vector<SourcePos>& arg_pos) {
        step.op = Op::coord;
        expect(Tok::lparen, "'('");
        const Token& x = expect(Tok::number, "a number");
        expect(Tok::comma, "','");
        const Token& y = expect(Tok::number, "a number");
        expect(Tok::rparen, "')'");
        step.args = {num(x.text), num(y.text)};
        arg_pos = {x.pos, y.pos};
    }

    void call(Step& step, std::vector<SourcePos>& arg_pos) {
        const Token& fn = expect(Tok::ident, "an operation");
        const auto op = op_from_name(fn.text);
        if (!op) fail(ScriptErrc::syntax_error, fn, "unknown operation");
        step.op = *op;
        expect(Tok::lparen, "'('");
        if (peek().kind != Tok::rparen) {
            while (true) {
                arg_pos.push_back(peek().pos);
                step.args.push_back(argument());
                if (peek().kind != Tok::comma) break;
                next();
            }
        }
        expect(Tok::rparen, "')'");
    }

    Arg argument() {
        const Token& t = next();
        if (t.kind == Tok::number) return num(t.text);
        if (t.kind != Tok::ident) fail(ScriptErrc::syntax_error, t, "expected an argument");
        if (t.text == "ccw") return side(geom::Side::ccw);
        if (t.text == "cw") return side(geom::Side::cw);
        if (t.text == "dist") {
            expect(Tok::lparen, "'('");
            const Token& p = expect(Tok::ident, "a point name");
            expect(Tok::comma, "','");
            const Token& q = expect(Tok::ident, "a point name");
            expect(Tok::rparen, "')'");
            return dist(p.text, q.text);
        }
        if (detail::is_reserved(t.text) || peek().kind == Tok::lparen) {
            fail(ScriptErrc::syntax_error, t, "nested calls are not allowed");
        }
        return id(t.text);
    }

    PickHint hint() {
        const Token& t = expect(Tok::ident, "a pick hint");
        if (t.text == "upper") return pick(PickKind::upper);
        if (t.text == "lower") return pick(PickKind::lower);
        PickKind kind;
        if (t.text == "closest_to") {
            kind = PickKind::closest_to;
        } else if (t.text == "farthest_from") {
            kind = PickKind::farthest_from;
        } else if (t.text == "distinct_from") {
            kind = PickKind::distinct_from;
        } else {
            fail(ScriptErrc::syntax_error, t, "unknown pick hint");
        }
        expect(Tok::lparen, "'('");
        const Token& ref = expect(Tok::ident, "a point name");
        expect(Tok::rparen, "')'");
        return pick(kind, ref.text);
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    ConstructionProgram program_;
    detail::Checker checker_;
};

}  // namespace

ConstructionProgram parse(const ScriptSource& src) { return Parser(src).run(); }

}  // namespace trisect::script

#include "blocktf/dsl.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace blocktf {

namespace {

enum class Tok {
    ident, number, lparen, rparen, lbrack, rbrack,
    comma, semi, plus, minus, star, caret, slash, end
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourceSpan span;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::ident: return "identifier";
        case Tok::number: return "number";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrack: return "'['";
        case Tok::rbrack: return "']'";
        case Tok::comma: return "','";
        case Tok::semi: return "';'";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::slash: return "'/'";
        case Tok::end: return "end of input";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_ws();
        current_.span = {line_, col_, 1};
        if (pos_ >= text_.size()) {
            current_.kind = Tok::end;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        auto single = [&](Tok k) {
            current_.kind = k;
            current_.text = std::string(1, c);
            bump();
        };
        switch (c) {
            case '(': single(Tok::lparen); return;
            case ')': single(Tok::rparen); return;
            case '[': single(Tok::lbrack); return;
            case ']': single(Tok::rbrack); return;
            case ',': single(Tok::comma); return;
            case ';': single(Tok::semi); return;
            case '+': single(Tok::plus); return;
            case '-': single(Tok::minus); return;
            case '*': single(Tok::star); return;
            case '^': single(Tok::caret); return;
            case '/': single(Tok::slash); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            bool seen_dot = false;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d)) || (d == '.' && !seen_dot)) {
                    if (d == '.') seen_dot = true;
                    num += d;
                    bump();
                } else {
                    break;
                }
            }
            current_.kind = Tok::number;
            current_.text = num;
            current_.span.length = static_cast<int>(num.size());
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                bump();
            }
            current_.kind = Tok::ident;
            current_.text = id;
            current_.span.length = static_cast<int>(id.size());
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", {line_, col_, 1});
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    BlockExpr parse_block_top() {
        BlockExpr e = parse_expr();
        expect_end();
        return e;
    }

    Signal parse_signal_top() {
        Signal s = parse_signal_sum();
        expect_end();
        return s;
    }

  private:
    [[noreturn]] void fail(const std::string& expected, const Token& got) {
        throw ParseError("expected " + expected + ", found " + tok_name(got.kind) +
                             (got.text.empty() ? "" : " '" + got.text + "'"),
                         got.span);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) fail(what, lex_.peek());
        return lex_.take();
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::end) fail("end of input", lex_.peek());
    }

    Rat parse_rational() {
        bool negative = false;
        if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            negative = lex_.take().kind == Tok::minus;
        }
        Token num = expect(Tok::number, "a number");
        Rat value;
        if (lex_.peek().kind == Tok::slash) {
            lex_.take();
            Token den = expect(Tok::number, "a denominator");
            if (num.text.find('.') != std::string::npos || den.text.find('.') != std::string::npos)
                throw ParseError("p/q rationals take integer parts", den.span);
            value = rat_from_string(num.text + "/" + den.text);
        } else {
            value = rat_from_string(num.text);
        }
        return negative ? Rat(-value) : value;
    }

    std::vector<Rat> parse_coeffs() {
        std::vector<Rat> coeffs;
        coeffs.push_back(parse_rational());
        while (lex_.peek().kind == Tok::comma) {
            lex_.take();
            coeffs.push_back(parse_rational());
        }
        return coeffs;
    }

    RatFunc parse_tf_body() {
        expect(Tok::lparen, "'('");
        std::vector<Rat> num = parse_coeffs();
        expect(Tok::semi, "';'");
        std::vector<Rat> den = parse_coeffs();
        Token close = expect(Tok::rparen, "')'");
        Poly d{den};
        if (d.is_zero()) throw ParseError("transfer function with zero denominator", close.span);
        return RatFunc(Poly(num), d);
    }

    std::vector<BlockExpr> parse_list() {
        expect(Tok::lbrack, "'['");
        std::vector<BlockExpr> items;
        items.push_back(parse_expr());
        while (lex_.peek().kind == Tok::comma) {
            lex_.take();
            items.push_back(parse_expr());
        }
        expect(Tok::rbrack, "']'");
        return items;
    }

    BlockExpr parse_expr() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::ident) fail("'ser', 'summ', 'pick', 'fb' or 'tf'", t);
        Token head = lex_.take();
        if (head.text == "tf") return BlockExpr::leaf(parse_tf_body());
        if (head.text == "ser") return BlockExpr::series(parse_list());
        if (head.text == "summ") return BlockExpr::summation(parse_list());
        if (head.text == "pick") {
            expect(Tok::lparen, "'('");
            BlockExpr alpha = parse_expr();
            expect(Tok::rparen, "')'");
            return BlockExpr::pickoff(std::move(alpha), parse_list());
        }
        if (head.text == "fb") {
            expect(Tok::lparen, "'('");
            BlockExpr fwd = parse_expr();
            expect(Tok::comma, "','");
            BlockExpr back = parse_expr();
            expect(Tok::rparen, "')'");
            return BlockExpr::feedback(std::move(fwd), std::move(back));
        }
        fail("'ser', 'summ', 'pick', 'fb' or 'tf'", head);
    }

    // ---- signal grammar ----

    struct TermParts {
        Rat coeff = Rat(1);
        unsigned power = 0;
        Rat rate = Rat(0);
        Osc osc = Osc::none;
        Rat freq = Rat(0);
        std::optional<Signal> delayed;  // a delay(...) factor, at most one
        bool has_shape = false;         // saw step/t/exp/sin/cos
    };

    Rat parse_paren_rational() {
        expect(Tok::lparen, "'('");
        Rat v = parse_rational();
        expect(Tok::rparen, "')'");
        return v;
    }

    void parse_factor(TermParts& parts) {
        const Token& t = lex_.peek();
        if (t.kind == Tok::number || t.kind == Tok::plus || t.kind == Tok::minus) {
            parts.coeff *= parse_rational();
            return;
        }
        if (t.kind != Tok::ident) fail("a signal factor", t);
        Token head = lex_.take();
        if (head.text == "step") {
            parts.has_shape = true;
            return;
        }
        if (head.text == "t") {
            unsigned n = 1;
            if (lex_.peek().kind == Tok::caret) {
                lex_.take();
                Token e = expect(Tok::number, "an integer exponent");
                if (e.text.find('.') != std::string::npos || e.text.size() > 3)
                    throw ParseError("small integer exponent required", e.span);
                n = static_cast<unsigned>(std::stoul(e.text));
            }
            parts.power += n;
            parts.has_shape = true;
            return;
        }
        if (head.text == "exp") {
            parts.rate += parse_paren_rational();
            parts.has_shape = true;
            return;
        }
        if (head.text == "sin" || head.text == "cos") {
            if (parts.osc != Osc::none)
                throw ParseError("a product admits at most one sin/cos factor", head.span);
            parts.osc = head.text == "sin" ? Osc::sine : Osc::cosine;
            parts.freq = parse_paren_rational();
            parts.has_shape = true;
            return;
        }
        if (head.text == "delay") {
            if (parts.delayed)
                throw ParseError("a product admits at most one delay(...) factor", head.span);
            expect(Tok::lparen, "'('");
            Rat shift = parse_rational();
            if (sgn(shift) < 0) throw ParseError("delay must be nonnegative", head.span);
            expect(Tok::comma, "','");
            Signal inner = parse_signal_sum();
            expect(Tok::rparen, "')'");
            std::vector<SignalAtom> atoms = inner.atoms();
            for (SignalAtom& a : atoms) a.delay += shift;
            parts.delayed = Signal(std::move(atoms));
            return;
        }
        fail("'step', 't', 'exp', 'sin', 'cos' or 'delay'", head);
    }

    Signal parse_term() {
        TermParts parts;
        Token start = lex_.peek();
        parse_factor(parts);
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            parse_factor(parts);
        }
        if (parts.delayed) {
            if (parts.has_shape)
                throw ParseError("delay(...) may only be scaled by constants; fold shapes inside the delay",
                                 start.span);
            return parts.delayed->scaled(parts.coeff);
        }
        SignalAtom a;
        a.coeff = parts.coeff;
        a.power = parts.power;
        a.rate = parts.rate;
        a.osc = parts.osc;
        a.freq = parts.freq;
        return Signal::atom(a);
    }

    Signal parse_signal_sum() {
        bool lead_minus = false;
        if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
            lead_minus = lex_.take().kind == Tok::minus;
        Signal acc = parse_term();
        if (lead_minus) acc = acc.scaled(Rat(-1));
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            Signal term = parse_term();
            acc = acc + (minus ? term.scaled(Rat(-1)) : term);
        }
        return acc;
    }

    Lexer lex_;
};

void print_expr(const BlockExpr& e, std::string& out) {
    auto print_list = [&out](const std::vector<BlockExpr>& items, std::size_t from) {
        out += "[";
        for (std::size_t i = from; i < items.size(); ++i) {
            if (i > from) out += ",";
            print_expr(items[i], out);
        }
        out += "]";
    };
    switch (e.kind()) {
        case BlockExpr::Kind::leaf:
            out += e.tf().to_string();
            return;
        case BlockExpr::Kind::series:
            out += "ser";
            print_list(e.children(), 0);
            return;
        case BlockExpr::Kind::summation:
            out += "summ";
            print_list(e.children(), 0);
            return;
        case BlockExpr::Kind::pickoff:
            out += "pick(";
            print_expr(e.pick_alpha(), out);
            out += ")";
            print_list(e.children(), 1);
            return;
        case BlockExpr::Kind::feedback:
            out += "fb(";
            print_expr(e.forward(), out);
            out += ",";
            print_expr(e.back(), out);
            out += ")";
            return;
    }
}

} // namespace

BlockExpr parse_block(const std::string& text) { return Parser(text).parse_block_top(); }

std::string print_block(const BlockExpr& e) {
    std::string out;
    print_expr(e, out);
    return out;
}

Signal parse_signal(const std::string& text) { return Parser(text).parse_signal_top(); }

} // namespace blocktf

#include "kappa/parser.hpp"

#include <cctype>

namespace kappa {

namespace {

struct Token {
    enum class Type { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    std::int64_t value = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= text_.size()) {
            tok_.type = Token::Type::End;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': tok_ = {Token::Type::Plus, "+", 0, pos_++}; return;
            case '-': tok_ = {Token::Type::Minus, "-", 0, pos_++}; return;
            case '*': tok_ = {Token::Type::Star, "*", 0, pos_++}; return;
            case '/': tok_ = {Token::Type::Slash, "/", 0, pos_++}; return;
            case '^': tok_ = {Token::Type::Caret, "^", 0, pos_++}; return;
            case '(': tok_ = {Token::Type::LParen, "(", 0, pos_++}; return;
            case ')': tok_ = {Token::Type::RParen, ")", 0, pos_++}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                std::int64_t digit = text_[pos_] - '0';
                if (__builtin_mul_overflow(v, (std::int64_t)10, &v) ||
                    __builtin_add_overflow(v, digit, &v))
                    throw ParseError("integer literal too large", start);
                ++pos_;
            }
            tok_ = {Token::Type::Integer, text_.substr(start, pos_ - start), v, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Token::Type::Identifier, text_.substr(start, pos_ - start), 0, start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Element run() {
        Element e = parse_expr();
        if (lex_.current().type != Token::Type::End)
            throw ParseError("unexpected trailing input '" + lex_.current().text + "'",
                             lex_.current().pos);
        return e;
    }

private:
    Element parse_expr() {
        Element acc = parse_term();
        while (true) {
            auto t = lex_.current().type;
            if (t == Token::Type::Plus) {
                lex_.advance();
                acc += parse_term();
            } else if (t == Token::Type::Minus) {
                lex_.advance();
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Element parse_term() {
        Element acc = parse_factor();
        while (true) {
            auto t = lex_.current().type;
            if (t == Token::Type::Star) {
                lex_.advance();
                acc = acc.concat_product(parse_factor());
            } else if (t == Token::Type::Slash) {
                std::size_t pos = lex_.current().pos;
                lex_.advance();
                Element divisor = parse_factor();
                if (!divisor.is_scalar())
                    throw ParseError("division by a non-scalar expression", pos);
                Scalar s = divisor.scalar_part();
                if (s.is_zero()) throw ParseError("division by zero", pos);
                if (!s.single_term())
                    throw ParseError("division by a multi-term scalar", pos);
                acc = acc.scaled(s.inverse());
            } else {
                return acc;
            }
        }
    }

    Element parse_factor() {
        if (lex_.current().type == Token::Type::Minus) {
            lex_.advance();
            return -parse_factor();
        }
        Element base = parse_atom();
        if (lex_.current().type != Token::Type::Caret) return base;
        std::size_t pos = lex_.current().pos;
        lex_.advance();
        Rational exp = parse_exponent();

        if (base.size() == 1 && base.terms().begin()->first.size() == 1 &&
            base.terms().begin()->second.is_one()) {
            const Generator& g = base.terms().begin()->first.word()[0];
            if (g.is_exp()) return Element::exp_p0(g.exp_r * exp);
            if (exp.den() != 1 || exp.num() < 0)
                throw ParseError("generator power must be a non-negative integer", pos);
            Element acc = Element::one();
            for (std::int64_t k = 0; k < exp.num(); ++k) acc = acc.concat_product(base);
            return acc;
        }
        if (base.is_scalar()) {
            if (exp.den() != 1) throw ParseError("scalar power must be an integer", pos);
            Scalar s = base.scalar_part();
            std::int64_t n = exp.num();
            if (n < 0) {
                if (!s.single_term()) throw ParseError("cannot invert multi-term scalar", pos);
                s = s.inverse();
                n = -n;
            }
            Scalar acc = Scalar::one();
            for (std::int64_t k = 0; k < n; ++k) acc *= s;
            return Element(acc);
        }
        throw ParseError("power of a compound expression is not supported", pos);
    }

    Rational parse_exponent() {
        const Token& t = lex_.current();
        if (t.type == Token::Type::Integer) {
            Rational r(t.value);
            lex_.advance();
            return r;
        }
        if (t.type == Token::Type::Minus) {
            lex_.advance();
            const Token& u = lex_.current();
            if (u.type != Token::Type::Integer)
                throw ParseError("expected integer exponent after '-'", u.pos);
            Rational r(-u.value);
            lex_.advance();
            return r;
        }
        if (t.type == Token::Type::LParen) {
            lex_.advance();
            bool neg = false;
            if (lex_.current().type == Token::Type::Minus) {
                neg = true;
                lex_.advance();
            }
            if (lex_.current().type != Token::Type::Integer)
                throw ParseError("expected rational exponent", lex_.current().pos);
            std::int64_t num = lex_.current().value;
            lex_.advance();
            std::int64_t den = 1;
            if (lex_.current().type == Token::Type::Slash) {
                lex_.advance();
                if (lex_.current().type != Token::Type::Integer)
                    throw ParseError("expected denominator", lex_.current().pos);
                den = lex_.current().value;
                if (den == 0) throw ParseError("zero denominator", lex_.current().pos);
                lex_.advance();
            }
            if (lex_.current().type != Token::Type::RParen)
                throw ParseError("expected ')' after exponent", lex_.current().pos);
            lex_.advance();
            return Rational(neg ? -num : num, den);
        }
        throw ParseError("expected exponent", t.pos);
    }

    Element parse_atom() {
        const Token& t = lex_.current();
        switch (t.type) {
            case Token::Type::Integer: {
                Element e(Scalar(t.value));
                lex_.advance();
                return e;
            }
            case Token::Type::LParen: {
                lex_.advance();
                Element e = parse_expr();
                if (lex_.current().type != Token::Type::RParen)
                    throw ParseError("expected ')'", lex_.current().pos);
                lex_.advance();
                return e;
            }
            case Token::Type::Identifier: {
                Element e = identifier_atom(t.text, t.pos);
                lex_.advance();
                return e;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos);
        }
    }

    static Element identifier_atom(const std::string& name, std::size_t pos) {
        if (name == "i") return Element(Scalar::i());
        if (name == "hbar") return Element(Scalar::hbar());
        if (name == "kappa") return Element(Scalar::term(Rational(1), Rational(0), 0, -1));
        if (name == "E") return Element::exp_p0(Rational(1));
        if (name.size() == 2 && (name[0] == 'x' || name[0] == 'P') && name[1] >= '0' &&
            name[1] <= '3') {
            int mu = name[1] - '0';
            return name[0] == 'x' ? Element::x(mu) : Element::p(mu);
        }
        throw ParseError("unknown symbol '" + name + "'", pos);
    }

    Lexer lex_;
};

} // namespace

Element parse(const std::string& text) {
    return Parser(text).run();
}

} // namespace kappa

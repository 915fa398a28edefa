#include "hrank/parse.hpp"

#include <cctype>
#include <optional>

namespace hrank {

Field Field::parse(std::string_view name) {
    if (name == "qi") return {};
    constexpr std::string_view prefix = "qi-sqrt";
    if (name.substr(0, prefix.size()) == prefix && name.size() > prefix.size()) {
        const std::string digits(name.substr(prefix.size()));
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 9) {
            const int s = std::stoi(digits);
            if (is_square_free(s) && s >= 2) return {s};
        }
    }
    throw std::invalid_argument("unknown field '" + std::string(name) + "' (expected qi or qi-sqrtS, S square-free)");
}

std::string Field::str() const { return radicand ? "qi-sqrt" + std::to_string(radicand) : "qi"; }

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End } kind;
    std::size_t pos;
    std::string text;
    Scalar value;  // Number only
};

class Lexer {
public:
    Lexer(std::string_view text, Field field) : text_(text), field_(field) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
            if (i_ == text_.size()) {
                out.push_back({Token::Kind::End, i_, "", {}});
                return out;
            }
            const char c = text_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number());
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(ident());
            } else if (std::string_view("+-*/^()~,").find(c) != std::string_view::npos) {
                out.push_back({Token::Kind::Op, i_, std::string(1, c), {}});
                ++i_;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
            }
        }
    }

private:
    std::string digits() {
        const std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        return std::string(text_.substr(start, i_ - start));
    }

    int radicand_at(std::size_t pos) {
        const std::string s = digits();
        if (s.empty() || s.size() > 8) throw ParseError("malformed radical token", pos);
        const int r = std::stoi(s);
        if (field_.radicand == 0)
            throw ParseError("radical token r" + s + " needs --field qi-sqrt" + s, pos);
        if (r != field_.radicand)
            throw ParseError("radical token r" + s + " does not match field " + field_.str(), pos);
        return r;
    }

    Token number() {
        const std::size_t start = i_;
        Rational q{mpz_class(digits())};
        if (i_ + 1 < text_.size() && text_[i_] == '/' && std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
            ++i_;
            const mpz_class den(digits());
            if (den == 0) throw ParseError("zero denominator", start);
            q /= Rational(den);
        }
        Scalar v(q);
        // Suffix i, rS or irS binds to the literal.
        if (i_ < text_.size() && text_[i_] == 'i') {
            ++i_;
            if (i_ < text_.size() && text_[i_] == 'r') {
                ++i_;
                const int r = radicand_at(start);
                v = Scalar(Rational(0), Rational(0), Rational(0), q, r);
            } else {
                v = Scalar(Rational(0), q);
            }
        } else if (i_ < text_.size() && text_[i_] == 'r') {
            ++i_;
            const int r = radicand_at(start);
            v = Scalar(Rational(0), Rational(0), q, Rational(0), r);
        }
        if (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_])))
            throw ParseError("missing operator after number", i_);
        return {Token::Kind::Number, start, std::string(text_.substr(start, i_ - start)), v};
    }

    Token ident() {
        const std::size_t start = i_;
        while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) ++i_;
        return {Token::Kind::Ident, start, std::string(text_.substr(start, i_ - start)), {}};
    }

    std::string_view text_;
    Field field_;
    std::size_t i_ = 0;
};

/// A parsed subexpression: a polynomial whenever possible.
struct Value {
    std::optional<Polynomial> poly;
    JetRecipe jet;

    static Value of(Polynomial p) { return {std::move(p), {}}; }
    static Value of(JetRecipe j) {
        if (j.is_polynomial()) return of(j.as_polynomial());
        return {std::nullopt, std::move(j)};
    }
    JetRecipe as_jet() const { return poly ? JetRecipe::polynomial(*poly) : jet; }
};

class Parser {
public:
    Parser(std::string_view text, int n, Field field) : n_(n), field_(field), toks_(Lexer(text, field).run()) {
        if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    }

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Token::Kind::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return v;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    bool is_op(const char* s) const { return peek().kind == Token::Kind::Op && peek().text == s; }
    void expect(const char* s) {
        if (!is_op(s)) throw ParseError(std::string("expected '") + s + "'", peek().pos);
        ++k_;
    }

    Value expr() {
        Value acc = term();
        while (is_op("+") || is_op("-")) {
            const bool minus = peek().text == "-";
            const std::size_t pos = peek().pos;
            ++k_;
            Value rhs = term();
            if (!acc.poly || !rhs.poly) throw ParseError("sums involving non-polynomial jets are not supported", pos);
            if (minus) *acc.poly -= *rhs.poly;
            else *acc.poly += *rhs.poly;
        }
        return acc;
    }

    Value term() {
        Value acc = unary();
        while (is_op("*") || is_op("/")) {
            const bool divide = peek().text == "/";
            const std::size_t pos = peek().pos;
            ++k_;
            Value rhs = unary();
            if (!divide) {
                acc = multiply(acc, rhs);
                continue;
            }
            if (!rhs.poly) throw ParseError("division by a non-polynomial jet is not supported", pos);
            if (rhs.poly->is_zero()) throw ParseError("division by zero", pos);
            if (rhs.poly->max_degree() == 0) {
                const Scalar inv = rhs.poly->constant_term().inverse();
                acc = acc.poly ? Value::of(*acc.poly * inv)
                               : Value::of(JetRecipe::product(JetRecipe::polynomial(Polynomial::constant(n_, inv)), acc.jet));
            } else {
                acc = multiply(acc, Value::of(JetRecipe::reciprocal(*rhs.poly)));
            }
        }
        return acc;
    }

    static Value multiply(const Value& a, const Value& b) {
        if (a.poly && b.poly) return Value::of(*a.poly * *b.poly);
        if (a.poly && *a.poly == Polynomial::constant(a.poly->dim(), Scalar(1))) return b;
        if (b.poly && *b.poly == Polynomial::constant(b.poly->dim(), Scalar(1))) return a;
        return Value::of(JetRecipe::product(a.as_jet(), b.as_jet()));
    }

    Value unary() {
        if (is_op("-")) {
            ++k_;
            Value v = unary();
            if (v.poly) return Value::of(-*v.poly);
            return Value::of(JetRecipe::product(JetRecipe::polynomial(Polynomial::constant(n_, Scalar(-1))), v.jet));
        }
        if (is_op("+")) {
            ++k_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (!is_op("^")) return base;
        ++k_;
        bool negative = false;
        if (is_op("-")) {
            negative = true;
            ++k_;
        }
        const Token& t = peek();
        if (t.kind != Token::Kind::Number || t.text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("exponent must be a nonnegative integer literal", t.pos);
        if (t.text.size() > 4) throw ParseError("exponent too large", t.pos);
        const int e = std::stoi(t.text);
        ++k_;
        if (base.poly) {
            Polynomial p = poly_pow(*base.poly, e);
            if (!negative || e == 0) return Value::of(std::move(p));
            if (base.poly->is_zero()) throw ParseError("negative power of zero", t.pos);
            if (p.max_degree() == 0) return Value::of(Polynomial::constant(n_, p.constant_term().inverse()));
            return Value::of(JetRecipe::reciprocal(std::move(p)));
        }
        if (negative) throw ParseError("negative powers of non-polynomial jets are not supported", t.pos);
        JetRecipe acc = JetRecipe::polynomial(Polynomial::constant(n_, Scalar(1)));
        for (int i = 0; i < e; ++i) acc = JetRecipe::product(acc, base.jet);
        return Value::of(acc);
    }

    int variable_index(const Token& t) const {
        if (t.text == "w") return n_ - 1;
        if (t.text.size() > 1 && t.text[0] == 'z' &&
            t.text.find_first_not_of("0123456789", 1) == std::string::npos && t.text.size() < 8) {
            const int k = std::stoi(t.text.substr(1));
            if (k >= 1 && k <= n_) return k - 1;  // z{n} names w
        }
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
    }

    Value atom() {
        const Token t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                ++k_;
                return Value::of(Polynomial::constant(n_, t.value));
            case Token::Kind::Ident: {
                ++k_;
                if (t.text == "i") return Value::of(Polynomial::constant(n_, Scalar::i()));
                if (t.text == "exp") {
                    expect("(");
                    Value inner = expr();
                    expect(")");
                    if (!inner.poly) throw ParseError("exp of a non-polynomial jet is not supported", t.pos);
                    return Value::of(JetRecipe::exp(*inner.poly));
                }
                if (t.text.size() > 1 && t.text[0] == 'r' &&
                    t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
                    const int r = std::stoi(t.text.substr(1));
                    if (field_.radicand == 0) throw ParseError("radical token " + t.text + " needs --field qi-sqrt" + t.text.substr(1), t.pos);
                    if (r != field_.radicand) throw ParseError("radical token " + t.text + " does not match field " + field_.str(), t.pos);
                    return Value::of(Polynomial::constant(n_, Scalar::sqrt(r)));
                }
                return Value::of(Polynomial::holo_var(n_, variable_index(t)));
            }
            case Token::Kind::Op:
                if (t.text == "~") {
                    ++k_;
                    const Token v = peek();
                    if (v.kind != Token::Kind::Ident) throw ParseError("'~' must precede a variable", v.pos);
                    ++k_;
                    return Value::of(Polynomial::anti_var(n_, variable_index(v)));
                }
                if (t.text == "(") {
                    ++k_;
                    Value v = expr();
                    expect(")");
                    return v;
                }
                throw ParseError("unexpected '" + t.text + "'", t.pos);
            case Token::Kind::End:
                throw ParseError("unexpected end of input", t.pos);
        }
        throw ParseError("unreachable", t.pos);
    }

    int n_;
    Field field_;
    std::vector<Token> toks_;
    std::size_t k_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, int n, Field field) {
    Value v = Parser(text, n, field).parse_all();
    if (!v.poly) throw ParseError("expected a polynomial, found " + v.jet.str(), 0);
    return *v.poly;
}

JetRecipe parse_jet(std::string_view text, int n, Field field) {
    return Parser(text, n, field).parse_all().as_jet();
}

Point parse_point(std::string_view text, int n, Field field) {
    std::vector<Scalar> coords;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const Polynomial c = parse_poly(piece, n, field);
        if (c.max_degree() != 0) throw ParseError("point coordinates must be constants", start);
        coords.push_back(c.constant_term());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(coords.size()) != n)
        throw ParseError("point needs " + std::to_string(n) + " coordinates", 0);
    return Point::diagonal(std::move(coords));
}

}  // namespace hrank

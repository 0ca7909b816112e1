#include "conicring/parse.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "conicring/error.hpp"

namespace conicring {

namespace {

std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// ---- Ring expressions ------------------------------------------------------

enum class Tok { Integer, Name, Punct, Separator, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    int depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '\n') {
            if (depth == 0) out.push_back({Tok::Separator, "\n", line, col});
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (is_blank(c)) {
            advance(1);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Integer, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Name, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
            continue;
        }
        if (c == ';') {
            out.push_back({Tok::Separator, ";", line, col});
            advance(1);
            continue;
        }
        static constexpr std::string_view punct = "()[]{},+-*^=/";
        if (punct.find(c) == std::string_view::npos)
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        if (c == '(' || c == '[' || c == '{') ++depth;
        if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
        out.push_back({Tok::Punct, std::string(1, c), line, col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class ExpressionParser {
public:
    ExpressionParser(std::vector<Token> tokens, const Bounds& bounds)
        : tokens_(std::move(tokens)), bounds_(bounds) {}

    RingElement document() {
        std::optional<RingElement> last;
        while (true) {
            while (peek().kind == Tok::Separator) next();
            if (peek().kind == Tok::End) break;
            last = statement();
            if (peek().kind != Tok::Separator && peek().kind != Tok::End) fail(peek(), "expected end of statement");
        }
        if (!last) fail(peek(), "empty document");
        return *last;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at(std::string_view punct, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
    }
    bool at_name(std::string_view name, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Name && peek(ahead).text == name;
    }
    [[noreturn]] static void fail(const Token& t, const std::string& what) {
        throw ParseError(t.line, t.column, what + (t.kind == Tok::End ? " at end of input" : " near '" +
                                                   (t.text == "\n" ? std::string("newline") : t.text) + "'"));
    }
    void expect(std::string_view punct) {
        if (!at(punct)) fail(peek(), "expected '" + std::string(punct) + "'");
        next();
    }

    RingElement statement() {
        if (peek().kind == Tok::Name && at("=", 1)) {
            const Token& name = next();
            if (name.text == "P1" || name.text == "L" || name.text == "C") fail(name, "reserved name");
            next();
            RingElement value = expression();
            variables_[name.text] = value;
            return value;
        }
        return expression();
    }

    RingElement expression() {
        RingElement value = product();
        while (at("+") || at("-")) {
            bool plus = next().text == "+";
            RingElement rhs = product();
            value = plus ? value + rhs : value - rhs;
        }
        return value;
    }

    RingElement product() {
        RingElement value = unary();
        while (at("*")) {
            next();
            value = value * unary();
        }
        return value;
    }

    RingElement unary() {
        if (at("-")) {
            next();
            return -unary();
        }
        RingElement base = primary();
        if (at("^")) {
            next();
            base = pow(base, exponent());
        }
        return base;
    }

    unsigned exponent() {
        const Token& t = peek();
        if (t.kind != Tok::Integer) fail(t, "expected a nonnegative integer exponent");
        if (t.text.size() > 6) fail(t, "exponent too large");
        next();
        return static_cast<unsigned>(std::stoul(t.text));
    }

    RingElement primary() {
        const Token& t = peek();
        if (t.kind == Tok::Integer) {
            next();
            return RingElement::integer(Integer(t.text, 10));
        }
        if (at("(")) {
            next();
            RingElement value = expression();
            expect(")");
            return value;
        }
        if (at("[")) {
            if (at_name("L", 1)) {
                next();
                next();
                expect("]");
                return RingElement::lefschetz();
            }
            return from_conic_product(conic_list(), bounds_);
        }
        if (t.kind == Tok::Name) {
            if (t.text == "P1") {
                next();
                return RingElement::lefschetz();
            }
            if (t.text == "C" && at("(", 1)) return term_literal();
            auto it = variables_.find(t.text);
            if (it == variables_.end()) fail(t, "unknown name '" + t.text + "'");
            next();
            return it->second;
        }
        fail(t, "expected a ring element");
    }

    RingElement term_literal() {
        next();  // C
        expect("(");
        std::vector<BrauerClass> generators;
        if (peek().kind == Tok::Integer && peek().text == "0") {
            next();
        } else {
            while (true) {
                if (at("{")) {
                    generators.push_back(class_literal());
                } else if (at("(")) {
                    generators.push_back(brauer_class(conic(), bounds_));
                } else {
                    fail(peek(), "expected '0', a class '{...}' or a conic '(a,b)'");
                }
                if (!at(",")) break;
                next();
            }
        }
        expect(")");
        Term term{span(generators), 0};
        if (at("[") && at_name("L", 1) && at("]", 2)) {
            next();
            next();
            next();
            term.lefschetz_power = 1;
            if (at("^")) {
                next();
                term.lefschetz_power = exponent();
            }
        }
        return RingElement(term);
    }

    BrauerClass class_literal() {
        const Token& open = peek();
        expect("{");
        std::vector<Place> places;
        while (!at("}")) {
            const Token& t = next();
            std::optional<Place> place;
            if (t.kind == Tok::Integer || (t.kind == Tok::Name && t.text == "inf")) place = Place::parse(t.text);
            if (!place) fail(t, "expected a prime or 'inf'");
            places.push_back(*place);
            if (at(",")) next();
            else if (!at("}")) fail(peek(), "expected ',' or '}'");
        }
        next();
        std::vector<Place> sorted = places;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(open, "repeated place in class");
        if (sorted.size() % 2 != 0) fail(open, "class must have an even number of places");
        return BrauerClass(std::move(sorted));
    }

    ConicProduct conic_list() {
        expect("[");
        ConicProduct factors;
        while (!at("]")) {
            factors.push_back(conic());
            if (at(",")) next();
            else if (!at("]")) fail(peek(), "expected ',' or ']'");
        }
        next();
        return factors;
    }

    Conic conic() {
        const Token& open = peek();
        expect("(");
        Rational a = rational();
        expect(",");
        Rational b = rational();
        expect(")");
        try {
            return new_conic(a, b, bounds_);
        } catch (const InvalidConic& e) {
            throw ParseError(open.line, open.column, std::string("invalid conic: ") + e.what());
        }
    }

    Rational rational() {
        bool negative = false;
        if (at("-") || at("+")) negative = next().text == "-";
        const Token& num = peek();
        if (num.kind != Tok::Integer) fail(num, "expected a rational number");
        next();
        Integer n(num.text, 10);
        Integer d = 1;
        if (at("/")) {
            next();
            const Token& den = peek();
            if (den.kind != Tok::Integer) fail(den, "expected a denominator");
            next();
            d = Integer(den.text, 10);
            if (d == 0) fail(den, "zero denominator");
        }
        return Rational(negative ? Integer(-n) : n, d);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Bounds& bounds_;
    std::map<std::string, RingElement> variables_;
};

}  // namespace

ConicProduct parse_conic_list(std::string_view text, const Bounds& bounds) {
    ConicProduct out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        line = strip_comment(line);

        struct Field {
            std::string_view text;
            std::size_t column;
        };
        std::vector<Field> fields;
        for (std::size_t i = 0; i < line.size();) {
            if (is_blank(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !is_blank(line[j])) ++j;
            fields.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        if (fields.empty()) continue;
        if (fields.size() != 2) {
            std::size_t col = fields.size() > 2 ? fields[2].column : line.size() + 1;
            throw ParseError(line_no, col, "expected two rationals per line, found " +
                                               std::to_string(fields.size()));
        }
        std::vector<Rational> coeffs;
        for (const auto& f : fields) {
            auto q = Rational::parse(f.text);
            if (!q) throw ParseError(line_no, f.column, "malformed rational '" + std::string(f.text) + "'");
            coeffs.push_back(*q);
        }
        try {
            out.push_back(new_conic(coeffs[0], coeffs[1], bounds));
        } catch (const InvalidConic& e) {
            throw ParseError(line_no, 1, std::string("invalid conic: ") + e.what());
        }
    }
    return out;
}

RingElement evaluate_ring_document(std::string_view text, const Bounds& bounds) {
    return ExpressionParser(tokenize(text), bounds).document();
}

}  // namespace conicring

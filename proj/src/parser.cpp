#include "lnd/parser.hpp"

#include "lnd/errors.hpp"

#include <cctype>
#include <string>

namespace lnd {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ContextPtr& context) : text_(text), context_(context) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Polynomial result = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        while (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("expected a non-negative integer exponent", at);
            }
            const std::string digits = read_digits();
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            base = base.pow(std::stoll(digits));
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value{Integer{read_digits()}};
            skip_space();
            if (!at_end() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                const std::size_t den_at = pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    throw ParseError("expected an integer denominator", den_at);
                }
                Integer den(read_digits());
                if (den == 0) throw ParseError("zero denominator", den_at);
                value = Rational(value.get_num(), den);
                value.canonicalize();
            }
            return Polynomial(context_, value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto v = context_->index_of(name);
            if (!v) throw UnknownIdentifier(name, start);
            return Polynomial::variable(context_, *v);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    const ContextPtr& context_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const ContextPtr& context) {
    return Parser(text, context).parse();
}

RingElement parse_element(std::string_view text, const Ring& ring) {
    return ring->element(parse_expression(text, ring->context()));
}

}  // namespace lnd

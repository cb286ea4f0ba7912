#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

// Class-expression grammar shared by the CLI and the JSON schemas:
//
//   expr  := term (("+"|"-") term)*
//   term  := [uint] label
//   label := "H" | "U" | "T" | "A" | "B" | "E" uint
//
// Whitespace is insignificant, an absent coefficient means 1, and a leading
// "-" negates the first term. A bare "0" denotes the zero class. Repeated
// labels accumulate, so the parser accepts any formal linear combination.

namespace detail {

class ExprLexer {
public:
    explicit ExprLexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char take() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of class expression");
        return text_[pos_++];
    }

    // Unsigned integer literal with overflow detection; digits must follow.
    std::int64_t take_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected digits at position " + std::to_string(pos_) +
                             " in class expression");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = checked_add(checked_mul(value, 10),
                                static_cast<std::int64_t>(text_[pos_] - '0'));
            ++pos_;
        }
        return value;
    }

    bool next_is_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::size_t position() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline DivisorClass parse_class(const SurfaceModel& model, const std::string& text) {
    detail::ExprLexer lex(text);
    std::vector<std::int64_t> coeffs(model.rank(), 0);

    if (lex.done()) throw ParseError("empty class expression");

    bool first = true;
    while (!lex.done()) {
        std::int64_t sign = 1;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' before term at position " +
                             std::to_string(lex.position()));
        }

        std::int64_t magnitude = 1;
        if (lex.next_is_digit()) {
            magnitude = lex.take_uint();
            // A bare "0" (only as the whole expression) is the zero class.
            if (magnitude == 0 && first && lex.done()) return DivisorClass(std::move(coeffs));
        }

        char label = lex.take();
        std::string name(1, label);
        if (label == 'E') {
            if (!lex.next_is_digit())
                throw ParseError("label 'E' must be followed by an index");
            name += std::to_string(lex.take_uint());
        } else if (label != 'H' && label != 'U' && label != 'T' && label != 'A' && label != 'B') {
            throw ParseError(std::string("malformed token '") + label + "' in class expression");
        }

        std::size_t idx = model.basis_index(name);
        coeffs[idx] = checked_add(coeffs[idx], checked_mul(sign, magnitude));
        first = false;
    }
    return DivisorClass(std::move(coeffs));
}

// Canonical text form: positive terms first, then negative terms, each group
// in basis order; unit coefficients are implicit; the zero class prints "0".
// parse_class(format_class(e)) == e for every class.
inline std::string format_class(const SurfaceModel& model, const DivisorClass& e) {
    require_rank(model, e);
    std::string out;
    auto append_term = [&](std::size_t i, bool negative) {
        std::int64_t c = e[i];
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::int64_t mag = checked_abs(c);
        if (mag != 1) out += std::to_string(mag);
        out += model.basis()[i];
    };
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (e[i] > 0) append_term(i, false);
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (e[i] < 0) append_term(i, true);
    return out.empty() ? "0" : out;
}

}  // namespace curveclass

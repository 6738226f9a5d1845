#include "lefschetz/expression.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace lefschetz {

ExpressionError::ExpressionError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

namespace {

// A parsed value. Numbers stay scalars until they meet a class, so that
// "0" can later take any degree.
struct Value {
    std::optional<Rational> scalar;
    std::optional<Element> element;

    [[nodiscard]] Element as_element(const Algebra& a) const {
        if (element) return *element;
        Element u = Element::unit(a);
        u *= *scalar;
        return u;
    }
};

class Parser {
public:
    Parser(const Algebra& a, std::string_view text) : a_(a), text_(text) {
        for (int k = 0; k <= a->top_degree(); ++k)
            for (const auto& l : a->labels(k)) names_.emplace_back(l, l);
        // Bare variable names for labels of the form "v^1".
        for (const auto& l : a->labels(std::min(1, a->top_degree()))) {
            if (l.size() > 2 && l.ends_with("^1")) {
                const std::string bare = l.substr(0, l.size() - 2);
                if (!a->find_label(bare)) names_.emplace_back(bare, l);
            }
        }
        std::stable_sort(names_.begin(), names_.end(),
                         [](const auto& x, const auto& y) { return x.first.size() > y.first.size(); });
    }

    Value parse() {
        Value v = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ExpressionError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value add(const Value& x, const Value& y, bool negate) {
        if (x.scalar && y.scalar) return {negate ? *x.scalar - *y.scalar : *x.scalar + *y.scalar, std::nullopt};
        Element ex = x.element ? *x.element : lift(x, y);
        Element ey = y.element ? *y.element : lift(y, x);
        if (ex.degree() != ey.degree()) {
            fail("inhomogeneous sum of degrees " + std::to_string(ex.degree()) + " and " +
                 std::to_string(ey.degree()));
        }
        return {std::nullopt, negate ? ex - ey : ex + ey};
    }

    // A scalar summand next to a class: allowed in degree 0, or as a zero
    // in any degree.
    Element lift(const Value& scalar, const Value& other) {
        const int k = other.element->degree();
        if (scalar.scalar->is_zero()) return Element::zero(a_, k);
        if (k != 0) fail("inhomogeneous sum: constant " + scalar.scalar->str() + " added to a degree " + std::to_string(k) + " class");
        return scalar.as_element(a_);
    }

    Value mul(const Value& x, const Value& y) {
        if (x.scalar && y.scalar) return {*x.scalar * *y.scalar, std::nullopt};
        if (x.scalar) return {std::nullopt, *x.scalar * *y.element};
        if (y.scalar) return {std::nullopt, *y.scalar * *x.element};
        return {std::nullopt, *x.element * *y.element};
    }

    Value sum() {
        skip_space();
        Value v;
        if (accept('-')) {
            v = mul(Value{Rational(-1), std::nullopt}, product());
        } else {
            accept('+');
            v = product();
        }
        while (true) {
            if (accept('+')) v = add(v, product(), false);
            else if (accept('-')) v = add(v, product(), true);
            else return v;
        }
    }

    Value product() {
        Value v = power();
        while (accept('*')) v = mul(v, power());
        return v;
    }

    Value power() {
        Value base = atom();
        while (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            if (pos_ - start > 4) fail("exponent too large");
            const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (base.scalar) {
                Rational r(1);
                for (int i = 0; i < n; ++i) r *= *base.scalar;
                base.scalar = r;
            } else {
                base.element = lefschetz::power(*base.element, n);
            }
        }
        return base;
    }

    static bool boundary(std::string_view rest) {
        if (rest.empty()) return true;
        const char c = rest.front();
        return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '^' || c == '+' || c == '-' || c == ')';
    }

    Value atom() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        const std::string_view rest = text_.substr(pos_);
        for (const auto& [name, label] : names_) {
            if (rest.starts_with(name) && boundary(rest.substr(name.size()))) {
                // A label that reads as a number ("1") is handled as a number.
                if (std::isdigit(static_cast<unsigned char>(name.front()))) break;
                pos_ += name.size();
                return {std::nullopt, Element::named(a_, label)};
            }
        }
        if (std::isdigit(static_cast<unsigned char>(rest.front()))) return number();
        if (accept('(')) {
            Value v = sum();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        std::size_t end = 0;
        while (end < rest.size() && !boundary(rest.substr(end))) ++end;
        fail("unknown class '" + std::string(rest.substr(0, std::max<std::size_t>(end, 1))) + "' in " + a_->name());
    }

    Value number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ > s;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (!digits()) fail("expected a denominator");
        }
        try {
            return {Rational::parse(text_.substr(start, pos_ - start)), std::nullopt};
        } catch (const std::exception& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    const Algebra& a_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::pair<std::string, std::string>> names_;  // spelling, label
};

}  // namespace

Element parse_element(const Algebra& a, std::string_view text, std::optional<int> degree) {
    const Value v = Parser(a, text).parse();
    if (v.scalar) {
        if (degree && *degree != 0) {
            if (!v.scalar->is_zero()) {
                throw ExpressionError("expected a class of degree " + std::to_string(*degree) + ", got the constant " +
                                          v.scalar->str(),
                                      0);
            }
            return Element::zero(a, *degree);
        }
        return v.as_element(a);
    }
    if (degree && v.element->degree() != *degree) {
        throw ExpressionError("expected a class of degree " + std::to_string(*degree) + ", got degree " +
                                  std::to_string(v.element->degree()),
                              0);
    }
    return *v.element;
}

}  // namespace lefschetz

#include "lefschetz/element.hpp"

#include <stdexcept>

namespace lefschetz {

namespace {

void require_same_algebra(const Element& x, const Element& y, const char* what) {
    if (x.algebra() != y.algebra()) {
        throw std::invalid_argument(std::string(what) + ": elements belong to different algebras ('" +
                                    x.algebra()->name() + "' and '" + y.algebra()->name() + "')");
    }
}

}  // namespace

Element::Element(Algebra algebra, int degree, Vector coords)
    : algebra_(std::move(algebra)), degree_(degree), coords_(std::move(coords)) {
    if (!algebra_) throw std::invalid_argument("element without an algebra");
    if (degree_ < 0) throw std::invalid_argument("element of negative degree");
    if (coords_.size() != algebra_->dim(degree_)) {
        throw DimensionMismatch("element of degree " + std::to_string(degree_) + " in '" + algebra_->name() +
                                "' needs " + std::to_string(algebra_->dim(degree_)) + " coordinates, got " +
                                std::to_string(coords_.size()));
    }
}

Element Element::zero(Algebra algebra, int degree) {
    const std::size_t n = algebra ? algebra->dim(degree) : 0;
    return Element(std::move(algebra), degree, Vector(n));
}

Element Element::unit(Algebra algebra) { return Element(std::move(algebra), 0, Vector{Rational(1)}); }

Element Element::basis(Algebra algebra, int degree, std::size_t index) {
    const std::size_t n = algebra->dim(degree);
    if (index >= n) throw std::out_of_range("basis index out of range");
    return Element(std::move(algebra), degree, unit_vector(n, index));
}

Element Element::named(Algebra algebra, std::string_view label) {
    auto where = algebra->find_label(label);
    if (!where) {
        throw std::invalid_argument("no basis element labelled '" + std::string(label) + "' in '" + algebra->name() +
                                    "'");
    }
    return basis(std::move(algebra), where->first, where->second);
}

Element& Element::operator+=(const Element& o) {
    require_same_algebra(*this, o, "addition");
    if (degree_ != o.degree_) throw std::invalid_argument("addition of elements of different degrees");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_algebra(*this, o, "subtraction");
    if (degree_ != o.degree_) throw std::invalid_argument("subtraction of elements of different degrees");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Element& Element::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

Element multiply(const Element& x, const Element& y) {
    require_same_algebra(x, y, "multiply");
    const Algebra& a = x.algebra();
    const int k = x.degree() + y.degree();
    if (k > a->top_degree()) return Element::zero(a, k);
    return Element(a, k, a->multiply(x.degree(), x.coords(), y.degree(), y.coords()));
}

Element power(const Element& x, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Element out = Element::unit(x.algebra());
    for (int i = 0; i < exponent; ++i) out = multiply(out, x);
    return out;
}

Rational integrate(const Element& x) {
    const int d = x.algebra()->top_degree();
    if (x.degree() != d) {
        throw std::invalid_argument("integrate: element has degree " + std::to_string(x.degree()) +
                                    ", top degree is " + std::to_string(d));
    }
    return x.algebra()->integrate(x.coords());
}

std::string to_string(const Element& x) {
    std::string out;
    if (x.above_top()) return "0";
    const auto& labels = x.algebra()->labels(x.degree());
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        const Rational& c = x.coords()[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string& label = labels[i];
        if (label == "1") {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += label;
        } else {
            out += mag.str() + "*" + label;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace lefschetz

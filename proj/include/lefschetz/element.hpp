#pragma once

#include <string_view>

#include "lefschetz/graded_algebra.hpp"

namespace lefschetz {

/// A homogeneous class of degree k in a GradedAlgebra.
///
/// Degrees above the top degree d are allowed and always denote the zero
/// class (cohomology vanishes above the fundamental degree); such elements
/// carry an empty coordinate vector and report above_top().
class Element {
public:
    /// Throws DimensionMismatch if coords do not match dim(degree), and
    /// std::invalid_argument for a negative degree or a null algebra.
    Element(Algebra algebra, int degree, Vector coords);

    static Element zero(Algebra algebra, int degree);
    static Element unit(Algebra algebra);
    static Element basis(Algebra algebra, int degree, std::size_t index);
    /// Throws std::invalid_argument for an unknown label.
    static Element named(Algebra algebra, std::string_view label);

    [[nodiscard]] const Algebra& algebra() const { return algebra_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Vector& coords() const { return coords_; }
    [[nodiscard]] bool above_top() const { return degree_ > algebra_->top_degree(); }
    [[nodiscard]] bool is_zero() const { return lefschetz::is_zero(coords_); }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    Element operator-() const;

    /// Equal when algebra, degree and coordinates all agree.
    friend bool operator==(const Element& a, const Element& b);

private:
    Algebra algebra_;
    int degree_;
    Vector coords_;
};

/// Cup product. Throws std::invalid_argument for elements of different algebras.
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

Element power(const Element& x, int exponent);

/// Throws std::invalid_argument unless x has the top degree.
Rational integrate(const Element& x);

/// Human-readable linear combination of basis labels, e.g. "3*c^4 - 1/2*e^1*a".
std::string to_string(const Element& x);

}  // namespace lefschetz

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lefschetz/element.hpp"

namespace lefschetz {

class ExpressionError : public std::invalid_argument {
public:
    ExpressionError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a homogeneous polynomial in the basis labels of `a`, e.g.
/// "10*c - e", "s[1]^2 * z^4", "1/2*y1*y2 + (y1 - y2)^2".
///
/// Labels are matched longest first, so a label that itself contains '*'
/// or '^' (such as "e^1*a") is read as a single basis element. A bare name
/// v that is not a label stands for "v^1" when that is one. Numbers are
/// exact: "3", "-2/7".
///
/// When `degree` is given, the result must have that degree; a purely
/// numeric zero such as "0" is accepted in any degree. Throws
/// ExpressionError.
Element parse_element(const Algebra& a, std::string_view text, std::optional<int> degree = std::nullopt);

}  // namespace lefschetz

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/constructors.hpp"

namespace lefschetz::catalog {

class UnknownName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Entry {
    Algebra algebra;
    /// Designated hyperplane-like class used for the hard Lefschetz check.
    std::optional<Element> omega;
    std::string description;
};

/// Names listed by the `catalog` command. Any P-n, Gr-k-n and any product
/// "AxB" of resolvable names is also accepted by lookup().
std::vector<std::string> names();

/// Throws UnknownName.
Entry lookup(std::string_view name);

/// Tensor product of the factors in order. A factor sharing a non-unit
/// label with an earlier factor has its labels rewritten to "(l)_i", with i
/// its 1-based position.
Algebra product_of(const std::vector<Algebra>& factors, const std::string& name);

/// Q[a,b]/(a^2,b^2): the even cohomology of (plane cubic) x P^1, with a the
/// class of C x pt and b the class of pt x P^1.
Algebra cubic_times_line_even();

/// (P^1)^3 with hyperplane classes z1, z2, z3.
Algebra p1_cubed();

/// Blowup of P^5 (hyperplane class c) along the Segre image of C x P^1.
Entry example1(BlowupConvention convention = BlowupConvention::standard);

/// Blowup of P^3 x P^3 along (P^1)^3 with pullbacks y1 -> z1+z2, y2 -> z2+z3.
Entry example2(BlowupConvention convention = BlowupConvention::standard);

/// Projectivized universal quotient bundle over Gr(2,5): the partial flag
/// variety of V2 in V3 in C^5.
Entry example3();

/// Input data of the two catalog blowups, exposed for tests and for rebuilding
/// under a different sign convention.
BlowupInput example1_input(BlowupConvention convention = BlowupConvention::standard);
BlowupInput example2_input(BlowupConvention convention = BlowupConvention::standard);

}  // namespace lefschetz::catalog

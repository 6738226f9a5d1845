#pragma once

#include <vector>

#include "lefschetz/element.hpp"

namespace lefschetz {

/// Degree-preserving algebra homomorphism source -> target, given by one
/// matrix per source degree k = 0..d_source. Matrix k has dim_target(k)
/// rows (zero rows when k exceeds the target's top degree) and
/// dim_source(k) columns.
class RingMap {
public:
    /// Throws DimensionMismatch if any matrix has the wrong shape.
    RingMap(Algebra source, Algebra target, std::vector<Matrix> matrices);

    [[nodiscard]] const Algebra& source() const { return source_; }
    [[nodiscard]] const Algebra& target() const { return target_; }
    [[nodiscard]] const std::vector<Matrix>& matrices() const { return matrices_; }
    [[nodiscard]] const Matrix& matrix(int k) const { return matrices_.at(static_cast<std::size_t>(k)); }

    /// Image of source coordinates in degree k; empty above the target's top degree.
    [[nodiscard]] Vector apply(int k, const Vector& coords) const;

private:
    Algebra source_;
    Algebra target_;
    std::vector<Matrix> matrices_;
};

RingMap identity_map(const Algebra& a);

/// Extends a degree-one assignment multiplicatively. `degree_one` has
/// dim_target(1) rows and dim_source(1) columns. Throws std::invalid_argument
/// if the source is not generated in degree one. The result is not checked
/// for multiplicativity; run verify_ring_map.
RingMap ring_map_from_degree_one(const Algebra& source, const Algebra& target, const Matrix& degree_one);

/// Throws std::invalid_argument if x does not belong to f.source().
Element apply_ring_map(const RingMap& f, const Element& x);

/// Checks unit preservation and f(b_i * b_j) = f(b_i) * f(b_j) for every
/// pair of source basis elements, including pairs whose product vanishes in
/// the source but not necessarily in the target.
VerificationReport verify_ring_map(const RingMap& f);

}  // namespace lefschetz

#pragma once

#include <string>
#include <vector>

#include "lefschetz/ring_map.hpp"

namespace lefschetz {

/// Q[h]/(h^{n+1}) with labels "1", h, h^2, ..., and the integral of h^n equal to 1.
Algebra projective_space(int n, const std::string& variable = "h");

/// Inverse of a total Chern class u = u_0 + u_1 + ... (u[i] of degree i,
/// u_0 = 1), computed degree by degree through the top degree. Missing
/// high-degree components are treated as zero. Throws std::invalid_argument
/// if u_0 != 1 or a component has the wrong degree or algebra.
std::vector<Element> chern_series_inverse(const Algebra& a, const std::vector<Element>& u);

/// Product of two inhomogeneous classes given by degree components,
/// truncated at the top degree.
std::vector<Element> chern_series_product(const Algebra& a, const std::vector<Element>& u,
                                          const std::vector<Element>& v);

/// Gysin map of the inclusion whose pullback is `pullback` (Y -> Z), defined
/// by integral_Y(push(w) * y) = integral_Z(w * pullback(y)). Matrix k maps
/// degree k of Z to degree k + codim of Y. Throws std::invalid_argument if
/// top_degree(Z) != top_degree(Y) - codim or a pairing of Y is degenerate.
std::vector<Matrix> adjoint_pushforward(const RingMap& pullback, int codim);

/// Sign conventions for the exceptional class of a blowup. With t = -1 and
/// p = +1 (`standard`) the excess relation reads
///   (-1)^r (w e^r) = push(w) - sum_{i=1}^{r-1} (c_{r-i}(N) w) (-e)^i.
/// `flipped` is the same algebra rebuilt under e -> -e. `geometric` flips
/// the sign of the push(w) term, which matches the self-intersection of the
/// exceptional divisor (e^2 = -[pt] on the blowup of a surface at a point).
enum class BlowupConvention { standard, flipped, geometric };

struct BlowupInput {
    Algebra ambient;               // Y
    Algebra center;                // Z
    RingMap pullback;              // Y -> Z
    int codim = 0;                 // r
    std::vector<Element> normal_chern;  // c_1(N) .. c_r(N), c_i of degree i in Z
    BlowupConvention convention = BlowupConvention::standard;
    std::string name = "blowup";
};

/// Cohomology of the blowup of Y along Z.
///
/// Degree k basis: the degree-k basis of Y (labels verbatim), then for
/// i = 1..r-1 the degree-(k-i) basis of Z, labelled "e^i*<z>" ("e^i" for the
/// unit of Z). Throws std::invalid_argument when r < 2, shapes disagree, the
/// pullback is not multiplicative, or pullback(push(1)) != c_r(N).
Algebra blowup(const BlowupInput& input);

/// Projective bundle over Y with relation
///   z^s + c_1 z^{s-1} + ... + c_s = 0,  s = chern.size() - 1.
/// Degree k basis: for i = 0..s-1, the degree-(k-i) basis of Y times z^i,
/// labelled "<y>" for i = 0 and "z^i*<y>" ("z^i" for the unit) otherwise.
/// The integral of y z^{s-1} is the integral of y over Y.
Algebra projective_bundle(const Algebra& base, const std::vector<Element>& chern, const std::string& name = "");

}  // namespace lefschetz

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/element.hpp"

namespace lefschetz {

/// The subalgebra L generated by a set of degree-one classes.
struct LefschetzData {
    Algebra ambient;
    std::vector<Vector> generators;  // degree-one coordinates
    /// bases[k]: rows are the reduced echelon basis of L^k in the ambient
    /// degree-k coordinates.
    std::vector<Matrix> bases;
    std::vector<std::size_t> dims;

    [[nodiscard]] int top_degree() const { return ambient->top_degree(); }
    [[nodiscard]] std::vector<Vector> basis(int k) const { return bases.at(static_cast<std::size_t>(k)).row_vectors(); }
};

/// L^0 = Q, L^1 = span(generators), L^{k+1} = span(L^1 * L^k). Without
/// explicit generators the whole degree-one part is used. Throws
/// std::invalid_argument for a generator of the wrong degree or algebra.
LefschetzData lefschetz_subalgebra(const Algebra& a, const std::optional<std::vector<Element>>& generators = {});

struct DegreeVerdict {
    int degree = 0;
    bool pass = true;
    std::string witness;  // empty on pass
    /// Ambient coordinates of a class exhibiting the failure, if any.
    std::optional<Vector> kernel_vector;
};

struct PredicateVerdict {
    std::string predicate;  // "symmetry", "poincare_duality", "hard_lefschetz"
    std::vector<DegreeVerdict> degrees;  // k = 0..floor(d/2)

    [[nodiscard]] bool holds() const;
    [[nodiscard]] const DegreeVerdict* first_failure() const;
};

/// Pass at k iff dim L^k = dim L^{d-k}.
PredicateVerdict check_symmetry(const LefschetzData& l);

/// Pass at k iff multiplication by omega^{d-2k} maps L^k bijectively onto
/// L^{d-k}. Throws std::invalid_argument unless omega is a degree-one class
/// in L^1.
PredicateVerdict check_hard_lefschetz(const LefschetzData& l, const Element& omega);

/// Pass at k iff the product pairing L^k x L^{d-k} -> Q is perfect.
PredicateVerdict check_poincare_duality(const LefschetzData& l);

struct PrimitiveDims {
    /// dims[i] = dim ker(omega^{d-2i+1} : L^i -> L^{d-i+1}) for i = 0..floor(d/2).
    std::vector<std::size_t> dims;
    /// Set iff hard Lefschetz holds for omega; then sum_{i<=k} dims[i] = dim L^k.
    bool valid = false;
};

PrimitiveDims primitive_dims(const LefschetzData& l, const Element& omega);

}  // namespace lefschetz

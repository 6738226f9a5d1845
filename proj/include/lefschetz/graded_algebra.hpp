#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/matrix.hpp"

namespace lefschetz {

class GradedAlgebra;

/// Algebras are immutable once built and are shared by the elements, ring
/// maps and Lefschetz data that refer to them.
using Algebra = std::shared_ptr<const GradedAlgebra>;

/// Coordinates (in degree k1 + k2) of basis(k1, i) * basis(k2, j).
using ProductRule = std::function<Vector(int k1, std::size_t i, int k2, std::size_t j)>;

/// A finite graded-commutative algebra over Q concentrated in even
/// cohomological degrees. Degree k here is complex degree, i.e. H^{2k}.
///
/// The multiplication is stored as dense structure constants for every
/// ordered degree pair (k1, k2) with k1 + k2 <= d. Products landing above
/// the top degree d vanish and are not stored.
///
/// The constructor enforces only the shape invariants (a one-dimensional
/// degree 0, correctly sized tables, a nonzero integration functional).
/// Ring axioms are checked by verify_algebra, so that faulty tables can
/// still be represented and diagnosed.
class GradedAlgebra {
public:
    /// Throws std::invalid_argument if a shape invariant is violated.
    GradedAlgebra(std::string name, std::vector<std::vector<std::string>> basis, const ProductRule& rule,
                  Vector integration);

    template <typename... Args>
    static Algebra make(Args&&... args) {
        return std::make_shared<const GradedAlgebra>(std::forward<Args>(args)...);
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] int top_degree() const { return static_cast<int>(basis_.size()) - 1; }

    /// Zero outside 0..d.
    [[nodiscard]] std::size_t dim(int k) const;
    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] std::size_t total_dim() const;

    [[nodiscard]] const std::vector<std::string>& labels(int k) const { return basis_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<std::vector<std::string>>& basis() const { return basis_; }
    [[nodiscard]] std::optional<std::pair<int, std::size_t>> find_label(std::string_view label) const;

    /// Precondition: k1 + k2 <= d.
    [[nodiscard]] const Vector& structure_constants(int k1, std::size_t i, int k2, std::size_t j) const;

    /// Product of coordinate vectors. Returns an empty vector when the
    /// product lies above the top degree.
    [[nodiscard]] Vector multiply(int k1, const Vector& x, int k2, const Vector& y) const;

    [[nodiscard]] const Vector& integration() const { return integration_; }
    [[nodiscard]] Rational integrate(const Vector& top) const;

    [[nodiscard]] GradedAlgebra with_name(std::string name) const;
    [[nodiscard]] GradedAlgebra with_structure_constants(int k1, std::size_t i, int k2, std::size_t j,
                                                         Vector value) const;
    [[nodiscard]] GradedAlgebra relabeled(const std::function<std::string(const std::string&)>& f) const;

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    [[nodiscard]] std::size_t table_index(int k1, int k2) const;

    std::string name_;
    std::vector<std::vector<std::string>> basis_;
    // tables_[table_index(k1, k2)][i * dim(k2) + j]
    std::vector<std::vector<Vector>> tables_;
    Vector integration_;
};

/// Entry (i, j) is the integral of basis(k, i) * basis(d - k, j).
Matrix pairing_matrix(const GradedAlgebra& a, int k);

struct VerificationReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// Checks unit law, commutativity, associativity on all basis triples with
/// degree sum <= d, label uniqueness and full rank of every pairing matrix.
VerificationReport verify_algebra(const GradedAlgebra& a);

/// Kunneth product. Degree-k basis: pairs (x, y) with deg x + deg y = k,
/// ordered by descending degree of x. Labels "x*y", with unit factors dropped.
Algebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Label of a product of two labels, dropping the unit label "1".
std::string join_labels(const std::string& left, const std::string& right);

}  // namespace lefschetz

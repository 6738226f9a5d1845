#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/element.hpp"

namespace lefschetz::schubert {

/// Weakly decreasing list of positive parts; the empty partition indexes
/// the unit class. Text form "[3,1]".
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped. Throws std::invalid_argument for negative
    /// or increasing parts.
    Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "[3,1]" or "[]".
    static Partition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const;  // number of boxes
    /// Part i, or 0 past the end.
    [[nodiscard]] int operator[](int i) const;
    [[nodiscard]] bool contains(const Partition& other) const;
    [[nodiscard]] std::string str() const;

    /// Lexicographic on the parts.
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// The k x (n - k) rectangle bounding the Schubert classes of Gr(k, n).
struct Box {
    int rows;
    int cols;

    /// Throws std::invalid_argument unless rows >= 1 and cols >= 1.
    Box(int rows, int cols);
    [[nodiscard]] bool fits(const Partition& p) const;
    [[nodiscard]] Partition full() const;
    /// Complementary partition rotated by 180 degrees.
    [[nodiscard]] Partition complement(const Partition& p) const;
};

/// Partitions of `size` inside the box, in descending lexicographic order.
std::vector<Partition> partitions_in_box(const Box& box, int size);

/// Horizontal strips of size p added to lambda inside the box, in
/// descending lexicographic order. Throws std::invalid_argument if lambda
/// does not fit or p < 1.
std::vector<Partition> pieri(const Partition& lambda, int p, const Box& box);

/// Number of Littlewood-Richardson tableaux of shape nu/lambda and content mu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Basis label of a Schubert class: "s[3,1]", or "1" for the empty partition.
std::string schubert_label(const Partition& p);

/// Cohomology of Gr(k, n) in the Schubert basis. Throws std::invalid_argument
/// unless 1 <= k < n.
Algebra grassmannian(int k, int n);

/// Chern classes c_0..c_{n-k} of the universal quotient bundle on Gr(k, n):
/// c_i is the special Schubert class s[i]. All elements share one freshly
/// built Grassmannian.
std::vector<Element> quotient_chern_classes(int k, int n);

/// Same, expressed in an existing Gr(k, n) algebra (looked up by label).
std::vector<Element> quotient_chern_classes(const Algebra& grassmannian_algebra, int k, int n);

}  // namespace lefschetz::schubert

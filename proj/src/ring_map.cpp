#include "lefschetz/ring_map.hpp"

#include <stdexcept>

namespace lefschetz {

RingMap::RingMap(Algebra source, Algebra target, std::vector<Matrix> matrices)
    : source_(std::move(source)), target_(std::move(target)), matrices_(std::move(matrices)) {
    if (!source_ || !target_) throw std::invalid_argument("ring map needs a source and a target");
    const int d = source_->top_degree();
    if (matrices_.size() != static_cast<std::size_t>(d + 1)) {
        throw DimensionMismatch("ring map needs " + std::to_string(d + 1) + " matrices, got " +
                                std::to_string(matrices_.size()));
    }
    for (int k = 0; k <= d; ++k) {
        const Matrix& m = matrices_[static_cast<std::size_t>(k)];
        if (m.rows() != target_->dim(k) || m.cols() != source_->dim(k)) {
            throw DimensionMismatch("ring map matrix in degree " + std::to_string(k) + " must be " +
                                    std::to_string(target_->dim(k)) + " x " + std::to_string(source_->dim(k)) +
                                    ", got " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
        }
    }
}

Vector RingMap::apply(int k, const Vector& coords) const { return matrix(k) * coords; }

RingMap identity_map(const Algebra& a) {
    std::vector<Matrix> ms;
    for (int k = 0; k <= a->top_degree(); ++k) ms.push_back(Matrix::identity(a->dim(k)));
    return RingMap(a, a, std::move(ms));
}

RingMap ring_map_from_degree_one(const Algebra& source, const Algebra& target, const Matrix& degree_one) {
    const int d = source->top_degree();
    std::vector<Matrix> ms;
    ms.push_back(Matrix(target->dim(0), source->dim(0)));
    ms[0](0, 0) = 1;
    if (d >= 1) {
        if (degree_one.rows() != target->dim(1) || degree_one.cols() != source->dim(1)) {
            throw DimensionMismatch("degree-one map must be " + std::to_string(target->dim(1)) + " x " +
                                    std::to_string(source->dim(1)));
        }
        ms.push_back(degree_one);
    }
    for (int k = 2; k <= d; ++k) {
        const std::size_t n1 = source->dim(1);
        const std::size_t prev = source->dim(k - 1);
        // Columns: products g_a * b_j with g_a in degree 1 and b_j in degree k-1.
        Matrix products(source->dim(k), n1 * prev);
        for (std::size_t a = 0; a < n1; ++a)
            for (std::size_t j = 0; j < prev; ++j) {
                const Vector& v = source->structure_constants(1, a, k - 1, j);
                for (std::size_t r = 0; r < v.size(); ++r) products(r, a * prev + j) = v[r];
            }

        Matrix m(target->dim(k), source->dim(k));
        for (std::size_t i = 0; i < source->dim(k); ++i) {
            auto x = solve(products, unit_vector(source->dim(k), i));
            if (!x) {
                throw std::invalid_argument("'" + source->name() + "' is not generated in degree one (degree " +
                                            std::to_string(k) + ")");
            }
            if (target->dim(k) == 0) continue;
            Vector image(target->dim(k));
            for (std::size_t a = 0; a < n1; ++a)
                for (std::size_t j = 0; j < prev; ++j) {
                    const Rational& c = (*x)[a * prev + j];
                    if (c.is_zero()) continue;
                    axpy(image, c,
                         target->multiply(1, ms[1].column(a), k - 1, ms[static_cast<std::size_t>(k - 1)].column(j)));
                }
            for (std::size_t r = 0; r < image.size(); ++r) m(r, i) = image[r];
        }
        ms.push_back(std::move(m));
    }
    return RingMap(source, target, std::move(ms));
}

Element apply_ring_map(const RingMap& f, const Element& x) {
    if (x.algebra() != f.source()) {
        throw std::invalid_argument("apply_ring_map: element does not belong to the source '" + f.source()->name() +
                                    "'");
    }
    if (x.above_top()) return Element::zero(f.target(), x.degree());
    return Element(f.target(), x.degree(), f.apply(x.degree(), x.coords()));
}

VerificationReport verify_ring_map(const RingMap& f) {
    VerificationReport report;
    const GradedAlgebra& src = *f.source();
    const GradedAlgebra& tgt = *f.target();

    if (f.apply(0, Vector{Rational(1)}) != Vector{Rational(1)}) report.violations.push_back("unit is not preserved");

    const int d = src.top_degree();
    for (int k1 = 0; k1 <= d; ++k1)
        for (int k2 = k1; k2 <= d; ++k2)
            for (std::size_t i = 0; i < src.dim(k1); ++i)
                for (std::size_t j = 0; j < src.dim(k2); ++j) {
                    if (k1 == k2 && j < i) continue;
                    const int k = k1 + k2;
                    if (k > tgt.top_degree()) continue;  // both sides vanish in the target
                    const Vector lhs = k <= d ? f.apply(k, src.structure_constants(k1, i, k2, j)) : Vector(tgt.dim(k));
                    const Vector rhs = tgt.multiply(k1, f.matrix(k1).column(i), k2, f.matrix(k2).column(j));
                    if (lhs != rhs) {
                        report.violations.push_back("f(" + src.labels(k1)[i] + " * " + src.labels(k2)[j] +
                                                    ") != f(" + src.labels(k1)[i] + ") * f(" + src.labels(k2)[j] +
                                                    "): " + to_string(lhs) + " vs " + to_string(rhs));
                    }
                }
    return report;
}

}  // namespace lefschetz

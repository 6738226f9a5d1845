#include "lefschetz/graded_algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

GradedAlgebra::GradedAlgebra(std::string name, std::vector<std::vector<std::string>> basis, const ProductRule& rule,
                             Vector integration)
    : name_(std::move(name)), basis_(std::move(basis)), integration_(std::move(integration)) {
    if (basis_.empty()) throw std::invalid_argument("algebra '" + name_ + "' has no degree 0");
    if (basis_[0].size() != 1) {
        throw std::invalid_argument("algebra '" + name_ + "' must have a one-dimensional degree 0");
    }
    const int d = top_degree();
    if (integration_.size() != dim(d)) {
        throw std::invalid_argument("algebra '" + name_ + "': integration functional has length " +
                                    std::to_string(integration_.size()) + ", top degree has dimension " +
                                    std::to_string(dim(d)));
    }
    if (dim(d) > 0 && is_zero(integration_)) {
        throw std::invalid_argument("algebra '" + name_ + "': integration functional is identically zero");
    }

    tables_.resize(static_cast<std::size_t>((d + 1) * (d + 1)));
    for (int k1 = 0; k1 <= d; ++k1) {
        for (int k2 = 0; k1 + k2 <= d; ++k2) {
            auto& table = tables_[table_index(k1, k2)];
            const std::size_t target = dim(k1 + k2);
            table.reserve(dim(k1) * dim(k2));
            for (std::size_t i = 0; i < dim(k1); ++i) {
                for (std::size_t j = 0; j < dim(k2); ++j) {
                    Vector v = rule(k1, i, k2, j);
                    if (v.size() != target) {
                        throw std::invalid_argument("algebra '" + name_ + "': product of degrees " +
                                                    std::to_string(k1) + " and " + std::to_string(k2) +
                                                    " has " + std::to_string(v.size()) + " coordinates, expected " +
                                                    std::to_string(target));
                    }
                    table.push_back(std::move(v));
                }
            }
        }
    }
}

std::size_t GradedAlgebra::table_index(int k1, int k2) const {
    return static_cast<std::size_t>(k1 * (top_degree() + 1) + k2);
}

std::size_t GradedAlgebra::dim(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return basis_[static_cast<std::size_t>(k)].size();
}

std::vector<std::size_t> GradedAlgebra::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_) out.push_back(b.size());
    return out;
}

std::size_t GradedAlgebra::total_dim() const {
    std::size_t n = 0;
    for (const auto& b : basis_) n += b.size();
    return n;
}

std::optional<std::pair<int, std::size_t>> GradedAlgebra::find_label(std::string_view label) const {
    for (int k = 0; k <= top_degree(); ++k) {
        const auto& ls = labels(k);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] == label) return std::make_pair(k, i);
        }
    }
    return std::nullopt;
}

const Vector& GradedAlgebra::structure_constants(int k1, std::size_t i, int k2, std::size_t j) const {
    if (k1 < 0 || k2 < 0 || k1 + k2 > top_degree()) {
        throw std::out_of_range("structure constants requested above the top degree");
    }
    return tables_[table_index(k1, k2)].at(i * dim(k2) + j);
}

Vector GradedAlgebra::multiply(int k1, const Vector& x, int k2, const Vector& y) const {
    if (k1 < 0 || k2 < 0) throw std::out_of_range("negative degree");
    if (k1 + k2 > top_degree()) return {};
    if (x.size() != dim(k1) || y.size() != dim(k2)) throw DimensionMismatch("multiply: coordinate length mismatch");
    Vector out(dim(k1 + k2));
    const auto& table = tables_[table_index(k1, k2)];
    const std::size_t n2 = dim(k2);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n2; ++j) {
            if (y[j].is_zero()) continue;
            axpy(out, x[i] * y[j], table[i * n2 + j]);
        }
    }
    return out;
}

Rational GradedAlgebra::integrate(const Vector& top) const {
    if (top.size() != integration_.size()) throw DimensionMismatch("integrate: wrong number of coordinates");
    return dot(integration_, top);
}

GradedAlgebra GradedAlgebra::with_name(std::string name) const {
    GradedAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

GradedAlgebra GradedAlgebra::with_structure_constants(int k1, std::size_t i, int k2, std::size_t j,
                                                      Vector value) const {
    if (value.size() != dim(k1 + k2)) throw DimensionMismatch("structure constant length mismatch");
    GradedAlgebra copy = *this;
    copy.tables_[table_index(k1, k2)].at(i * dim(k2) + j) = std::move(value);
    return copy;
}

GradedAlgebra GradedAlgebra::relabeled(const std::function<std::string(const std::string&)>& f) const {
    GradedAlgebra copy = *this;
    for (auto& degree : copy.basis_)
        for (auto& label : degree) label = f(label);
    return copy;
}

Matrix pairing_matrix(const GradedAlgebra& a, int k) {
    const int d = a.top_degree();
    if (k < 0 || k > d) throw std::out_of_range("pairing_matrix: degree out of range");
    Matrix g(a.dim(k), a.dim(d - k));
    for (std::size_t i = 0; i < a.dim(k); ++i)
        for (std::size_t j = 0; j < a.dim(d - k); ++j)
            g(i, j) = a.integrate(a.structure_constants(k, i, d - k, j));
    return g;
}

namespace {

std::string basis_name(const GradedAlgebra& a, int k, std::size_t i) {
    return a.labels(k)[i] + "[deg " + std::to_string(k) + "]";
}

}  // namespace

VerificationReport verify_algebra(const GradedAlgebra& a) {
    VerificationReport report;
    auto& out = report.violations;
    const int d = a.top_degree();

    std::set<std::string> seen;
    for (int k = 0; k <= d; ++k)
        for (const auto& l : a.labels(k))
            if (!seen.insert(l).second) out.push_back("duplicate basis label '" + l + "'");

    const Vector one{Rational(1)};
    for (int k = 0; k <= d; ++k) {
        for (std::size_t i = 0; i < a.dim(k); ++i) {
            const Vector e = unit_vector(a.dim(k), i);
            if (a.multiply(0, one, k, e) != e) out.push_back("unit law fails on " + basis_name(a, k, i));
            if (a.multiply(k, e, 0, one) != e) out.push_back("right unit law fails on " + basis_name(a, k, i));
        }
    }

    for (int k1 = 0; k1 <= d; ++k1)
        for (int k2 = k1; k1 + k2 <= d; ++k2)
            for (std::size_t i = 0; i < a.dim(k1); ++i)
                for (std::size_t j = 0; j < a.dim(k2); ++j) {
                    if (k1 == k2 && j < i) continue;
                    if (a.structure_constants(k1, i, k2, j) != a.structure_constants(k2, j, k1, i)) {
                        out.push_back("commutativity fails for " + basis_name(a, k1, i) + " * " +
                                      basis_name(a, k2, j));
                    }
                }

    for (int k1 = 0; k1 <= d; ++k1)
        for (int k2 = 0; k1 + k2 <= d; ++k2)
            for (int k3 = 0; k1 + k2 + k3 <= d; ++k3)
                for (std::size_t i = 0; i < a.dim(k1); ++i)
                    for (std::size_t j = 0; j < a.dim(k2); ++j) {
                        const Vector& ij = a.structure_constants(k1, i, k2, j);
                        for (std::size_t l = 0; l < a.dim(k3); ++l) {
                            const Vector left = a.multiply(k1 + k2, ij, k3, unit_vector(a.dim(k3), l));
                            const Vector right =
                                a.multiply(k1, unit_vector(a.dim(k1), i), k2 + k3, a.structure_constants(k2, j, k3, l));
                            if (left != right) {
                                out.push_back("associativity fails for (" + basis_name(a, k1, i) + ", " +
                                              basis_name(a, k2, j) + ", " + basis_name(a, k3, l) + ")");
                            }
                        }
                    }

    for (int k = 0; k <= d; ++k) {
        const Matrix g = pairing_matrix(a, k);
        const std::size_t r = rank(g);
        if (a.dim(k) != a.dim(d - k) || r != a.dim(k)) {
            std::ostringstream msg;
            msg << "pairing in degree " << k << " is degenerate: rank " << r << " on " << a.dim(k) << " x "
                << a.dim(d - k);
            out.push_back(msg.str());
        }
    }
    return report;
}

std::string join_labels(const std::string& left, const std::string& right) {
    if (left == "1") return right;
    if (right == "1") return left;
    return left + "*" + right;
}

Algebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
    const int da = a.top_degree();
    const int db = b.top_degree();
    const int d = da + db;

    // Degree k of the product is a concatenation of blocks (i, k - i) for
    // i descending; offsets[k][i] is where block i starts.
    std::vector<std::vector<std::string>> basis(static_cast<std::size_t>(d + 1));
    std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(d + 1),
                                                  std::vector<std::size_t>(static_cast<std::size_t>(da + 1), 0));
    // Reverse lookup: product index -> (degree in a, index in a, index in b).
    struct Slot {
        int ka;
        std::size_t ia;
        std::size_t ib;
    };
    std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(d + 1));

    for (int k = 0; k <= d; ++k) {
        auto& labels = basis[static_cast<std::size_t>(k)];
        for (int i = std::min(k, da); i >= 0; --i) {
            const int j = k - i;
            if (j > db) continue;
            offsets[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = labels.size();
            for (std::size_t x = 0; x < a.dim(i); ++x)
                for (std::size_t y = 0; y < b.dim(j); ++y) {
                    labels.push_back(join_labels(a.labels(i)[x], b.labels(j)[y]));
                    slots[static_cast<std::size_t>(k)].push_back({i, x, y});
                }
        }
    }

    auto index_of = [&](int k, int ka, std::size_t x, std::size_t y) {
        const int kb = k - ka;
        return offsets[static_cast<std::size_t>(k)][static_cast<std::size_t>(ka)] + x * b.dim(kb) + y;
    };

    ProductRule rule = [&](int k1, std::size_t i, int k2, std::size_t j) {
        const int k = k1 + k2;
        Vector out(basis[static_cast<std::size_t>(k)].size());
        const Slot s = slots[static_cast<std::size_t>(k1)][i];
        const Slot t = slots[static_cast<std::size_t>(k2)][j];
        const int ka = s.ka + t.ka;
        const int kb = (k1 - s.ka) + (k2 - t.ka);
        if (ka > da || kb > db) return out;
        const Vector& pa = a.structure_constants(s.ka, s.ia, t.ka, t.ia);
        const Vector& pb = b.structure_constants(k1 - s.ka, s.ib, k2 - t.ka, t.ib);
        for (std::size_t x = 0; x < pa.size(); ++x) {
            if (pa[x].is_zero()) continue;
            for (std::size_t y = 0; y < pb.size(); ++y) {
                if (pb[y].is_zero()) continue;
                out[index_of(k, ka, x, y)] += pa[x] * pb[y];
            }
        }
        return out;
    };

    Vector integration(basis[static_cast<std::size_t>(d)].size());
    for (std::size_t x = 0; x < a.dim(da); ++x)
        for (std::size_t y = 0; y < b.dim(db); ++y)
            integration[index_of(d, da, x, y)] = a.integration()[x] * b.integration()[y];

    // The rule reads `basis`, so it is copied rather than moved.
    return GradedAlgebra::make(a.name() + "x" + b.name(), basis, rule, std::move(integration));
}

}  // namespace lefschetz

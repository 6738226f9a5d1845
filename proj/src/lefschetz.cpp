#include "lefschetz/lefschetz.hpp"

#include <sstream>
#include <stdexcept>

namespace lefschetz {

LefschetzData lefschetz_subalgebra(const Algebra& a, const std::optional<std::vector<Element>>& generators) {
    LefschetzData l;
    l.ambient = a;
    const int d = a->top_degree();

    if (generators) {
        for (const auto& g : *generators) {
            if (g.algebra() != a) throw std::invalid_argument("generator belongs to another algebra");
            if (g.degree() != 1) {
                throw std::invalid_argument("generators must have degree 1, got degree " + std::to_string(g.degree()));
            }
            l.generators.push_back(g.coords());
        }
    } else {
        for (std::size_t i = 0; i < a->dim(1); ++i) l.generators.push_back(unit_vector(a->dim(1), i));
    }

    l.bases.push_back(Matrix::identity(1));
    for (int k = 1; k <= d; ++k) {
        std::vector<Vector> spanning;
        if (k == 1) {
            spanning = l.generators;
        } else {
            const Matrix& prev = l.bases.back();
            for (const auto& g : l.generators)
                for (std::size_t r = 0; r < prev.rows(); ++r) spanning.push_back(a->multiply(1, g, k - 1, prev.row(r)));
        }
        const auto basis = echelon_basis(spanning, a->dim(k));
        l.bases.push_back(Matrix::from_rows(basis, a->dim(k)));
    }
    for (const auto& b : l.bases) l.dims.push_back(b.rows());
    return l;
}

bool PredicateVerdict::holds() const { return first_failure() == nullptr; }

const DegreeVerdict* PredicateVerdict::first_failure() const {
    for (const auto& v : degrees)
        if (!v.pass) return &v;
    return nullptr;
}

namespace {

void require_omega(const LefschetzData& l, const Element& omega) {
    if (omega.algebra() != l.ambient) throw std::invalid_argument("omega belongs to another algebra");
    if (omega.degree() != 1) throw std::invalid_argument("omega must have degree 1");
    if (l.top_degree() < 1) return;
    std::vector<Vector> rows = l.basis(1);
    const std::size_t before = rows.size();
    rows.push_back(omega.coords());
    if (row_space_rank(rows) != before) {
        throw std::invalid_argument("omega = " + to_string(omega) + " does not lie in L^1");
    }
}

// omega^power * x for x in degree k; empty above the top degree.
Vector times_power(const GradedAlgebra& a, const Vector& omega, int power, int k, const Vector& x) {
    Vector v = x;
    for (int i = 0; i < power; ++i) {
        if (k + 1 > a.top_degree()) return {};
        v = a.multiply(1, omega, k, v);
        ++k;
    }
    return v;
}

// Columns are the images of the rows of `source` under omega^power.
Matrix power_map(const LefschetzData& l, const Element& omega, int power, int k) {
    const GradedAlgebra& a = *l.ambient;
    const int target = k + power;
    const std::vector<Vector> rows = l.basis(k);
    Matrix m(a.dim(target), rows.size());
    if (target > a.top_degree()) return m;
    for (std::size_t c = 0; c < rows.size(); ++c) {
        const Vector img = times_power(a, omega.coords(), power, k, rows[c]);
        for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img[r];
    }
    return m;
}

Vector combine(const std::vector<Vector>& rows, const Vector& coeffs, std::size_t width) {
    Vector v(width);
    for (std::size_t i = 0; i < rows.size(); ++i) axpy(v, coeffs[i], rows[i]);
    return v;
}

}  // namespace

PredicateVerdict check_symmetry(const LefschetzData& l) {
    PredicateVerdict out{"symmetry", {}};
    const int d = l.top_degree();
    for (int k = 0; 2 * k <= d; ++k) {
        DegreeVerdict v;
        v.degree = k;
        const auto lo = l.dims[static_cast<std::size_t>(k)];
        const auto hi = l.dims[static_cast<std::size_t>(d - k)];
        if (lo != hi) {
            v.pass = false;
            v.witness = "k=" + std::to_string(k) + ": " + std::to_string(lo) + " vs " + std::to_string(hi);
        }
        out.degrees.push_back(std::move(v));
    }
    return out;
}

PredicateVerdict check_hard_lefschetz(const LefschetzData& l, const Element& omega) {
    require_omega(l, omega);
    PredicateVerdict out{"hard_lefschetz", {}};
    const GradedAlgebra& a = *l.ambient;
    const int d = l.top_degree();
    for (int k = 0; 2 * k <= d; ++k) {
        DegreeVerdict v;
        v.degree = k;
        const auto lo = l.dims[static_cast<std::size_t>(k)];
        const auto hi = l.dims[static_cast<std::size_t>(d - k)];
        const Matrix m = power_map(l, omega, d - 2 * k, k);
        const auto ker = kernel(m);
        std::ostringstream w;
        if (!ker.empty()) {
            v.pass = false;
            v.kernel_vector = combine(l.basis(k), ker.front(), a.dim(k));
            w << "k=" << k << ": omega^" << (d - 2 * k) << " kills " << to_string(Element(l.ambient, k, *v.kernel_vector));
        }
        if (lo != hi) {
            v.pass = false;
            if (!w.str().empty()) w << "; ";
            else w << "k=" << k << ": ";
            w << "dim L^" << k << " = " << lo << ", dim L^" << (d - k) << " = " << hi;
        }
        v.witness = w.str();
        out.degrees.push_back(std::move(v));
    }
    return out;
}

PredicateVerdict check_poincare_duality(const LefschetzData& l) {
    PredicateVerdict out{"poincare_duality", {}};
    const GradedAlgebra& a = *l.ambient;
    const int d = l.top_degree();
    for (int k = 0; 2 * k <= d; ++k) {
        DegreeVerdict v;
        v.degree = k;
        const auto left = l.basis(k);
        const auto right = l.basis(d - k);
        Matrix gram(left.size(), right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                gram(i, j) = a.integrate(a.multiply(k, left[i], d - k, right[j]));
        const std::size_t r = rank(gram);
        if (r != left.size() || r != right.size()) {
            v.pass = false;
            std::ostringstream w;
            w << "k=" << k << ": pairing L^" << k << " x L^" << (d - k) << " is " << left.size() << " x "
              << right.size() << " of rank " << r;
            if (r < left.size()) {
                const auto ker = kernel(gram.transposed());
                v.kernel_vector = combine(left, ker.front(), a.dim(k));
                w << "; " << to_string(Element(l.ambient, k, *v.kernel_vector)) << " pairs to zero";
            } else {
                const auto ker = kernel(gram);
                v.kernel_vector = combine(right, ker.front(), a.dim(d - k));
                w << "; " << to_string(Element(l.ambient, d - k, *v.kernel_vector)) << " pairs to zero";
            }
            v.witness = w.str();
        }
        out.degrees.push_back(std::move(v));
    }
    return out;
}

PrimitiveDims primitive_dims(const LefschetzData& l, const Element& omega) {
    const PredicateVerdict hl = check_hard_lefschetz(l, omega);
    PrimitiveDims out;
    const int d = l.top_degree();
    for (int i = 0; 2 * i <= d; ++i) {
        const Matrix m = power_map(l, omega, d - 2 * i + 1, i);
        out.dims.push_back(l.dims[static_cast<std::size_t>(i)] - rank(m));
    }
    out.valid = hl.holds();
    if (out.valid) {
        std::size_t sum = 0;
        for (int k = 0; 2 * k <= d; ++k) {
            sum += out.dims[static_cast<std::size_t>(k)];
            if (sum != l.dims[static_cast<std::size_t>(k)]) {
                throw std::logic_error("Lefschetz decomposition does not add up in degree " + std::to_string(k));
            }
        }
    }
    return out;
}

}  // namespace lefschetz

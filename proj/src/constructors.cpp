#include "lefschetz/constructors.hpp"

#include <stdexcept>

namespace lefschetz {

Algebra projective_space(int n, const std::string& variable) {
    if (n < 0) throw std::invalid_argument("projective space of negative dimension");
    std::vector<std::vector<std::string>> basis;
    basis.push_back({"1"});
    for (int k = 1; k <= n; ++k) basis.push_back({k == 1 ? variable : variable + "^" + std::to_string(k)});
    ProductRule rule = [](int, std::size_t, int, std::size_t) { return Vector{Rational(1)}; };
    return GradedAlgebra::make("P-" + std::to_string(n), std::move(basis), rule, Vector{Rational(1)});
}

namespace {

void check_series(const Algebra& a, const std::vector<Element>& u, const char* what) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].algebra() != a) throw std::invalid_argument(std::string(what) + ": component from another algebra");
        if (u[i].degree() != static_cast<int>(i)) {
            throw std::invalid_argument(std::string(what) + ": component " + std::to_string(i) + " has degree " +
                                        std::to_string(u[i].degree()));
        }
    }
}

Element component(const Algebra& a, const std::vector<Element>& u, int i) {
    if (i < static_cast<int>(u.size())) return u[static_cast<std::size_t>(i)];
    return Element::zero(a, i);
}

}  // namespace

std::vector<Element> chern_series_product(const Algebra& a, const std::vector<Element>& u,
                                          const std::vector<Element>& v) {
    check_series(a, u, "chern_series_product");
    check_series(a, v, "chern_series_product");
    std::vector<Element> out;
    for (int m = 0; m <= a->top_degree(); ++m) {
        Element sum = Element::zero(a, m);
        for (int i = 0; i <= m; ++i) sum += component(a, u, i) * component(a, v, m - i);
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<Element> chern_series_inverse(const Algebra& a, const std::vector<Element>& u) {
    check_series(a, u, "chern_series_inverse");
    if (u.empty() || u[0] != Element::unit(a)) {
        throw std::invalid_argument("chern_series_inverse: degree-0 component must be 1");
    }
    std::vector<Element> v{Element::unit(a)};
    for (int m = 1; m <= a->top_degree(); ++m) {
        Element next = Element::zero(a, m);
        for (int i = 1; i <= m; ++i) next -= component(a, u, i) * v[static_cast<std::size_t>(m - i)];
        v.push_back(std::move(next));
    }
    return v;
}

std::vector<Matrix> adjoint_pushforward(const RingMap& pullback, int codim) {
    const GradedAlgebra& y = *pullback.source();
    const GradedAlgebra& z = *pullback.target();
    const int dy = y.top_degree();
    const int dz = z.top_degree();
    if (dz != dy - codim) {
        throw std::invalid_argument("adjoint_pushforward: '" + z.name() + "' has top degree " + std::to_string(dz) +
                                    ", expected " + std::to_string(dy - codim));
    }

    std::vector<Matrix> out;
    for (int k = 0; k <= dz; ++k) {
        // Unknown x = push(w) in degree k + codim; Gram^T x = (integral_Z w * pullback(c_l))_l.
        const Matrix gram = pairing_matrix(y, k + codim);
        if (gram.rows() != gram.cols() || rank(gram) != gram.rows()) {
            throw std::invalid_argument("adjoint_pushforward: pairing of '" + y.name() + "' is degenerate in degree " +
                                        std::to_string(k + codim));
        }
        const Matrix gram_t = gram.transposed();
        const int dual = dz - k;
        Matrix push(y.dim(k + codim), z.dim(k));
        for (std::size_t j = 0; j < z.dim(k); ++j) {
            Vector rhs(y.dim(dual));
            for (std::size_t l = 0; l < y.dim(dual); ++l) {
                const Vector restricted = pullback.matrix(dual).column(l);
                rhs[l] = z.integrate(z.multiply(k, unit_vector(z.dim(k), j), dual, restricted));
            }
            const auto x = solve(gram_t, rhs);
            for (std::size_t r = 0; r < x->size(); ++r) push(r, j) = (*x)[r];
        }
        out.push_back(std::move(push));
    }
    return out;
}

namespace {

// Coordinates of a class split into summands. For a blowup, piece 0 is the
// pulled-back part from Y and piece i the coefficient of e^i in Z. For a
// projective bundle, piece i is the coefficient of z^i in Y.
using Pieces = std::vector<Vector>;

void add_into(Vector& dst, const Vector& src) {
    if (src.empty()) return;
    axpy(dst, Rational(1), src);
}

void add_into(Pieces& dst, const Pieces& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) add_into(dst[i], src[i]);
}

class BlowupRing {
public:
    BlowupRing(const BlowupInput& in, std::vector<Matrix> push)
        : y_(*in.ambient), z_(*in.center), pull_(in.pullback), push_(std::move(push)), r_(in.codim) {
        for (const auto& c : in.normal_chern) chern_.push_back(c.coords());
        switch (in.convention) {
            case BlowupConvention::standard: t_ = -1; p_ = 1; break;
            case BlowupConvention::flipped: t_ = 1; p_ = 1; break;
            case BlowupConvention::geometric: t_ = -1; p_ = -1; break;
        }
    }

    [[nodiscard]] std::size_t dim(int k) const {
        std::size_t n = y_.dim(k);
        for (int i = 1; i < r_; ++i) n += z_.dim(k - i);
        return n;
    }

    [[nodiscard]] std::vector<std::string> labels(int k) const {
        std::vector<std::string> out = y_.labels(k);
        for (int i = 1; i < r_; ++i) {
            if (z_.dim(k - i) == 0) continue;
            const std::string e = "e^" + std::to_string(i);
            for (const auto& l : z_.labels(k - i)) out.push_back(l == "1" ? e : e + "*" + l);
        }
        return out;
    }

    [[nodiscard]] Pieces zero(int k) const {
        Pieces p;
        p.push_back(Vector(y_.dim(k)));
        for (int i = 1; i < r_; ++i) p.push_back(Vector(z_.dim(k - i)));
        return p;
    }

    [[nodiscard]] Pieces split(int k, std::size_t index) const {
        Pieces p = zero(k);
        for (auto& piece : p) {
            if (index < piece.size()) {
                piece[index] = 1;
                break;
            }
            index -= piece.size();
        }
        return p;
    }

    [[nodiscard]] Vector flatten(const Pieces& p) const {
        Vector out;
        for (const auto& piece : p) out.insert(out.end(), piece.begin(), piece.end());
        return out;
    }

    [[nodiscard]] Vector restrict(int k, const Vector& y) const {
        if (k > z_.top_degree()) return {};
        return pull_.apply(k, y);
    }

    // w * e^s for w in degree m of Z, expressed in the basis of degree m + s.
    [[nodiscard]] Pieces power(int m, const Vector& w, int s) const {
        Pieces out = zero(m + s);
        if (w.empty() || is_zero(w)) return out;
        if (s < r_) {
            out[static_cast<std::size_t>(s)] = w;
            return out;
        }
        if (s > r_) return times_e(m + s - 1, power(m, w, s - 1));

        const Rational sign = (r_ % 2 == 0 || t_ == 1) ? Rational(1) : Rational(-1);  // t^r
        out[0] = scaled(push_[static_cast<std::size_t>(m)] * w, sign * Rational(p_));
        for (int i = 1; i < r_; ++i) {
            const Vector& c = chern_[static_cast<std::size_t>(r_ - i - 1)];  // c_{r-i}
            if (c.empty()) continue;
            const Vector cw = z_.multiply(r_ - i, c, m, w);
            if (cw.empty()) continue;
            const Rational ti = (i % 2 == 0 || t_ == 1) ? Rational(1) : Rational(-1);
            axpy(out[static_cast<std::size_t>(i)], -sign * ti, cw);
        }
        return out;
    }

    // Multiplication by e of a class of degree k.
    [[nodiscard]] Pieces times_e(int k, const Pieces& x) const {
        Pieces out = zero(k + 1);
        add_into(out[1], restrict(k, x[0]));  // y * e = pullback(y) e
        for (int i = 1; i < r_; ++i) {
            const Vector& w = x[static_cast<std::size_t>(i)];
            if (w.empty()) continue;
            if (i + 1 < r_) {
                add_into(out[static_cast<std::size_t>(i + 1)], w);
            } else {
                add_into(out, power(k - i, w, r_));
            }
        }
        return out;
    }

    [[nodiscard]] Pieces multiply(int k1, const Pieces& a, int k2, const Pieces& b) const {
        const int k = k1 + k2;
        Pieces out = zero(k);
        add_into(out[0], y_.multiply(k1, a[0], k2, b[0]));

        const Vector ra = restrict(k1, a[0]);
        const Vector rb = restrict(k2, b[0]);
        for (int j = 1; j < r_; ++j) {
            const auto js = static_cast<std::size_t>(j);
            if (!ra.empty() && !b[js].empty()) add_into(out[js], z_.multiply(k1, ra, k2 - j, b[js]));
            if (!rb.empty() && !a[js].empty()) add_into(out[js], z_.multiply(k2, rb, k1 - j, a[js]));
        }

        for (int i = 1; i < r_; ++i)
            for (int j = 1; j < r_; ++j) {
                const Vector& wa = a[static_cast<std::size_t>(i)];
                const Vector& wb = b[static_cast<std::size_t>(j)];
                if (wa.empty() || wb.empty()) continue;
                const int m = (k1 - i) + (k2 - j);
                const Vector w = z_.multiply(k1 - i, wa, k2 - j, wb);
                if (w.empty()) continue;
                if (i + j < r_) {
                    add_into(out[static_cast<std::size_t>(i + j)], w);
                } else {
                    add_into(out, power(m, w, i + j));
                }
            }
        return out;
    }

private:
    const GradedAlgebra& y_;
    const GradedAlgebra& z_;
    const RingMap& pull_;
    std::vector<Matrix> push_;
    std::vector<Vector> chern_;  // chern_[i] = coordinates of c_{i+1}(N), empty above the top degree
    int r_;
    int t_ = -1;
    int p_ = 1;
};

}  // namespace

Algebra blowup(const BlowupInput& in) {
    if (in.codim < 2) {
        throw std::invalid_argument("blowup along a divisor is an isomorphism on cohomology (codimension " +
                                    std::to_string(in.codim) + ")");
    }
    if (!in.ambient || !in.center) throw std::invalid_argument("blowup needs both Y and Z");
    if (in.pullback.source() != in.ambient || in.pullback.target() != in.center) {
        throw std::invalid_argument("blowup: pullback must map '" + in.ambient->name() + "' to '" + in.center->name() +
                                    "'");
    }
    const int dy = in.ambient->top_degree();
    const int dz = in.center->top_degree();
    if (dz != dy - in.codim) {
        throw std::invalid_argument("blowup: center has top degree " + std::to_string(dz) + " but Y has " +
                                    std::to_string(dy) + " and the codimension is " + std::to_string(in.codim));
    }
    if (in.normal_chern.size() != static_cast<std::size_t>(in.codim)) {
        throw std::invalid_argument("blowup: expected " + std::to_string(in.codim) +
                                    " normal Chern classes c_1..c_r, got " + std::to_string(in.normal_chern.size()));
    }
    for (std::size_t i = 0; i < in.normal_chern.size(); ++i) {
        const Element& c = in.normal_chern[i];
        if (c.algebra() != in.center || c.degree() != static_cast<int>(i + 1)) {
            throw std::invalid_argument("blowup: c_" + std::to_string(i + 1) + "(N) must be a degree " +
                                        std::to_string(i + 1) + " class of the center");
        }
    }
    if (const auto report = verify_ring_map(in.pullback); !report.passed()) {
        throw std::invalid_argument("blowup: pullback is not a ring map: " + report.violations.front());
    }

    std::vector<Matrix> push = adjoint_pushforward(in.pullback, in.codim);

    // Self-intersection: pullback(push(1)) must equal c_r(N).
    const Element push_one(in.ambient, in.codim, push[0] * Vector{Rational(1)});
    const Element self = apply_ring_map(in.pullback, push_one);
    const Element& top_chern = in.normal_chern.back();
    if (self != top_chern) {
        throw std::invalid_argument("blowup: pullback(push(1)) = " + to_string(self) + " but c_" +
                                    std::to_string(in.codim) + "(N) = " + to_string(top_chern));
    }

    const BlowupRing ring(in, std::move(push));
    std::vector<std::vector<std::string>> basis;
    for (int k = 0; k <= dy; ++k) basis.push_back(ring.labels(k));

    ProductRule rule = [&](int k1, std::size_t i, int k2, std::size_t j) {
        return ring.flatten(ring.multiply(k1, ring.split(k1, i), k2, ring.split(k2, j)));
    };

    Vector integration = in.ambient->integration();
    integration.resize(ring.dim(dy));
    return GradedAlgebra::make(in.name, std::move(basis), rule, std::move(integration));
}

namespace {

class BundleRing {
public:
    BundleRing(const GradedAlgebra& base, const std::vector<Element>& chern)
        : y_(base), s_(static_cast<int>(chern.size()) - 1) {
        for (const auto& c : chern) chern_.push_back(c.coords());
    }

    [[nodiscard]] int rank() const { return s_; }

    [[nodiscard]] Pieces zero(int k) const {
        Pieces p;
        for (int i = 0; i < s_; ++i) p.push_back(Vector(y_.dim(k - i)));
        return p;
    }

    [[nodiscard]] std::size_t dim(int k) const {
        std::size_t n = 0;
        for (int i = 0; i < s_; ++i) n += y_.dim(k - i);
        return n;
    }

    [[nodiscard]] std::vector<std::string> labels(int k) const {
        std::vector<std::string> out;
        for (int i = 0; i < s_; ++i) {
            if (y_.dim(k - i) == 0) continue;
            const std::string z = "z^" + std::to_string(i);
            for (const auto& l : y_.labels(k - i)) out.push_back(i == 0 ? l : (l == "1" ? z : z + "*" + l));
        }
        return out;
    }

    [[nodiscard]] Pieces split(int k, std::size_t index) const {
        Pieces p = zero(k);
        for (auto& piece : p) {
            if (index < piece.size()) {
                piece[index] = 1;
                break;
            }
            index -= piece.size();
        }
        return p;
    }

    [[nodiscard]] Vector flatten(const Pieces& p) const {
        Vector out;
        for (const auto& piece : p) out.insert(out.end(), piece.begin(), piece.end());
        return out;
    }

    // Multiplication by z of a class of degree k, using
    // z^s = -(c_1 z^{s-1} + ... + c_s).
    [[nodiscard]] Pieces times_z(int k, const Pieces& x) const {
        Pieces out = zero(k + 1);
        for (int i = 0; i + 1 < s_; ++i) add_into(out[static_cast<std::size_t>(i + 1)], x[static_cast<std::size_t>(i)]);
        const Vector& w = x[static_cast<std::size_t>(s_ - 1)];
        if (w.empty()) return out;
        const int m = k - (s_ - 1);
        for (int i = 1; i <= s_; ++i) {
            const Vector& c = chern_[static_cast<std::size_t>(i)];
            if (c.empty()) continue;
            const Vector cw = y_.multiply(i, c, m, w);
            if (cw.empty()) continue;
            axpy(out[static_cast<std::size_t>(s_ - i)], Rational(-1), cw);
        }
        return out;
    }

    // w * z^p for w in degree m of Y.
    [[nodiscard]] Pieces power(int m, const Vector& w, int p) const {
        if (p < s_) {
            Pieces out = zero(m + p);
            out[static_cast<std::size_t>(p)] = w;
            return out;
        }
        return times_z(m + p - 1, power(m, w, p - 1));
    }

    [[nodiscard]] Pieces multiply(int k1, const Pieces& a, int k2, const Pieces& b) const {
        Pieces out = zero(k1 + k2);
        for (int i = 0; i < s_; ++i)
            for (int j = 0; j < s_; ++j) {
                const Vector& wa = a[static_cast<std::size_t>(i)];
                const Vector& wb = b[static_cast<std::size_t>(j)];
                if (wa.empty() || wb.empty() || is_zero(wa) || is_zero(wb)) continue;
                const Vector w = y_.multiply(k1 - i, wa, k2 - j, wb);
                if (w.empty()) continue;
                add_into(out, power((k1 - i) + (k2 - j), w, i + j));
            }
        return out;
    }

private:
    const GradedAlgebra& y_;
    int s_;
    std::vector<Vector> chern_;  // chern_[i] = coordinates of c_i, empty above the top degree
};

}  // namespace

Algebra projective_bundle(const Algebra& base, const std::vector<Element>& chern, const std::string& name) {
    if (chern.size() < 2) throw std::invalid_argument("projective_bundle: need c_0..c_s with s >= 1");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (chern[i].algebra() != base || chern[i].degree() != static_cast<int>(i)) {
            throw std::invalid_argument("projective_bundle: c_" + std::to_string(i) + " must be a degree " +
                                        std::to_string(i) + " class of '" + base->name() + "'");
        }
    }
    if (chern[0] != Element::unit(base)) throw std::invalid_argument("projective_bundle: c_0 must be 1");

    const BundleRing ring(*base, chern);
    const int d = base->top_degree() + ring.rank() - 1;
    std::vector<std::vector<std::string>> basis;
    for (int k = 0; k <= d; ++k) basis.push_back(ring.labels(k));

    ProductRule rule = [&](int k1, std::size_t i, int k2, std::size_t j) {
        return ring.flatten(ring.multiply(k1, ring.split(k1, i), k2, ring.split(k2, j)));
    };

    Vector integration = ring.flatten([&] {
        Pieces top = ring.zero(d);
        top[static_cast<std::size_t>(ring.rank() - 1)] = base->integration();
        return top;
    }());
    return GradedAlgebra::make(name.empty() ? "P(" + base->name() + ")" : name, std::move(basis), rule,
                               std::move(integration));
}

}  // namespace lefschetz

#include "lefschetz/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "lefschetz/schubert.hpp"

namespace lefschetz::catalog {

namespace {

using Series = std::vector<Element>;

// 1 + x for a degree-one class x.
Series one_plus(const Element& x) { return {Element::unit(x.algebra()), x}; }

Series series_power(const Algebra& a, const Series& u, int n) {
    Series out{Element::unit(a)};
    for (int i = 0; i < n; ++i) out = chern_series_product(a, out, u);
    return out;
}

// c_1..c_r of N = T_Y|Z / T_Z.
std::vector<Element> normal_chern(const Algebra& z, const Series& tangent_y_restricted, const Series& tangent_z,
                                  int codim) {
    const Series total = chern_series_product(z, tangent_y_restricted, chern_series_inverse(z, tangent_z));
    std::vector<Element> out;
    for (int i = 1; i <= codim; ++i) {
        out.push_back(i < static_cast<int>(total.size()) ? total[static_cast<std::size_t>(i)] : Element::zero(z, i));
    }
    return out;
}

Element hyperplane(const Algebra& p) { return p->dim(1) ? Element::basis(p, 1, 0) : Element::zero(p, 1); }

Element restricted_generator(const RingMap& pullback, const std::string& label) {
    return apply_ring_map(pullback, Element::named(pullback.source(), label));
}

}  // namespace

Algebra cubic_times_line_even() {
    const Algebra pa = projective_space(1, "a");
    const Algebra pb = projective_space(1, "b");
    return GradedAlgebra::make(tensor_product(*pa, *pb)->with_name("CxP1-even"));
}

Algebra p1_cubed() {
    const Algebra z12 = tensor_product(*projective_space(1, "z1"), *projective_space(1, "z2"));
    return GradedAlgebra::make(tensor_product(*z12, *projective_space(1, "z3"))->with_name("P1xP1xP1"));
}

BlowupInput example1_input(BlowupConvention convention) {
    const Algebra y = projective_space(5, "c");
    const Algebra z = cubic_times_line_even();
    // c restricts to a + 3b.
    RingMap pullback = ring_map_from_degree_one(y, z, Matrix::from_rows({{Rational(1)}, {Rational(3)}}));

    const Element c = restricted_generator(pullback, "c");
    const Series tangent_y = series_power(z, one_plus(c), 6);
    // T_C is trivial, so c(T_Z) = c(T_{P^1}) = 1 + 2a.
    const Series tangent_z = one_plus(Rational(2) * Element::named(z, "a"));

    BlowupInput in{y, z, pullback, 3, normal_chern(z, tangent_y, tangent_z, 3), convention, "example1"};
    return in;
}

BlowupInput example2_input(BlowupConvention convention) {
    const Algebra y = GradedAlgebra::make(
        tensor_product(*projective_space(3, "y1"), *projective_space(3, "y2"))->with_name("P3xP3"));
    const Algebra z = p1_cubed();
    // Rows z1, z2, z3; columns y1, y2.
    RingMap pullback = ring_map_from_degree_one(
        y, z, Matrix::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));

    const Series tangent_y = chern_series_product(z, series_power(z, one_plus(restricted_generator(pullback, "y1")), 4),
                                                  series_power(z, one_plus(restricted_generator(pullback, "y2")), 4));
    Series tangent_z{Element::unit(z)};
    for (const char* zi : {"z1", "z2", "z3"})
        tangent_z = chern_series_product(z, tangent_z, one_plus(Rational(2) * Element::named(z, zi)));

    BlowupInput in{y, z, pullback, 3, normal_chern(z, tangent_y, tangent_z, 3), convention, "example2"};
    return in;
}

Entry example1(BlowupConvention convention) {
    const Algebra x = blowup(example1_input(convention));
    const Element omega = Rational(10) * Element::named(x, "c") - Element::named(x, "e^1");
    return {x, omega, "blowup of P^5 along the Segre image of (plane cubic) x P^1"};
}

Entry example2(BlowupConvention convention) {
    const Algebra x = blowup(example2_input(convention));
    const Element omega = Rational(10) * (Element::named(x, "y1") + Element::named(x, "y2")) - Element::named(x, "e^1");
    return {x, omega, "blowup of P^3 x P^3 along (P^1)^3"};
}

Entry example3() {
    const Algebra gr = schubert::grassmannian(2, 5);
    const Algebra x = projective_bundle(gr, schubert::quotient_chern_classes(gr, 2, 5), "example3");
    const Element omega = Rational(2) * Element::named(x, "s[1]") + Element::named(x, "z^1");
    return {x, omega, "projectivized universal quotient bundle over Gr(2,5) (flag variety V2 < V3 < C^5)"};
}

std::vector<std::string> names() {
    return {"example1", "example2", "example3", "CxP1-even", "P1xP1xP1", "P-0",        "P-1",
            "P-2",      "P-3",      "P-4",      "P-5",       "P-6",      "Gr-2-4",     "Gr-2-5",
            "P-3xP-3",  "P-1xP-2",  "Gr-2-4xP-1", "example1xP-1"};
}

namespace {

struct Factor {
    std::string name;
    // P-n factors are rebuilt with an indexed variable inside products.
    std::optional<int> projective_dim;
};

Entry lookup_atom(const Factor& f) {
    if (f.projective_dim) {
        const Algebra p = projective_space(*f.projective_dim);
        return {p, hyperplane(p), "projective space of dimension " + std::to_string(*f.projective_dim)};
    }
    const std::string& n = f.name;
    if (n == "example1") return example1();
    if (n == "example2") return example2();
    if (n == "example3") return example3();
    if (n == "CxP1-even") {
        const Algebra z = cubic_times_line_even();
        return {z, Element::named(z, "a") + Element::named(z, "b"), "even cohomology of (plane cubic) x P^1"};
    }
    if (n == "P1xP1xP1") {
        const Algebra z = p1_cubed();
        return {z, Element::named(z, "z1") + Element::named(z, "z2") + Element::named(z, "z3"), "(P^1)^3"};
    }
    // Gr-k-n
    const auto dash = n.find('-', 3);
    const int k = std::stoi(n.substr(3, dash - 3));
    const int total = std::stoi(n.substr(dash + 1));
    const Algebra gr = schubert::grassmannian(k, total);
    return {gr, Element::named(gr, "s[1]"), "Grassmannian of " + std::to_string(k) + "-planes in C^" + std::to_string(total)};
}

std::optional<std::size_t> digits_at(std::string_view s, std::size_t pos) {
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos || end - pos > 3) return std::nullopt;
    return end;
}

std::vector<Factor> split_factors(std::string_view name) {
    static const std::array<std::string_view, 5> fixed{"example1", "example2", "example3", "CxP1-even", "P1xP1xP1"};
    std::vector<Factor> out;
    std::size_t pos = 0;
    while (true) {
        std::optional<Factor> f;
        for (auto candidate : fixed) {
            if (name.substr(pos, candidate.size()) == candidate) {
                f = Factor{std::string(candidate), std::nullopt};
                pos += candidate.size();
                break;
            }
        }
        if (!f && name.substr(pos, 2) == "P-") {
            if (auto end = digits_at(name, pos + 2)) {
                const std::string token(name.substr(pos, *end - pos));
                f = Factor{token, std::stoi(token.substr(2))};
                pos = *end;
            }
        }
        if (!f && name.substr(pos, 3) == "Gr-") {
            auto mid = digits_at(name, pos + 3);
            if (mid && *mid < name.size() && name[*mid] == '-') {
                if (auto end = digits_at(name, *mid + 1)) {
                    const std::string token(name.substr(pos, *end - pos));
                    const int k = std::stoi(token.substr(3));
                    const int n = std::stoi(std::string(name.substr(*mid + 1, *end - *mid - 1)));
                    if (k < 1 || k >= n) throw UnknownName("invalid Grassmannian '" + token + "' (needs 1 <= k < n)");
                    f = Factor{token, std::nullopt};
                    pos = *end;
                }
            }
        }
        if (!f) throw UnknownName("unknown catalog name '" + std::string(name) + "'");
        out.push_back(*f);
        if (pos == name.size()) return out;
        if (name[pos] != 'x') throw UnknownName("unknown catalog name '" + std::string(name) + "'");
        ++pos;
    }
}

}  // namespace

Entry lookup(std::string_view name) {
    const std::vector<Factor> factors = split_factors(name);
    if (factors.size() == 1) {
        Entry e = lookup_atom(factors.front());
        if (factors.front().projective_dim) {
            e.algebra = GradedAlgebra::make(e.algebra->with_name(std::string(name)));
            e.omega = hyperplane(e.algebra);
        }
        return e;
    }

    std::vector<Algebra> algebras;
    Vector omega;
    std::string description = "product";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Entry e;
        if (factors[i].projective_dim) {
            const Algebra p = projective_space(*factors[i].projective_dim, "h" + std::to_string(i + 1));
            e = {GradedAlgebra::make(p->with_name(factors[i].name)), std::nullopt, ""};
        } else {
            e = lookup_atom(factors[i]);
        }
        const Vector coords = e.omega ? e.omega->coords() : Vector(e.algebra->dim(1), Rational(1));
        omega.insert(omega.end(), coords.begin(), coords.end());
        description += (i ? " x " : " ") + factors[i].name;
        algebras.push_back(e.algebra);
    }
    const Algebra product = product_of(algebras, std::string(name));
    return {product, Element(product, 1, omega), description};
}

Algebra product_of(const std::vector<Algebra>& factors, const std::string& name) {
    if (factors.empty()) throw std::invalid_argument("product of no factors");
    std::set<std::string> seen;
    Algebra product;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Algebra f = factors[i];
        bool clash = false;
        for (const auto& degree : f->basis())
            for (const auto& l : degree) clash = clash || (l != "1" && seen.count(l));
        if (clash) {
            const std::string suffix = "_" + std::to_string(i + 1);
            f = GradedAlgebra::make(f->relabeled([&](const std::string& l) { return l == "1" ? l : "(" + l + ")" + suffix; }));
        }
        for (const auto& degree : f->basis())
            for (const auto& l : degree) seen.insert(l);
        product = product ? tensor_product(*product, *f) : f;
    }
    return GradedAlgebra::make(product->with_name(name));
}

}  // namespace lefschetz::catalog

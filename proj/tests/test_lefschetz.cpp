#include <random>

#include "doctest.h"
#include "lefschetz/catalog.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/schubert.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

using Dims = std::vector<std::size_t>;

Element E(const Algebra& a, const char* text) { return parse_element(a, text); }

Algebra p1xp1() { return tensor_product(*projective_space(1, "h1"), *projective_space(1, "h2")); }

}  // namespace

TEST_CASE("lefschetz dimensions of simple algebras") {
    CHECK(lefschetz_subalgebra(projective_space(2)).dims == Dims{1, 1, 1});
    CHECK(lefschetz_subalgebra(schubert::grassmannian(2, 5)).dims == Dims{1, 1, 1, 1, 1, 1, 1});
    CHECK(lefschetz_subalgebra(projective_space(0)).dims == Dims{1});
}

TEST_CASE("lefschetz dimensions of example1, example2 and example3") {
    const auto l1 = lefschetz_subalgebra(catalog::example1().algebra);
    CHECK(l1.dims == Dims{1, 2, 3, 4, 2, 1});
    const auto l2 = lefschetz_subalgebra(catalog::example2().algebra);
    CHECK(l2.dims[2] == 6);
    CHECK(l2.dims[4] == 7);
    CHECK(catalog::example2().algebra->dims() == Dims{1, 3, 7, 10, 7, 3, 1});
    const auto l3 = lefschetz_subalgebra(catalog::example3().algebra);
    CHECK(l3.dims[2] == 3);
    CHECK(l3.dims[6] == 4);
    CHECK(l3.dims[6] == catalog::example3().algebra->dim(6));
}

TEST_CASE("symmetry verdicts") {
    CHECK(check_symmetry(lefschetz_subalgebra(projective_space(4))).holds());
    const auto v1 = check_symmetry(lefschetz_subalgebra(catalog::example1().algebra));
    REQUIRE_FALSE(v1.holds());
    CHECK(v1.first_failure()->degree == 2);
    CHECK(v1.first_failure()->witness == "k=2: 3 vs 4");
    const auto v3 = check_symmetry(lefschetz_subalgebra(catalog::example3().algebra));
    REQUIRE_FALSE(v3.holds());
    CHECK(v3.first_failure()->witness == "k=2: 3 vs 4");
}

TEST_CASE("hard lefschetz verdicts") {
    const Algebra p3 = projective_space(3);
    CHECK(check_hard_lefschetz(lefschetz_subalgebra(p3), E(p3, "h")).holds());
    const Algebra gr = schubert::grassmannian(2, 5);
    CHECK(check_hard_lefschetz(lefschetz_subalgebra(gr), E(gr, "s[1]")).holds());

    const Algebra x = catalog::example1().algebra;
    const auto v = check_hard_lefschetz(lefschetz_subalgebra(x), E(x, "10*c - e"));
    REQUIRE_FALSE(v.holds());
    CHECK(v.first_failure()->degree == 2);

    // omega = 0 fails with a kernel witness.
    const auto zero = check_hard_lefschetz(lefschetz_subalgebra(p3), Element::zero(p3, 1));
    REQUIRE_FALSE(zero.holds());
    CHECK(zero.first_failure()->degree == 0);
    CHECK(zero.first_failure()->kernel_vector.has_value());

    // omega outside L^1 or of the wrong degree.
    const Algebra pp = p1xp1();
    const auto l = lefschetz_subalgebra(pp, std::vector<Element>{E(pp, "h1")});
    CHECK_THROWS_AS(check_hard_lefschetz(l, E(pp, "h2")), std::invalid_argument);
    CHECK_THROWS_AS(check_hard_lefschetz(lefschetz_subalgebra(pp), E(pp, "h1*h2")), std::invalid_argument);
    CHECK_THROWS_AS(lefschetz_subalgebra(pp, std::vector<Element>{E(pp, "h1*h2")}), std::invalid_argument);
}

TEST_CASE("poincare duality verdicts") {
    CHECK(check_poincare_duality(lefschetz_subalgebra(projective_space(5))).holds());
    const auto v2 = check_poincare_duality(lefschetz_subalgebra(catalog::example2().algebra));
    REQUIRE_FALSE(v2.holds());
    CHECK(v2.first_failure()->degree == 2);

    const Algebra pp = p1xp1();
    const auto l = lefschetz_subalgebra(pp);
    CHECK(check_poincare_duality(l).holds());
    CHECK(pairing_matrix(*pp, 1) == Matrix::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));
    // L generated by h1 alone: L^2 = 0, so the pairing L^0 x L^2 is degenerate.
    CHECK_FALSE(check_poincare_duality(lefschetz_subalgebra(pp, std::vector<Element>{E(pp, "h1")})).holds());
}

TEST_CASE("primitive dimensions") {
    for (int n = 0; n <= 6; ++n) {
        const catalog::Entry p = catalog::lookup("P-" + std::to_string(n));
        const auto prim = primitive_dims(lefschetz_subalgebra(p.algebra), *p.omega);
        CHECK(prim.valid);
        CHECK(prim.dims[0] == 1);
        for (std::size_t i = 1; i < prim.dims.size(); ++i) CHECK(prim.dims[i] == 0);
    }
    const Algebra gr = schubert::grassmannian(2, 5);
    const auto pg = primitive_dims(lefschetz_subalgebra(gr), E(gr, "s[1]"));
    CHECK(pg.dims == Dims{1, 0, 0, 0});

    const Algebra pp = p1xp1();
    const Element omega = E(pp, "h1 + h2");
    const auto prim = primitive_dims(lefschetz_subalgebra(pp), omega);
    CHECK(prim.valid);
    CHECK(prim.dims == Dims{1, 1});
    CHECK((omega * E(pp, "h1 - h2")).is_zero());

    const catalog::Entry x = catalog::example1();
    CHECK_FALSE(primitive_dims(lefschetz_subalgebra(x.algebra), *x.omega).valid);
}

TEST_CASE("L^k agrees with the brute-force monomial span on every catalog algebra") {
    for (const auto& name : catalog::names()) {
        const Algebra a = catalog::lookup(name).algebra;
        CAPTURE(name);
        REQUIRE(a->top_degree() <= 8);
        const auto l = lefschetz_subalgebra(a);
        CHECK(l.dims == oracle::monomial_span_dims(a, oracle::degree_one_basis(a)));
    }
    // And with a proper subset of generators.
    const Algebra x = catalog::example2().algebra;
    const std::vector<Element> gens{E(x, "y1"), E(x, "e")};
    CHECK(lefschetz_subalgebra(x, gens).dims == oracle::monomial_span_dims(x, gens));
}

TEST_CASE("L^0 = L^d = 1 and dim L^1 = dim L^{d-1} on every catalog algebra") {
    for (const auto& name : catalog::names()) {
        const auto l = lefschetz_subalgebra(catalog::lookup(name).algebra);
        CAPTURE(name);
        const auto d = static_cast<std::size_t>(l.top_degree());
        CHECK(l.dims[0] == 1);
        CHECK(l.dims[d] == 1);
        if (d >= 1) CHECK(l.dims[1] == l.dims[d - 1]);
    }
}

TEST_CASE("the three verdicts agree on every catalog algebra") {
    for (const auto& name : catalog::names()) {
        const catalog::Entry e = catalog::lookup(name);
        REQUIRE(e.omega.has_value());
        const auto l = lefschetz_subalgebra(e.algebra);
        CAPTURE(name);
        const bool sym = check_symmetry(l).holds();
        CHECK(check_poincare_duality(l).holds() == sym);
        CHECK(check_hard_lefschetz(l, *e.omega).holds() == sym);
    }
}

TEST_CASE("Kunneth: L-dims of products are convolutions") {
    const std::vector<std::pair<std::string, std::string>> products{
        {"P-3", "P-3"}, {"P-1", "P-2"}, {"Gr-2-4", "P-1"}, {"example1", "P-1"}, {"example3", "P-1"},
        {"CxP1-even", "Gr-2-4"}, {"P1xP1xP1", "P-2"}, {"example1", "CxP1-even"}};
    for (const auto& [a, b] : products) {
        const auto la = lefschetz_subalgebra(catalog::lookup(a).algebra).dims;
        const auto lb = lefschetz_subalgebra(catalog::lookup(b).algebra).dims;
        const auto lab = lefschetz_subalgebra(catalog::lookup(a + "x" + b).algebra).dims;
        CAPTURE(a + "x" + b);
        CHECK(lab == oracle::convolve(la, lb));
    }
}

TEST_CASE("invertible recombination of generators leaves L unchanged") {
    std::mt19937 rng(17);
    for (const auto& name : {"example1", "example2", "example3", "Gr-2-4xP-1", "P1xP1xP1"}) {
        const Algebra a = catalog::lookup(name).algebra;
        const auto base = lefschetz_subalgebra(a);
        const std::size_t n = a->dim(1);
        for (int trial = 0; trial < 3; ++trial) {
            Matrix m(n, n);
            do {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_rational(rng, 3);
            } while (rank(m) < n);
            std::vector<Element> gens;
            for (std::size_t i = 0; i < n; ++i) gens.push_back(Element(a, 1, m.row(i)));
            const auto l = lefschetz_subalgebra(a, gens);
            CAPTURE(name);
            CHECK(l.bases == base.bases);
        }
    }
}

TEST_CASE("blowup conventions give identical Lefschetz dimensions") {
    for (const auto conv : {BlowupConvention::flipped, BlowupConvention::geometric}) {
        CHECK(lefschetz_subalgebra(catalog::example1(conv).algebra).dims ==
              lefschetz_subalgebra(catalog::example1().algebra).dims);
        CHECK(lefschetz_subalgebra(catalog::example2(conv).algebra).dims ==
              lefschetz_subalgebra(catalog::example2().algebra).dims);
    }
}

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <functional>
#include <iostream>
#include <sstream>

#include "lefschetz/catalog.hpp"
#include "lefschetz/cli.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/schubert.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

using Dims = std::vector<std::size_t>;

struct Cli {
    int code;
    std::string out;
};

Cli cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

// Collects the reasons a criterion failed.
struct Check {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::string dims_str(const Dims& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return s;
}

Element E(const Algebra& a, const std::string& text) { return parse_element(a, text); }

Dims cli_dims(const std::string& command, const std::string& name) {
    std::istringstream in(cli({command, name}).out);
    Dims out;
    for (std::size_t x; in >> x;) out.push_back(x);
    return out;
}

void criterion1(Check& c) {
    const Dims l = cli_dims("lef-dims", "example1");
    c.expect(l == Dims{1, 2, 3, 4, 2, 1}, "lef-dims example1 = " + dims_str(l));
    c.expect(cli_dims("dims", "example1") == Dims{1, 2, 4, 4, 2, 1}, "ambient dims of example1");
    const Algebra x = catalog::example1().algebra;
    c.expect(oracle::monomial_span_dims(x, oracle::degree_one_basis(x)) == Dims{1, 2, 3, 4, 2, 1},
             "monomial-span oracle on example1");
}

void criterion2(Check& c) {
    const Dims l = cli_dims("lef-dims", "example2");
    const Dims h = cli_dims("dims", "example2");
    c.expect(l.size() == 7 && l[2] == 6 && l[4] == 7, "lef-dims example2 = " + dims_str(l));
    c.expect(h.size() == 7 && h[2] == 7 && h[4] == 7, "ambient dims example2 = " + dims_str(h));
}

void criterion3(Check& c) {
    const Dims l = cli_dims("lef-dims", "example3");
    const Dims h = cli_dims("dims", "example3");
    c.expect(l.size() == 9 && l[2] == 3 && l[6] == 4, "lef-dims example3 = " + dims_str(l));
    c.expect(h.size() == 9 && h[2] == 4 && h[6] == 4, "ambient dims example3 = " + dims_str(h));
    // L^6 = H^12: equal dimension inside H^12 means equal subspace.
    const auto data = lefschetz_subalgebra(catalog::example3().algebra);
    c.expect(data.bases[6].rows() == data.ambient->dim(6), "L^6 is a proper subspace of H^12");
}

void criterion4(Check& c) {
    const Algebra x = catalog::example3().algebra;
    const Element z4 = power(E(x, "z"), 4);
    c.expect(z4 == E(x, "s[3,1] + s[2,1]*z + s[1,1]*z^2"), "zeta^4 = " + to_string(z4));
    const Element s = power(E(x, "s[1]"), 2) * z4;
    c.expect(s == E(x, "s[3,3] + 2*s[3,2]*z + (s[2,2] + s[3,1])*z^2"), "s1^2 zeta^4 = " + to_string(s));
}

void criterion5(Check& c) {
    const Algebra x = catalog::example1().algebra;
    const Element e = E(x, "e");
    const Element cc = E(x, "c");
    const Element e3 = power(e, 3);
    c.expect(e3 == E(x, "-6*c^3 - 54*e^1*a*b + 4*e^2*a + 18*e^2*b"), "e^3 = " + to_string(e3));
    c.expect(cli({"mul", "example1", "e", "e^2"}).out == "-6*c^3 - 54*e^1*a*b + 4*e^2*a + 18*e^2*b\n",
             "mul example1 e e^2");
    std::vector<Vector> v{power(cc, 3).coords(), (cc * cc * e).coords(), (cc * e * e).coords()};
    const std::size_t before = oracle::rank_of(v);
    v.push_back(e3.coords());
    c.expect(oracle::rank_of(v) == before + 1, "e^3 lies in span(c^3, c^2 e, c e^2)");
}

void criterion6(Check& c) {
    for (const std::string name : {"example1", "example2", "example3"})
        for (const std::string flag : {"--sym", "--pd", "--hl"})
            c.expect(cli({"check", name, flag}).code == 1, "check " + name + " " + flag + " did not fail");
    std::vector<std::string> good{"Gr-2-5", "Gr-2-4", "P-3xP-3", "P-1xP-2"};
    for (int n = 0; n <= 6; ++n) good.push_back("P-" + std::to_string(n));
    for (const auto& name : good)
        for (const std::string flag : {"--sym", "--pd", "--hl"})
            c.expect(cli({"check", name, flag}).code == 0, "check " + name + " " + flag + " did not pass");
}

void criterion7(Check& c) {
    for (const auto& name : catalog::names()) {
        const Dims l = lefschetz_subalgebra(catalog::lookup(name).algebra).dims;
        const std::size_t d = l.size() - 1;
        c.expect(l[0] == 1 && l[d] == 1 && (d == 0 || l[1] == l[d - 1]), name + ": L = " + dims_str(l));
    }
}

void criterion8(Check& c) {
    int products = 0;
    for (const auto& name : catalog::names()) {
        if (name == "CxP1-even" || name == "P1xP1xP1") continue;
        // Split at an 'x' whose two sides are both catalog names.
        for (std::size_t x = name.find('x'); x != std::string::npos; x = name.find('x', x + 1)) {
            Dims la, lb;
            try {
                la = lefschetz_subalgebra(catalog::lookup(name.substr(0, x)).algebra).dims;
                lb = lefschetz_subalgebra(catalog::lookup(name.substr(x + 1)).algebra).dims;
            } catch (const catalog::UnknownName&) {
                continue;
            }
            const Dims lab = lefschetz_subalgebra(catalog::lookup(name).algebra).dims;
            c.expect(lab == oracle::convolve(la, lb), name + ": L = " + dims_str(lab));
            ++products;
            break;
        }
    }
    // (P^1)^3 and the even ring of C x P^1 are products of P^1's.
    const Dims p1 = lefschetz_subalgebra(projective_space(1)).dims;
    c.expect(lefschetz_subalgebra(catalog::p1_cubed()).dims == oracle::convolve(oracle::convolve(p1, p1), p1), "P1xP1xP1");
    c.expect(lefschetz_subalgebra(catalog::cubic_times_line_even()).dims == oracle::convolve(p1, p1), "CxP1-even");
    c.expect(products >= 4, "too few catalog products");
}

void criterion9(Check& c) {
    for (const auto& name : catalog::names()) {
        const Algebra a = catalog::lookup(name).algebra;
        const VerificationReport v = verify_algebra(*a);
        c.expect(v.passed(), name + ": " + (v.passed() ? "" : v.violations.front()));
        const Dims d = a->dims();
        c.expect(std::equal(d.begin(), d.end(), d.rbegin()), name + ": dims not palindromic");
    }
}

void criterion10(Check& c) {
    const schubert::Box box(2, 3);
    std::vector<schubert::Partition> all;
    for (int m = 0; m <= 6; ++m)
        for (const auto& p : schubert::partitions_in_box(box, m)) all.push_back(p);
    int pairs = 0;
    for (const auto& l : all)
        for (const auto& m : all) {
            const auto expected = oracle::pieri_product(l, m, 2, 3);
            for (const auto& nu : schubert::partitions_in_box(box, l.size() + m.size())) {
                const long want = expected.count(nu) ? expected.at(nu) : 0;
                c.expect(schubert::lr_coefficient(l, m, nu) == want, "LR " + l.str() + " " + m.str() + " " + nu.str());
            }
            ++pairs;
        }
    c.expect(pairs == 100, "expected 100 pairs");

    for (const auto& name : catalog::names()) {
        const Algebra a = catalog::lookup(name).algebra;
        c.expect(lefschetz_subalgebra(a).dims == oracle::monomial_span_dims(a, oracle::degree_one_basis(a)),
                 name + ": L differs from the monomial span");
    }
    c.expect(lefschetz_subalgebra(catalog::example1(BlowupConvention::flipped).algebra).dims ==
                 lefschetz_subalgebra(catalog::example1().algebra).dims,
             "e -> -e changes example1");
    c.expect(lefschetz_subalgebra(catalog::example2(BlowupConvention::flipped).algebra).dims ==
                 lefschetz_subalgebra(catalog::example2().algebra).dims,
             "e -> -e changes example2");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"example1: dim L^2 = 3, dim L^3 = 4, L = (1,2,3,4,2,1), H = (1,2,4,4,2,1)", criterion1},
        {"example2: dim L^2 = 6, dim L^4 = 7, dim H^4 = dim H^8 = 7", criterion2},
        {"example3: dim L^2 = 3, dim L^6 = 4 = dim H^12, dim H^4 = 4", criterion3},
        {"example3: zeta^4 and s1^2 zeta^4 expansions", criterion4},
        {"example1: e^3 reduction and e^3 outside span(c^3, c^2 e, c e^2)", criterion5},
        {"sym/pd/hl fail on example1-3 and pass on P-n, Gr-2-4, Gr-2-5, P-3xP-3, P-1xP-2", criterion6},
        {"dim L^0 = dim L^d = 1 and dim L^1 = dim L^{d-1} on the catalog", criterion7},
        {"L-dims of catalog products are convolutions of factor L-dims", criterion8},
        {"verify_algebra passes and dims are palindromic on the catalog", criterion9},
        {"LR = iterated Pieri on Gr(2,5); L = monomial span; e -> -e invariance", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.problems.empty();
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!ok) std::cout << " [" << c.problems.front() << (c.problems.size() > 1 ? ", ..." : "") << "]";
        std::cout << "\n";
    }
    return failures;
}

#include "lefschetz/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "lefschetz/build.hpp"
#include "lefschetz/catalog.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/report.hpp"

namespace lefschetz::cli {

namespace {

// Raised for bad input; reported on stderr with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read " + path.string());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// A catalog name, an algebra file, or a build file.
BuildResult load(const std::string& spec) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(spec)) {
        const std::string text = read_file(spec);
        const auto j = nlohmann::json::parse(text, nullptr, false);
        if (!j.is_discarded() && is_algebra_file(j)) return {read_algebra_string(text), std::nullopt};
        return evaluate(parse_build_file(text));
    }
    if (spec.ends_with(".json")) throw InputError("no such file: " + spec);
    const catalog::Entry e = catalog::lookup(spec);
    return {e.algebra, e.omega};
}

std::optional<std::vector<Element>> generators(const Algebra& a, const std::vector<std::string>& texts) {
    if (texts.empty()) return std::nullopt;
    std::vector<Element> out;
    for (const auto& t : texts) out.push_back(parse_element(a, t, 1));
    return out;
}

std::optional<Element> omega_for(const BuildResult& b, const std::string& text) {
    if (!text.empty()) {
        try {
            return parse_element(b.algebra, text, 1);
        } catch (const ExpressionError& e) {
            throw InputError(std::string("cannot parse omega \"") + text + "\": " + e.what());
        }
    }
    return b.omega;
}

class Painter {
public:
    explicit Painter(bool color) : color_(color) {}
    [[nodiscard]] std::string good(const std::string& s) const { return paint("32", s); }
    [[nodiscard]] std::string bad(const std::string& s) const { return paint("31", s); }

private:
    [[nodiscard]] std::string paint(const char* code, const std::string& s) const {
        return color_ ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
    }
    bool color_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    const Painter paint(color);
    CLI::App app{"Lefschetz subalgebras of even cohomology rings", "lefschetz"};
    app.require_subcommand(1);

    std::string alg, file, output, omega_text, left, right;
    std::vector<std::string> gens;
    bool sym = false, pd = false, hl = false, json = false;

    auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in algebras");
    auto* build_cmd = app.add_subcommand("build", "Evaluate a build file");
    build_cmd->add_option("file", file, "Build file (.build.json)")->required();
    build_cmd->add_option("-o,--output", output, "Write the algebra to this .alg.json file");
    auto* dims_cmd = app.add_subcommand("dims", "Ambient dimension per degree");
    dims_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    auto* lef_cmd = app.add_subcommand("lef-dims", "Dimension of L^k per degree");
    lef_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    lef_cmd->add_option("--gens", gens, "Degree-one generators (default: all of degree one)");
    auto* check_cmd = app.add_subcommand("check", "Check symmetry, Poincare duality or hard Lefschetz on L");
    check_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    check_cmd->add_flag("--sym", sym, "dim L^k = dim L^{d-k}");
    check_cmd->add_flag("--pd", pd, "perfect pairing L^k x L^{d-k} -> Q");
    check_cmd->add_flag("--hl", hl, "omega^{d-2k} : L^k -> L^{d-k} bijective");
    check_cmd->add_option("--omega", omega_text, "Degree-one class for --hl");
    check_cmd->add_option("--gens", gens, "Degree-one generators (default: all of degree one)");
    auto* mul_cmd = app.add_subcommand("mul", "Multiply two classes");
    mul_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    mul_cmd->add_option("x", left, "First class")->required();
    mul_cmd->add_option("y", right, "Second class")->required();
    auto* verify_cmd = app.add_subcommand("verify", "Check the ring axioms and Poincare duality of the ambient algebra");
    verify_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    auto* report_cmd = app.add_subcommand("report", "Dimensions and all verdicts");
    report_cmd->add_option("alg", alg, "Catalog name, algebra file or build file")->required();
    report_cmd->add_flag("--json", json, "Emit JSON");
    report_cmd->add_option("--omega", omega_text, "Degree-one class for hard Lefschetz");
    report_cmd->add_option("--gens", gens, "Degree-one generators (default: all of degree one)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*catalog_cmd) {
            for (const auto& name : catalog::names()) {
                const catalog::Entry e = catalog::lookup(name);
                out << std::left << std::setw(14) << name << " dims " << join_dims(e.algebra->dims()) << "  "
                    << e.description << "\n";
            }
            out << "Also accepted: P-n, Gr-k-n, and products such as P-2xGr-2-5.\n";
            return 0;
        }
        if (*build_cmd) {
            const BuildResult b = evaluate(parse_build_file(read_file(file)));
            out << b.algebra->name() << ": dims " << join_dims(b.algebra->dims()) << "\n";
            if (!output.empty()) {
                write_algebra(*b.algebra, output);
                out << "wrote " << output << "\n";
            }
            return 0;
        }

        const BuildResult b = load(alg);
        const Algebra& a = b.algebra;
        if (*dims_cmd) {
            out << join_dims(a->dims()) << "\n";
            return 0;
        }
        if (*lef_cmd) {
            out << join_dims(lefschetz_subalgebra(a, generators(a, gens)).dims) << "\n";
            return 0;
        }
        if (*mul_cmd) {
            out << to_string(parse_element(a, left) * parse_element(a, right)) << "\n";
            return 0;
        }
        if (*verify_cmd) {
            const VerificationReport v = verify_algebra(*a);
            if (v.passed()) {
                out << paint.good("ok") << ": " << a->name() << " is associative, commutative and unital with perfect pairings\n";
                return 0;
            }
            out << paint.bad("failed") << ": " << a->name() << "\n";
            for (const auto& line : v.violations) out << "  " << line << "\n";
            return 1;
        }
        if (*report_cmd) {
            const Report r = make_report(a, omega_for(b, omega_text), generators(a, gens));
            if (json) out << report_json(r).dump(2) << "\n";
            else out << report_text(r);
            return 0;
        }
        // check
        if (!sym && !pd && !hl) throw InputError("check needs at least one of --sym, --pd, --hl");
        const LefschetzData l = lefschetz_subalgebra(a, generators(a, gens));
        std::optional<Element> omega;
        if (hl) {
            omega = omega_for(b, omega_text);
            if (!omega) throw InputError("--hl needs --omega for " + a->name());
        }
        bool all = true;
        auto show = [&](const std::string& label, const PredicateVerdict& v) {
            if (v.holds()) {
                out << label << ": " << paint.good("holds") << "\n";
            } else {
                all = false;
                out << label << ": " << paint.bad("fails") << " (" << v.first_failure()->witness << ")\n";
            }
        };
        if (sym) show("symmetry", check_symmetry(l));
        if (pd) show("poincare duality", check_poincare_duality(l));
        if (hl) show("hard lefschetz", check_hard_lefschetz(l, *omega));
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lefschetz::cli

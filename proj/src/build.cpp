#include "lefschetz/build.hpp"

#include <set>

#include "lefschetz/catalog.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/schubert.hpp"

namespace lefschetz {

namespace {

using nlohmann::json;

[[noreturn]] void type_error(const std::string& path, const std::string& what) {
    throw BuildError(BuildError::Kind::type, "type error at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

int small_int(const json& j, const std::string& path, int lo, const std::string& what) {
    if (!j.is_number_integer()) type_error(path, what + " must be an integer");
    const long long v = j.get<long long>();
    if (v < lo || v > 1000) type_error(path, what + " must be between " + std::to_string(lo) + " and 1000, got " + std::to_string(v));
    return static_cast<int>(v);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!ok.count(key)) type_error(child(path, key), "unexpected key '" + key + "'");
    }
}

void require_key(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) type_error(path, std::string("missing key '") + key + "'");
}

// Chern entries are expression strings or coordinate arrays.
void check_class_list(const json& j, const std::string& path, std::size_t min_size) {
    if (!j.is_array() || j.size() < min_size) {
        type_error(path, "expected an array of at least " + std::to_string(min_size) + " classes");
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& c = j[i];
        if (c.is_string() || c.is_number_integer()) continue;
        if (c.is_array()) {
            for (std::size_t q = 0; q < c.size(); ++q)
                if (!c[q].is_string() && !c[q].is_number_integer())
                    type_error(child(child(path, i), q), "coordinates must be integers or rational strings");
            continue;
        }
        type_error(child(path, i), "a class is an expression string or an array of coordinates");
    }
}

BuildNode parse_node(const json& j, const std::string& path) {
    if (!j.is_object()) type_error(path, "expected a node object");
    static const std::set<std::string> kinds{"P", "Gr", "product", "proj_bundle", "blowup", "algebra", "catalog"};
    std::string kind;
    for (const auto& [key, value] : j.items()) {
        if (key == "name") continue;
        if (!kinds.count(key)) type_error(child(path, key), "unknown node kind '" + key + "'");
        if (!kind.empty()) type_error(path, "node has two kinds, '" + kind + "' and '" + key + "'");
        kind = key;
    }
    if (kind.empty()) type_error(path, "node has no kind (expected one of P, Gr, product, proj_bundle, blowup, algebra, catalog)");

    BuildNode node;
    node.path = path;
    if (j.contains("name")) {
        if (!j["name"].is_string() || j["name"].get<std::string>().empty()) type_error(child(path, "name"), "name must be a nonempty string");
        node.name = j["name"].get<std::string>();
    }
    const json& body = j[kind];
    const std::string here = child(path, kind);

    if (kind == "P") {
        node.kind = BuildNode::Kind::projective;
        if (body.is_object()) {
            only_keys(body, here, {"n", "var"});
            require_key(body, here, "n");
            node.n = small_int(body["n"], child(here, "n"), 0, "projective dimension");
            if (body.contains("var")) {
                if (!body["var"].is_string() || body["var"].get<std::string>().empty()) type_error(child(here, "var"), "var must be a nonempty string");
                node.variable = body["var"].get<std::string>();
            }
        } else {
            node.n = small_int(body, here, 0, "projective dimension");
        }
    } else if (kind == "Gr") {
        node.kind = BuildNode::Kind::grassmannian;
        if (!body.is_array() || body.size() != 2) type_error(here, "expected [k, n]");
        node.k = small_int(body[0], child(here, 0), 1, "k");
        node.n = small_int(body[1], child(here, 1), 1, "n");
        if (node.k >= node.n) type_error(here, "Gr(k, n) needs k < n");
    } else if (kind == "product") {
        node.kind = BuildNode::Kind::product;
        if (!body.is_array() || body.size() < 2) type_error(here, "expected an array of at least two nodes");
        for (std::size_t i = 0; i < body.size(); ++i) node.children.push_back(parse_node(body[i], child(here, i)));
    } else if (kind == "proj_bundle") {
        node.kind = BuildNode::Kind::projective_bundle;
        if (!body.is_object()) type_error(here, "expected {\"base\": node, \"chern\": [...]}");
        only_keys(body, here, {"base", "chern"});
        require_key(body, here, "base");
        require_key(body, here, "chern");
        node.children.push_back(parse_node(body["base"], child(here, "base")));
        check_class_list(body["chern"], child(here, "chern"), 1);
        node.data = body;
    } else if (kind == "blowup") {
        node.kind = BuildNode::Kind::blowup;
        if (!body.is_object()) type_error(here, "expected a blowup object");
        only_keys(body, here, {"Y", "Z", "pullback", "pullback_generators", "chern_N", "convention"});
        for (const char* key : {"Y", "Z", "chern_N"}) require_key(body, here, key);
        node.children.push_back(parse_node(body["Y"], child(here, "Y")));
        node.children.push_back(parse_node(body["Z"], child(here, "Z")));
        if (body.contains("pullback") == body.contains("pullback_generators")) {
            type_error(here, "give exactly one of 'pullback' and 'pullback_generators'");
        }
        if (body.contains("pullback")) {
            const json& p = body["pullback"];
            if (!p.is_array()) type_error(child(here, "pullback"), "expected one matrix per degree of Y");
            for (std::size_t k = 0; k < p.size(); ++k) {
                const std::string mp = child(child(here, "pullback"), k);
                if (!p[k].is_array()) type_error(mp, "a matrix is an array of rows");
                for (std::size_t r = 0; r < p[k].size(); ++r) {
                    if (!p[k][r].is_array()) type_error(child(mp, r), "a matrix row is an array");
                    for (std::size_t c = 0; c < p[k][r].size(); ++c)
                        if (!p[k][r][c].is_string() && !p[k][r][c].is_number_integer())
                            type_error(child(child(mp, r), c), "entries must be integers or rational strings");
                }
            }
        } else {
            const json& g = body["pullback_generators"];
            if (!g.is_object()) type_error(child(here, "pullback_generators"), "expected {\"<label>\": \"<expression>\"}");
            for (const auto& [label, expr] : g.items())
                if (!expr.is_string()) type_error(child(child(here, "pullback_generators"), label), "expected an expression string");
        }
        check_class_list(body["chern_N"], child(here, "chern_N"), 1);
        if (body["chern_N"].size() < 2) {
            type_error(child(here, "chern_N"), "the center must have codimension at least 2 (one Chern class per codimension)");
        }
        if (body.contains("convention")) {
            const json& c = body["convention"];
            if (!c.is_string() || (c != "standard" && c != "flipped" && c != "geometric")) {
                type_error(child(here, "convention"), "convention must be \"standard\", \"flipped\" or \"geometric\"");
            }
        }
        node.data = body;
    } else if (kind == "algebra") {
        node.kind = BuildNode::Kind::algebra;
        try {
            node.inline_algebra = algebra_from_json(body);
        } catch (const FormatError& e) {
            type_error(here, e.what());
        }
    } else {
        node.kind = BuildNode::Kind::catalog;
        if (!body.is_string()) type_error(here, "expected a catalog name");
        node.catalog_name = body.get<std::string>();
    }
    return node;
}

Rational coordinate(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        type_error(path, "malformed rational '" + j.get<std::string>() + "'");
    }
}

Element class_of_degree(const Algebra& a, const json& j, int degree, const std::string& path) {
    if (j.is_array()) {
        if (j.size() != a->dim(degree)) {
            type_error(path, "a degree " + std::to_string(degree) + " class of " + a->name() + " has " +
                                 std::to_string(a->dim(degree)) + " coordinates, got " + std::to_string(j.size()));
        }
        Vector v;
        for (std::size_t i = 0; i < j.size(); ++i) v.push_back(coordinate(j[i], child(path, i)));
        return Element(a, degree, v);
    }
    const std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    try {
        return parse_element(a, text, degree);
    } catch (const ExpressionError& e) {
        type_error(path, e.what());
    }
}

BlowupConvention convention_of(const json& body) {
    if (!body.contains("convention") || body["convention"] == "standard") return BlowupConvention::standard;
    return body["convention"] == "flipped" ? BlowupConvention::flipped : BlowupConvention::geometric;
}

Algebra named(const Algebra& a, const std::optional<std::string>& name) {
    return name ? GradedAlgebra::make(a->with_name(*name)) : a;
}

BuildResult eval(const BuildNode& node, const std::optional<std::string>& default_variable);

BuildResult eval_product(const BuildNode& node) {
    std::vector<Algebra> factors;
    std::optional<Vector> omega = Vector{};
    std::string name;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        const BuildResult r = eval(node.children[i], "h" + std::to_string(i + 1));
        factors.push_back(r.algebra);
        name += (i ? "x" : "") + r.algebra->name();
        if (omega && r.omega) omega->insert(omega->end(), r.omega->coords().begin(), r.omega->coords().end());
        else omega.reset();
    }
    const Algebra a = catalog::product_of(factors, node.name.value_or(name));
    if (omega && omega->size() != a->dim(1)) omega.reset();
    return {a, omega ? std::optional<Element>(Element(a, 1, *omega)) : std::nullopt};
}

RingMap pullback_of(const BuildNode& node, const Algebra& y, const Algebra& z) {
    const std::string here = child(node.path, "blowup");
    const json& body = node.data;
    if (body.contains("pullback_generators")) {
        const std::string gp = child(here, "pullback_generators");
        const json& g = body["pullback_generators"];
        Matrix m(z->dim(1), y->dim(1));
        for (std::size_t c = 0; c < y->dim(1); ++c) {
            const std::string& label = y->labels(1)[c];
            if (!g.contains(label)) type_error(gp, "missing the image of '" + label + "'");
            const Element image = class_of_degree(z, g[label], 1, child(gp, label));
            for (std::size_t r = 0; r < z->dim(1); ++r) m(r, c) = image.coords()[r];
        }
        for (const auto& [label, expr] : g.items()) {
            const auto where = y->find_label(label);
            if (!where || where->first != 1) type_error(child(gp, label), "'" + label + "' is not a degree-one class of " + y->name());
        }
        try {
            return ring_map_from_degree_one(y, z, m);
        } catch (const std::invalid_argument& e) {
            type_error(gp, e.what());
        }
    }
    const std::string pp = child(here, "pullback");
    const json& p = body["pullback"];
    if (p.size() != static_cast<std::size_t>(y->top_degree() + 1)) {
        type_error(pp, "expected " + std::to_string(y->top_degree() + 1) + " matrices (degrees 0.." +
                           std::to_string(y->top_degree()) + " of " + y->name() + "), got " + std::to_string(p.size()));
    }
    std::vector<Matrix> matrices;
    for (int k = 0; k <= y->top_degree(); ++k) {
        const std::string mp = child(pp, static_cast<std::size_t>(k));
        const json& rows = p[static_cast<std::size_t>(k)];
        if (rows.size() != z->dim(k)) {
            type_error(mp, "degree " + std::to_string(k) + " matrix needs " + std::to_string(z->dim(k)) + " rows, got " +
                               std::to_string(rows.size()));
        }
        Matrix m(z->dim(k), y->dim(k));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != y->dim(k)) {
                type_error(child(mp, r), "row needs " + std::to_string(y->dim(k)) + " entries, got " + std::to_string(rows[r].size()));
            }
            for (std::size_t c = 0; c < y->dim(k); ++c) m(r, c) = coordinate(rows[r][c], child(child(mp, r), c));
        }
        matrices.push_back(std::move(m));
    }
    return RingMap(y, z, std::move(matrices));
}

BuildResult eval(const BuildNode& node, const std::optional<std::string>& default_variable) {
    switch (node.kind) {
        case BuildNode::Kind::projective: {
            const std::string var = node.variable.value_or(default_variable.value_or("h"));
            const Algebra p = named(GradedAlgebra::make(projective_space(node.n, var)->with_name("P-" + std::to_string(node.n))), node.name);
            return {p, p->dim(1) ? Element::basis(p, 1, 0) : Element::zero(p, 1)};
        }
        case BuildNode::Kind::grassmannian: {
            const Algebra g = named(schubert::grassmannian(node.k, node.n), node.name);
            return {g, Element::named(g, "s[1]")};
        }
        case BuildNode::Kind::product:
            return eval_product(node);
        case BuildNode::Kind::catalog: {
            catalog::Entry e;
            try {
                e = catalog::lookup(node.catalog_name);
            } catch (const catalog::UnknownName& err) {
                type_error(child(node.path, "catalog"), err.what());
            }
            const Algebra a = named(e.algebra, node.name);
            std::optional<Element> omega;
            if (e.omega) omega = Element(a, 1, e.omega->coords());
            return {a, omega};
        }
        case BuildNode::Kind::algebra:
            return {named(node.inline_algebra, node.name), std::nullopt};
        case BuildNode::Kind::projective_bundle: {
            const Algebra base = eval(node.children[0], std::nullopt).algebra;
            const std::string cp = child(child(node.path, "proj_bundle"), "chern");
            const json& chern = node.data["chern"];
            std::vector<Element> c{Element::unit(base)};
            for (std::size_t i = 0; i < chern.size(); ++i)
                c.push_back(class_of_degree(base, chern[i], static_cast<int>(i + 1), child(cp, i)));
            try {
                return {projective_bundle(base, c, node.name.value_or("")), std::nullopt};
            } catch (const std::invalid_argument& e) {
                type_error(child(node.path, "proj_bundle"), e.what());
            }
        }
        case BuildNode::Kind::blowup: {
            const std::string here = child(node.path, "blowup");
            const Algebra y = eval(node.children[0], std::nullopt).algebra;
            const Algebra z = eval(node.children[1], std::nullopt).algebra;
            RingMap pullback = pullback_of(node, y, z);
            const json& chern = node.data["chern_N"];
            std::vector<Element> c;
            for (std::size_t i = 0; i < chern.size(); ++i)
                c.push_back(class_of_degree(z, chern[i], static_cast<int>(i + 1), child(child(here, "chern_N"), i)));
            BlowupInput in{y, z, std::move(pullback), static_cast<int>(chern.size()), std::move(c), convention_of(node.data),
                           node.name.value_or("blowup")};
            try {
                return {blowup(in), std::nullopt};
            } catch (const std::invalid_argument& e) {
                type_error(here, e.what());
            }
        }
    }
    type_error(node.path, "unhandled node");
}

}  // namespace

BuildNode parse_build_json(const json& j) { return parse_node(j, ""); }

BuildNode parse_build_file(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is the 1-based offset of the offending character.
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw BuildError(BuildError::Kind::syntax,
                         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
    }
    return parse_build_json(j);
}

BuildResult evaluate(const BuildNode& node) { return eval(node, std::nullopt); }

}  // namespace lefschetz

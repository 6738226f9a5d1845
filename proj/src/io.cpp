#include "lefschetz/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace lefschetz {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* format_tag = "lefschetz-algebra";

// FNV-1a, 64 bit, over the canonical (sorted-key) dump of the payload.
std::string checksum(const json& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

[[noreturn]] void malformed(const std::string& what) {
    throw FormatError(FormatError::Kind::malformed, "malformed algebra: " + what);
}

Rational rational_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) malformed(where + " must be a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw FormatError(FormatError::Kind::malformed_rational,
                          "malformed rational '" + j.get<std::string>() + "' in " + where);
    }
}

Vector rational_vector(const json& j, std::size_t size, const std::string& where) {
    if (!j.is_array() || j.size() != size) {
        malformed(where + " must be an array of " + std::to_string(size) + " rationals");
    }
    Vector v;
    for (std::size_t i = 0; i < size; ++i) v.push_back(rational_field(j[i], where));
    return v;
}

const json& field(const json& j, const char* key) {
    if (!j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

ordered_json strings(const Vector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

ordered_json algebra_to_json(const GradedAlgebra& a) {
    ordered_json j;
    j["name"] = a.name();
    j["top_degree"] = a.top_degree();
    j["basis"] = a.basis();
    ordered_json products = ordered_json::array();
    const int d = a.top_degree();
    for (int k1 = 0; k1 <= d; ++k1)
        for (int k2 = 0; k1 + k2 <= d; ++k2)
            for (std::size_t i = 0; i < a.dim(k1); ++i)
                for (std::size_t j2 = 0; j2 < a.dim(k2); ++j2) {
                    const Vector& c = a.structure_constants(k1, i, k2, j2);
                    if (is_zero(c)) continue;
                    products.push_back(ordered_json::array({k1, i, k2, j2, strings(c)}));
                }
    j["products"] = std::move(products);
    j["integration"] = strings(a.integration());
    return j;
}

Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) malformed("expected an object");
    const json& name = field(j, "name");
    if (!name.is_string()) malformed("'name' must be a string");
    const json& top = field(j, "top_degree");
    if (!top.is_number_integer() || top.get<long long>() < 0) malformed("'top_degree' must be a nonnegative integer");
    const int d = top.get<int>();

    const json& basis_json = field(j, "basis");
    if (!basis_json.is_array() || basis_json.size() != static_cast<std::size_t>(d + 1)) {
        malformed("'basis' must list one array of labels per degree 0.." + std::to_string(d));
    }
    std::vector<std::vector<std::string>> basis;
    for (const auto& degree : basis_json) {
        if (!degree.is_array()) malformed("'basis' entries must be arrays of labels");
        std::vector<std::string> labels;
        for (const auto& l : degree) {
            if (!l.is_string()) malformed("basis labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        basis.push_back(std::move(labels));
    }
    auto dim = [&](long long k) { return basis[static_cast<std::size_t>(k)].size(); };

    // Keyed by (k1, i, k2, j).
    std::map<std::tuple<int, std::size_t, int, std::size_t>, Vector> table;
    const json& products = field(j, "products");
    if (!products.is_array()) malformed("'products' must be an array");
    for (std::size_t n = 0; n < products.size(); ++n) {
        const json& p = products[n];
        const std::string where = "products[" + std::to_string(n) + "]";
        if (!p.is_array() || p.size() != 5) malformed(where + " must be [k1, i, k2, j, [coeffs]]");
        for (int q = 0; q < 4; ++q)
            if (!p[static_cast<std::size_t>(q)].is_number_integer() || p[static_cast<std::size_t>(q)].get<long long>() < 0)
                malformed(where + " indices must be nonnegative integers");
        const long long k1 = p[0].get<long long>(), i = p[1].get<long long>();
        const long long k2 = p[2].get<long long>(), jj = p[3].get<long long>();
        if (k1 + k2 > d || static_cast<std::size_t>(i) >= dim(k1) || static_cast<std::size_t>(jj) >= dim(k2)) {
            malformed(where + " is out of range");
        }
        table[{static_cast<int>(k1), static_cast<std::size_t>(i), static_cast<int>(k2), static_cast<std::size_t>(jj)}] =
            rational_vector(p[4], dim(k1 + k2), where);
    }

    const Vector integration = rational_vector(field(j, "integration"), dim(d), "'integration'");
    const ProductRule rule = [&](int k1, std::size_t i, int k2, std::size_t jj) {
        auto it = table.find({k1, i, k2, jj});
        return it == table.end() ? Vector(dim(k1 + k2)) : it->second;
    };
    try {
        // The rule reads `basis`, so it is copied rather than moved.
        return GradedAlgebra::make(name.get<std::string>(), basis, rule, integration);
    } catch (const std::invalid_argument& e) {
        malformed(e.what());
    }
}

bool is_algebra_file(const json& j) {
    return j.is_object() && j.contains("format") && j["format"] == format_tag;
}

std::string write_algebra_string(const GradedAlgebra& a) {
    ordered_json out;
    out["format"] = format_tag;
    out["version"] = algebra_format_version;
    const ordered_json body = algebra_to_json(a);
    for (const auto& [key, value] : body.items()) out[key] = value;
    out["checksum"] = checksum(json(out));
    return out.dump(1) + "\n";
}

Algebra read_algebra_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
    if (!is_algebra_file(j)) malformed("not a lefschetz algebra file");
    const json& version = field(j, "version");
    if (version != algebra_format_version) {
        throw FormatError(FormatError::Kind::version_mismatch, "unsupported algebra file version " + version.dump() +
                                                                   " (expected " +
                                                                   std::to_string(algebra_format_version) + ")");
    }
    const json& sum = field(j, "checksum");
    json payload = j;
    payload.erase("checksum");
    if (!sum.is_string() || sum.get<std::string>() != checksum(payload)) {
        throw FormatError(FormatError::Kind::checksum, "checksum mismatch: the file was modified or corrupted");
    }
    return algebra_from_json(j);
}

void write_algebra(const GradedAlgebra& a, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << write_algebra_string(a);
    if (!f) throw std::runtime_error("error writing " + path.string());
}

Algebra read_algebra(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << f.rdbuf();
    return read_algebra_string(s.str());
}

}  // namespace lefschetz

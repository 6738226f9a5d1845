#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lefschetz/constructors.hpp"

namespace lefschetz {

/// `syntax` errors carry a line and column; `type` errors name the JSON
/// pointer of the offending node.
class BuildError : public std::runtime_error {
public:
    enum class Kind { syntax, type };

    BuildError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// One node of a build file. Node shapes:
///
///   {"P": n}  or  {"P": {"n": n, "var": "h"}}
///   {"Gr": [k, n]}
///   {"product": [node, node, ...]}
///   {"proj_bundle": {"base": node, "chern": [c_1, ..., c_s]}}
///   {"blowup": {"Y": node, "Z": node,
///               "pullback": [matrix for degree 0, 1, ...]   or
///               "pullback_generators": {"<Y label>": "<Z expression>", ...},
///               "chern_N": [c_1, ..., c_r], "convention": "standard"}}
///   {"algebra": {inline algebra object}}
///   {"catalog": "name"}
///
/// Any node may also carry "name". Chern classes are expressions in the
/// base (or center) such as "s[1]" or coordinate arrays; numbers are JSON
/// integers or rational strings "p/q".
struct BuildNode {
    enum class Kind { projective, grassmannian, product, projective_bundle, blowup, algebra, catalog };

    Kind kind = Kind::projective;
    std::string path;  // JSON pointer within the file
    std::optional<std::string> name;
    int n = 0;
    int k = 0;
    std::optional<std::string> variable;
    std::string catalog_name;
    Algebra inline_algebra;
    std::vector<BuildNode> children;  // product factors; bundle base; blowup Y, Z
    nlohmann::json data;              // bundle or blowup parameters
};

/// Parses and structurally validates a build file. Throws BuildError.
BuildNode parse_build_file(std::string_view text);
BuildNode parse_build_json(const nlohmann::json& j);

struct BuildResult {
    Algebra algebra;
    /// A natural hyperplane-like class when one is known (P, Gr, catalog
    /// entries and products of those).
    std::optional<Element> omega;
};

/// Throws BuildError of kind `type` when the pieces do not fit together.
BuildResult evaluate(const BuildNode& node);

}  // namespace lefschetz

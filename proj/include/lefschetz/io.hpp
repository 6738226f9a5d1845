#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lefschetz/graded_algebra.hpp"

namespace lefschetz {

class FormatError : public std::runtime_error {
public:
    enum class Kind { malformed, version_mismatch, malformed_rational, checksum };

    FormatError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline constexpr int algebra_format_version = 1;

/// The algebra as a JSON object: name, top_degree, basis labels per
/// degree, the nonzero structure constants as [k1, i, k2, j, [coeffs]]
/// and the integration vector. Rationals are strings.
nlohmann::ordered_json algebra_to_json(const GradedAlgebra& a);

/// Inverse of algebra_to_json. Throws FormatError.
Algebra algebra_from_json(const nlohmann::json& j);

/// Versioned, checksummed file contents ending in a newline.
std::string write_algebra_string(const GradedAlgebra& a);
/// Throws FormatError.
Algebra read_algebra_string(const std::string& text);

void write_algebra(const GradedAlgebra& a, const std::filesystem::path& path);
Algebra read_algebra(const std::filesystem::path& path);

/// True if the parsed JSON looks like a file produced by write_algebra.
bool is_algebra_file(const nlohmann::json& j);

}  // namespace lefschetz

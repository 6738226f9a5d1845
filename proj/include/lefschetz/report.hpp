#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lefschetz/lefschetz.hpp"

namespace lefschetz {

struct Report {
    std::string name;
    int top_degree = 0;
    std::vector<std::size_t> ambient_dims;
    std::vector<std::size_t> lefschetz_dims;
    std::optional<Element> omega;
    PredicateVerdict symmetry;
    PredicateVerdict poincare_duality;
    std::optional<PredicateVerdict> hard_lefschetz;  // only with omega
    std::optional<PrimitiveDims> primitive;          // only with omega
    VerificationReport verification;
};

/// Throws std::invalid_argument if omega is given but does not lie in L^1.
Report make_report(const Algebra& a, const std::optional<Element>& omega,
                   const std::optional<std::vector<Element>>& generators = std::nullopt);

std::string report_text(const Report& r);
/// Rationals are written as strings.
nlohmann::ordered_json report_json(const Report& r);

/// "1 2 3 4 2 1"
std::string join_dims(const std::vector<std::size_t>& dims);

}  // namespace lefschetz

#include "lefschetz/report.hpp"

#include <sstream>

namespace lefschetz {

namespace {

using nlohmann::ordered_json;

ordered_json verdict_json(const PredicateVerdict& v) {
    ordered_json out;
    out["holds"] = v.holds();
    ordered_json degrees = ordered_json::array();
    for (const auto& d : v.degrees) {
        ordered_json e;
        e["k"] = d.degree;
        e["pass"] = d.pass;
        if (!d.pass) e["witness"] = d.witness;
        if (d.kernel_vector) {
            ordered_json coords = ordered_json::array();
            for (const auto& x : *d.kernel_vector) coords.push_back(x.str());
            e["kernel_vector"] = std::move(coords);
        }
        degrees.push_back(std::move(e));
    }
    out["degrees"] = std::move(degrees);
    return out;
}

void verdict_line(std::ostream& out, const std::string& label, const PredicateVerdict& v) {
    out << label << ": ";
    if (v.holds()) {
        out << "holds\n";
    } else {
        out << "fails (" << v.first_failure()->witness << ")\n";
    }
}

}  // namespace

std::string join_dims(const std::vector<std::size_t>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? " " : "") + std::to_string(dims[i]);
    return s;
}

Report make_report(const Algebra& a, const std::optional<Element>& omega,
                   const std::optional<std::vector<Element>>& generators) {
    const LefschetzData l = lefschetz_subalgebra(a, generators);
    Report r;
    r.name = a->name();
    r.top_degree = a->top_degree();
    r.ambient_dims = a->dims();
    r.lefschetz_dims = l.dims;
    r.omega = omega;
    r.symmetry = check_symmetry(l);
    r.poincare_duality = check_poincare_duality(l);
    if (omega) {
        r.hard_lefschetz = check_hard_lefschetz(l, *omega);
        r.primitive = primitive_dims(l, *omega);
    }
    r.verification = verify_algebra(*a);
    return r;
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    out << "algebra: " << r.name << " (top degree " << r.top_degree << ")\n";
    out << "ambient dims: " << join_dims(r.ambient_dims) << "\n";
    out << "lefschetz dims: " << join_dims(r.lefschetz_dims) << "\n";
    out << "verify: " << (r.verification.passed() ? "ok" : "failed") << "\n";
    for (const auto& v : r.verification.violations) out << "  " << v << "\n";
    verdict_line(out, "symmetry", r.symmetry);
    verdict_line(out, "poincare duality", r.poincare_duality);
    if (r.hard_lefschetz) {
        verdict_line(out, "hard lefschetz (omega = " + to_string(*r.omega) + ")", *r.hard_lefschetz);
        out << "primitive dims: " << join_dims(r.primitive->dims);
        if (!r.primitive->valid) out << " (no Lefschetz decomposition)";
        out << "\n";
    } else {
        out << "hard lefschetz: not checked (no omega)\n";
    }
    return out.str();
}

ordered_json report_json(const Report& r) {
    ordered_json out;
    out["name"] = r.name;
    out["top_degree"] = r.top_degree;
    out["ambient_dims"] = r.ambient_dims;
    out["lefschetz_dims"] = r.lefschetz_dims;
    out["omega"] = r.omega ? ordered_json(to_string(*r.omega)) : ordered_json(nullptr);
    ordered_json verdicts;
    verdicts["symmetry"] = verdict_json(r.symmetry);
    verdicts["poincare_duality"] = verdict_json(r.poincare_duality);
    verdicts["hard_lefschetz"] = r.hard_lefschetz ? verdict_json(*r.hard_lefschetz) : ordered_json(nullptr);
    out["verdicts"] = std::move(verdicts);
    if (r.primitive) {
        out["primitive_dims"] = {{"dims", r.primitive->dims}, {"valid", r.primitive->valid}};
    } else {
        out["primitive_dims"] = nullptr;
    }
    out["verify"] = {{"passed", r.verification.passed()}, {"violations", r.verification.violations}};
    return out;
}

}  // namespace lefschetz

#pragma once

// JSON renderings of solver and diagnostic results. Key order is fixed and every
// number is exact, so identical inputs give byte-identical documents.

#include "ahodge/model_io.hpp"
#include "ahodge/solver.hpp"
#include "ahodge/validate.hpp"

namespace ahodge {

using ojson = nlohmann::ordered_json;

inline ojson forms_json(const std::vector<Form>& forms, int dims) {
    ojson a = ojson::array();
    for (const auto& f : forms) a.push_back(format_form(f, dims));
    return a;
}

inline ojson to_json(const SolveReport& r, bool timing = false) {
    ojson j;
    j["model"] = r.model;
    j["delta"] = format_rational(r.delta);
    if (r.bidegree)
        j["bidegree"] = {r.bidegree->first, r.bidegree->second};
    else
        j["bidegree"] = nullptr;
    j["system"] = std::string(to_string(r.system));
    j["box"] = r.box;
    j["margin"] = r.margin;
    j["dimension"] = r.dimension;
    j["cover_dimension"] = r.cover_dimension;
    j["certification"] = std::string(to_string(r.certification));
    j["shell_kernel_dimension"] = r.shell_kernel_dimension;
    j["sector"] = r.sector;
    j["basis"] = forms_json(r.basis, r.dims);
    if (timing) j["elapsed_ms"] = static_cast<long>(r.elapsed_ms + 0.5);
    return j;
}

inline std::string relation_text(Relation rel, std::string_view a, std::string_view b) {
    switch (rel) {
        case Relation::equal: return "equal";
        case Relation::a_in_b: return std::string(a) + " ⊊ " + std::string(b);
        case Relation::b_in_a: return std::string(b) + " ⊊ " + std::string(a);
        case Relation::incomparable: return "incomparable";
    }
    return "?";
}

inline ojson to_json(const CompareReport& c, bool timing = false) {
    ojson j;
    j["relation"] = relation_text(c.span.relation, to_string(c.a.system), to_string(c.b.system));
    j["dim_a"] = c.span.dim_a;
    j["dim_b"] = c.span.dim_b;
    j["dim_sum"] = c.span.dim_sum;
    j["witness"] = c.span.witness ? ojson(format_form(*c.span.witness, c.a.dims)) : ojson(nullptr);
    j["a"] = to_json(c.a, timing);
    j["b"] = to_json(c.b, timing);
    return j;
}

inline ojson to_json(const ValidationReport& v) {
    ojson j;
    j["passed"] = v.passed();
    ojson checks = ojson::array();
    for (const auto& c : v.checks) {
        ojson e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["cases"] = c.cases;
        if (!c.passed) {
            e["detail"] = c.detail;
            e["witness"] = c.witness;
        }
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

inline ojson to_json(const EllipticityReport& r) {
    ojson j;
    j["operator"] = std::string(to_string(r.kind));
    j["samples"] = r.samples;
    j["skipped_zero"] = r.skipped_zero;
    j["singular"] = r.singular;
    j["all_invertible"] = r.all_invertible;
    j["failures"] = r.failures;
    if (r.L_checked) {
        j["L_sign"] = r.L_sign;
        j["L_min_ratio"] = format_rational(r.L_min_ratio);
        j["L_definite"] = r.L_definite;
    }
    return j;
}

inline ojson to_json(const CircleCount& c, const Rational& delta) {
    ojson j;
    j["delta"] = format_rational(delta);
    j["count"] = c.count;
    ojson pts = ojson::array();
    for (auto [l, m] : c.points) pts.push_back({l, m});
    j["points"] = pts;
    return j;
}

}  // namespace ahodge

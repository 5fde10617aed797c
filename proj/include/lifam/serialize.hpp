#pragma once

// JSON views of library results.  Every converter returns an nlohmann::json
// value with a fixed key set so downstream consumers can rely on the shape:
//
//   search result: {"problem": {...}, "optimum": N, "witness": [...],
//                   "bounds": [{"theorem", "value", "applies", "strict"}, ...],
//                   "nodes": N, "completed": bool}
//
// Arbitrary-precision integers are serialized as decimal strings, rationals
// as "p/q" strings, so no precision is lost crossing the JSON boundary.

#include <string>
#include <vector>

#include <json.hpp>

#include "lifam/bounds.hpp"
#include "lifam/qspace.hpp"
#include "lifam/search.hpp"
#include "lifam/setfamily.hpp"

namespace lifam::serialize {

using nlohmann::json;

inline std::string decimal(const Natural& v) { return v.str(); }

inline std::string rational_string(const Rational& v) {
    Natural num = boost::multiprecision::numerator(v);
    Natural den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// --- family views ----------------------------------------------------------

inline json family_json(const setfamily::SubsetFamily& f) {
    json arr = json::array();
    for (setfamily::Subset m : f.members())
        arr.push_back(setfamily::elements(m));
    return arr;
}

inline json family_json(const qspace::SubspaceFamily& f) {
    json arr = json::array();
    for (const qspace::Subspace& sp : f.members()) {
        json rows = json::array();
        for (const qspace::Vec& row : sp.rows()) {
            std::string digits;
            digits.reserve(row.size());
            for (std::uint8_t e : row) digits.push_back(char('0' + e));
            rows.push_back(digits);
        }
        arr.push_back(rows);
    }
    return arr;
}

// --- problem description ---------------------------------------------------

inline json spec_json(const setfamily::IntersectionSpec& spec) {
    json j;
    j["L"] = spec.lset;
    if (spec.kset)
        j["K"] = *spec.kset;
    else
        j["K"] = nullptr;
    j["t"] = spec.t;
    j["mode"] = setfamily::mode_name(spec.mode);
    j["size_rule"] = setfamily::size_rule_name(spec.size_rule);
    return j;
}

inline json problem_json(bool subspaces, unsigned n, unsigned q,
                         const setfamily::IntersectionSpec& spec, bool sperner) {
    json j;
    j["universe"] = subspaces ? "subspaces" : "sets";
    j["n"] = n;
    if (subspaces) j["q"] = q;
    j["sperner"] = sperner;
    j.update(spec_json(spec));
    return j;
}

inline json problem_json(const search::SearchProblem& p) {
    return problem_json(p.subspaces, p.n, p.q, p.spec, p.sperner);
}

// --- bound rows -------------------------------------------------------------

inline json bound_row_json(const bounds::BoundReport& r) {
    json j;
    j["theorem"] = r.id();
    j["value"] = decimal(r.value);
    j["applies"] = r.hypotheses_met;
    j["strict"] = r.strict;
    return j;
}

inline json bound_rows_json(const std::vector<bounds::BoundReport>& rows) {
    json arr = json::array();
    for (const bounds::BoundReport& r : rows) arr.push_back(bound_row_json(r));
    return arr;
}

// --- search result -----------------------------------------------------------

inline json result_json(const search::SearchProblem& p, const search::SearchResult& r) {
    json j;
    j["problem"] = problem_json(p);
    j["optimum"] = r.optimum;
    if (r.witness_sets)
        j["witness"] = family_json(*r.witness_sets);
    else if (r.witness_subspaces)
        j["witness"] = family_json(*r.witness_subspaces);
    else
        j["witness"] = json::array();
    j["bounds"] = bound_rows_json(r.bound_reports);
    j["nodes"] = r.nodes_explored;
    j["completed"] = r.completed;
    return j;
}

// --- bound conformance --------------------------------------------------------

inline json conformance_json(const search::ConformanceReport& c) {
    json j;
    j["size_checked"] = c.size_checked;
    j["completed"] = c.completed;
    json rows = json::array();
    for (const search::BoundConformance& e : c.entries) {
        json row = bound_row_json(e.report);
        row["respected"] = e.respected;
        row["tight"] = e.tight;
        rows.push_back(row);
    }
    j["bounds"] = rows;
    j["violations"] = c.violation_count;
    return j;
}

}  // namespace lifam::serialize

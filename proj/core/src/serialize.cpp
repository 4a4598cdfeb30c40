#include "tdc/serialize.hpp"

#include <json.hpp>

namespace tdc {

namespace {

using nlohmann::json;

json coloring_json(const Coloring& c) {
    json j;
    j["k"] = c.k();
    j["assignment"] = c.assignment();
    return j;
}

json classes_json(const Coloring& c) {
    auto arr = json::array();
    for (int i = 1; i <= c.k(); ++i) arr.push_back(c.class_of(i).to_vector());
    return arr;
}

} // namespace

std::string to_json(const Coloring& c) { return coloring_json(c).dump(); }

std::string to_json(const TreeProfile& p) {
    json j;
    j["leaves"] = p.leaves.to_vector();
    j["supports"] = p.supports.to_vector();
    auto sigma = json::array();
    for (int v = 0; v < static_cast<int>(p.sigma.size()); ++v)
        if (p.sigma[static_cast<std::size_t>(v)] != -1)
            sigma.push_back({v, p.sigma[static_cast<std::size_t>(v)]});
    j["sigma"] = sigma;
    j["leaf_count"] = p.leaf_count;
    j["support_count"] = p.support_count;
    j["diameter"] = p.diameter;
    j["radius"] = p.radius;
    if (p.center_is_edge)
        j["center"] = {{"kind", "edge"}, {"vertices", {p.center[0], p.center[1]}}};
    else
        j["center"] = {{"kind", "vertex"}, {"vertices", {p.center[0]}}};
    return j.dump();
}

std::string to_json(const DominationResult& r) {
    json j;
    j["kind"] = r.kind == DominationKind::TotalDomination ? "total_domination" : "domination";
    j["value"] = r.value;
    j["witnesses"] = r.witnesses;
    return j.dump();
}

std::string to_json(const SolveReport& r, const std::string& invariant) {
    json j;
    j["invariant"] = invariant;
    if (r.value) j["value"] = *r.value;
    if (r.witness) {
        j["witness"] = coloring_json(*r.witness);
        j["classes"] = classes_json(*r.witness);
    }
    j["lower_bound"] = r.lower_bound_used;
    j["upper_bound"] = r.upper_bound_used;
    j["nodes"] = r.nodes_explored;
    j["budget_exhausted"] = r.budget_exhausted;
    return j.dump();
}

std::string to_json(const BoundsRecord& r) {
    json j;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
    };
    put("obs_lb", r.obs_lb);
    put("components_lb", r.components_lb);
    put("components_ub", r.components_ub);
    put("alpha0_ub", r.alpha0_ub);
    put("gamma_t_chi_ub", r.gamma_t_chi_ub);
    put("partite_ub", r.partite_ub);
    put("partite_corollary_ub", r.partite_corollary_ub);
    put("universal_value", r.universal_value);
    put("exact_value", r.exact_value);

    json certs;
    certs["gamma_t"] = r.gamma_t;
    certs["gamma_t_set"] = r.gamma_t_set;
    if (r.chi_d) certs["chi_d"] = *r.chi_d;
    if (r.dc_witness) certs["dc_witness"] = coloring_json(*r.dc_witness);
    if (r.alpha0_set) certs["alpha0_set"] = *r.alpha0_set;
    if (r.alpha0_witness) certs["alpha0_witness"] = coloring_json(*r.alpha0_witness);
    if (r.gamma_t_chi_set) certs["gamma_t_chi_set"] = *r.gamma_t_chi_set;
    if (r.gamma_t_chi_witness)
        certs["gamma_t_chi_witness"] = coloring_json(*r.gamma_t_chi_witness);
    if (r.partite_parts) certs["partite_parts"] = *r.partite_parts;
    if (r.partite_witness) certs["partite_witness"] = coloring_json(*r.partite_witness);
    if (r.universal_witness) certs["universal_witness"] = coloring_json(*r.universal_witness);
    if (!r.component_values.empty()) certs["component_values"] = r.component_values;
    if (r.exact_witness) certs["exact_witness"] = coloring_json(*r.exact_witness);
    j["certificates"] = certs;
    return j.dump();
}

std::string to_json(const VerificationReport& r) {
    json rows = json::array();
    int mismatches = 0;
    for (const auto& row : r.rows) {
        rows.push_back({{"instance", row.instance},
                        {"formula", row.formula_value},
                        {"exact", row.exact_value},
                        {"match", row.match}});
        if (!row.match) ++mismatches;
    }
    json j;
    j["rows"] = rows;
    j["total"] = r.rows.size();
    j["mismatches"] = mismatches;
    return j.dump();
}

std::string to_json(const std::vector<ComparisonRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"path", r.path_value},
                       {"cycle", r.cycle_value},
                       {"wheel", r.wheel_value},
                       {"path_vs_cycle", r.path_vs_cycle},
                       {"wheel_vs_cycle", r.wheel_vs_cycle},
                       {"expected_path_vs_cycle", r.expected_path_vs_cycle},
                       {"expected_wheel_vs_cycle", r.expected_wheel_vs_cycle},
                       {"match", r.match},
                       {"erratum", r.erratum}});
    }
    json j;
    j["comparisons"] = arr;
    return j.dump();
}

std::string to_json(const ReductionCheck& r) {
    json j;
    j["chi"] = r.chi;
    if (r.tdc_of_reduced) j["tdc_of_reduced"] = *r.tdc_of_reduced;
    if (r.holds) j["holds"] = *r.holds;
    j["inconclusive"] = r.inconclusive();
    j["universal_singleton"] = r.universal_singleton;
    if (r.extracted) j["extracted_coloring"] = coloring_json(*r.extracted);
    j["extracted_valid"] = r.extracted_valid;
    return j.dump();
}

} // namespace tdc

#include "pdeg/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "pdeg/families.hpp"

using nlohmann::json;

namespace pdeg {

namespace {

json ratio_json(const Ratio& r) {
    return json{{"num", r.num_string()}, {"den", r.den_string()}};
}

json ratio_json_with_approx(const Ratio& r) {
    json j = ratio_json(r);
    j["approx"] = r.approx();
    return j;
}

} // namespace

ComputeResult compute_report(const std::string& spec_text, const ComputeOptions& options) {
    auto start = std::chrono::steady_clock::now();
    GroupSpec spec = parse_spec(spec_text);
    FiniteGroup group = build_group(spec, options.order_cap);

    ComputeResult result;
    result.analysis.description = spec.text;
    result.analysis.group = std::make_shared<FiniteGroup>(std::move(group));
    const FiniteGroup& g = *result.analysis.group;

    bool cache_hit = false;
    auto cached = load_cached_lattice(g, options.cache, &result.warning);
    if (cached) {
        result.analysis.lattice = std::move(*cached);
        result.analysis.lattice.group = &g;
        cache_hit = true;
    } else {
        result.analysis.lattice = enumerate_subgroups(g, options.lattice_cap);
        store_cached_lattice(g, result.analysis.lattice, options.cache, spec.text);
    }
    result.analysis.profile = compute_profile(g, result.analysis.lattice, options.jobs);

    DegreeReport& r = result.report;
    r.spec = spec.text;
    r.order = g.order();
    r.lattice_size = result.analysis.lattice.size();
    r.d = g.commutativity_degree();
    r.sd = subgroup_commutativity_degree(result.analysis.lattice, options.jobs);
    r.pd = result.analysis.profile.pd;
    r.center_order = g.center().count();
    r.norm_order = result.analysis.profile.norm.count();
    r.quasicenter_order = result.analysis.profile.quasicenter.count();
    r.hyperquasicenter_order = result.analysis.profile.hyperquasicenter.count();
    r.p_subgroup_order = result.analysis.profile.p_subgroup.count();
    r.is_p_group = result.analysis.profile.is_p_group;
    r.quasihamiltonian = result.analysis.profile.quasihamiltonian;
    r.cache_hit = cache_hit;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return result;
}

std::string render_text(const DegreeReport& r, bool with_timing) {
    std::ostringstream out;
    out << "group             " << r.spec << "\n"
        << "order             " << r.order << "\n"
        << "lattice size      " << r.lattice_size << "\n"
        << "d                 " << r.d.str() << "  (~" << r.d.approx() << ")\n"
        << "sd                " << r.sd.str() << "  (~" << r.sd.approx() << ")\n"
        << "pd                " << r.pd.str() << "  (~" << r.pd.approx() << ")\n"
        << "|Z(G)|            " << r.center_order << "\n"
        << "|N(G)|            " << r.norm_order << "\n"
        << "|Q(G)|            " << r.quasicenter_order << "\n"
        << "|Q_inf(G)|        " << r.hyperquasicenter_order << "\n"
        << "|P(G)|            " << r.p_subgroup_order << "\n"
        << "P-group           " << (r.is_p_group ? "yes" : "no") << "\n"
        << "quasihamiltonian  " << (r.quasihamiltonian ? "yes" : "no") << "\n";
    if (with_timing)
        out << "elapsed ms        " << r.elapsed_ms << (r.cache_hit ? " (cache hit)" : "") << "\n";
    return out.str();
}

std::string render_json(const DegreeReport& r, bool with_timing) {
    json j{{"spec", r.spec},
           {"order", r.order},
           {"lattice_size", r.lattice_size},
           {"d", ratio_json_with_approx(r.d)},
           {"sd", ratio_json_with_approx(r.sd)},
           {"pd", ratio_json_with_approx(r.pd)},
           {"center_order", r.center_order},
           {"norm_order", r.norm_order},
           {"quasicenter_order", r.quasicenter_order},
           {"hyperquasicenter_order", r.hyperquasicenter_order},
           {"p_subgroup_order", r.p_subgroup_order},
           {"is_p_group", r.is_p_group},
           {"quasihamiltonian", r.quasihamiltonian}};
    if (with_timing) {
        j["elapsed_ms"] = r.elapsed_ms;
        j["cache_hit"] = r.cache_hit;
    }
    return j.dump(2) + "\n";
}

std::string render_csv_header() {
    return "spec,order,lattice_size,d,sd,pd,center_order,norm_order,quasicenter_order,"
           "hyperquasicenter_order,p_subgroup_order,is_p_group,quasihamiltonian\n";
}

std::string render_csv_row(const DegreeReport& r) {
    std::ostringstream out;
    out << r.spec << "," << r.order << "," << r.lattice_size << "," << r.d.str() << ","
        << r.sd.str() << "," << r.pd.str() << "," << r.center_order << "," << r.norm_order
        << "," << r.quasicenter_order << "," << r.hyperquasicenter_order << ","
        << r.p_subgroup_order << "," << (r.is_p_group ? "true" : "false") << ","
        << (r.quasihamiltonian ? "true" : "false") << "\n";
    return out.str();
}

std::string render_profile_json(const GroupAnalysis& a) {
    json subgroups = json::array();
    for (int i = 0; i < a.lattice.size(); ++i) {
        subgroups.push_back(json{
            {"subgroup", a.lattice.subgroups[size_t(i)].hex()},
            {"order", a.lattice.subgroups[size_t(i)].count()},
            {"permutizer", a.profile.permutizers[size_t(i)].hex()},
            {"permutizer_order", a.profile.permutizers[size_t(i)].count()},
        });
    }
    json j{{"spec", a.description},
           {"order", a.group->order()},
           {"subgroups", subgroups},
           {"p_subgroup", json{{"pattern", a.profile.p_subgroup.hex()},
                               {"order", a.profile.p_subgroup.count()}}},
           {"norm", json{{"pattern", a.profile.norm.hex()}, {"order", a.profile.norm.count()}}},
           {"quasicenter", json{{"pattern", a.profile.quasicenter.hex()},
                                {"order", a.profile.quasicenter.count()}}},
           {"hyperquasicenter", json{{"pattern", a.profile.hyperquasicenter.hex()},
                                     {"order", a.profile.hyperquasicenter.count()}}},
           {"pd", ratio_json(a.profile.pd)}};
    return j.dump(2) + "\n";
}

std::string render_verdict_json(const TheoremVerdict& v) {
    json j{{"theorem", theorem_id_name(v.theorem_id)},
           {"group", v.group_description},
           {"hypotheses_hold", v.hypotheses_hold},
           {"lhs", ratio_json(v.lhs)},
           {"rhs", ratio_json(v.rhs)},
           {"passed", v.passed}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j.dump() + "\n";
}

std::string render_sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "theorem,group,hypotheses_hold,passed,lhs,rhs,witness\n";
    for (const auto& v : result.verdicts) {
        std::string witness = v.witness;
        std::string group = v.group_description;
        for (char& c : witness)
            if (c == ',') c = ';';
        for (char& c : group)
            if (c == ',') c = ';';
        out << theorem_id_name(v.theorem_id) << "," << group << ","
            << (v.hypotheses_hold ? "true" : "false") << "," << (v.passed ? "true" : "false")
            << "," << v.lhs.str() << "," << v.rhs.str() << "," << witness << "\n";
    }
    return out.str();
}

std::string render_sweep_text(const SweepResult& result) {
    std::ostringstream out;
    for (const auto& s : result.summaries)
        out << theorem_id_name(s.theorem_id) << ": applicable=" << s.applicable
            << " passed=" << s.passed << " vacuous=" << s.vacuous << " failed=" << s.failed
            << "\n";
    for (const auto& v : result.verdicts)
        if (!v.vacuous() && !v.passed)
            out << "FAILED " << theorem_id_name(v.theorem_id) << " on " << v.group_description
                << " lhs=" << v.lhs.str() << " rhs=" << v.rhs.str() << " " << v.witness << "\n";
    return out.str();
}

} // namespace pdeg

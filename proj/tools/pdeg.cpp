#include <CLI11.hpp>

#include <iostream>

#include "pdeg/errors.hpp"
#include "pdeg/families.hpp"
#include "pdeg/parallel.hpp"
#include "pdeg/report.hpp"

using namespace pdeg;

namespace {

int error_exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::CacheError: return 3;
        default: return 2;
    }
}

struct CommonOptions {
    std::string format = "text";
    int jobs = default_jobs();
    std::string cache_dir = default_cache_dir();
    bool no_cache = false;
    bool trust_cache = false;
    bool timing = false;
    int max_order = kDefaultOrderCap;
    int max_lattice = kDefaultLatticeCap;

    ComputeOptions compute_options() const {
        ComputeOptions options;
        options.cache.directory = no_cache ? "" : cache_dir;
        options.cache.trust = trust_cache;
        options.jobs = jobs;
        options.order_cap = max_order;
        options.lattice_cap = max_lattice;
        return options;
    }
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", opts.cache_dir, "Lattice cache directory");
    cmd->add_flag("--no-cache", opts.no_cache, "Disable the lattice cache");
    cmd->add_flag("--trust-cache", opts.trust_cache, "Skip revalidation of cached lattices");
    cmd->add_flag("--timing", opts.timing, "Include wall-clock timing in the output");
    cmd->add_option("--max-order", opts.max_order, "Group order cap");
    cmd->add_option("--max-lattice", opts.max_lattice, "Subgroup count cap");
}

int run_compute(const std::string& spec, const CommonOptions& opts, bool profile) {
    ComputeResult result = compute_report(spec, opts.compute_options());
    if (!result.warning.empty()) std::cerr << "warning: " << result.warning << "\n";
    if (profile) {
        std::cout << render_profile_json(result.analysis);
        return 0;
    }
    if (opts.format == "json") std::cout << render_json(result.report, opts.timing);
    else if (opts.format == "csv")
        std::cout << render_csv_header() << render_csv_row(result.report);
    else std::cout << render_text(result.report, opts.timing);
    return 0;
}

int run_verify(const std::vector<std::string>& selectors, const std::string& corpus_name,
               int max_n, const CommonOptions& opts) {
    std::vector<TheoremId> selection;
    for (const auto& name : selectors) {
        if (name == "all") {
            selection = all_theorem_ids();
            break;
        }
        if (name == "T5_1") {
            selection.push_back(TheoremId::T5_1_lower);
            selection.push_back(TheoremId::T5_1_upper);
            continue;
        }
        auto id = theorem_id_from_name(name);
        if (!id) throw CLI::ValidationError("unknown theorem selector: " + name);
        selection.push_back(*id);
    }
    if (selection.empty()) selection = all_theorem_ids();

    bool needs_corpus = false;
    for (TheoremId id : selection)
        if (id != TheoremId::P6_1 && id != TheoremId::ERRATA_D8 && id != TheoremId::L_FORMULA &&
            id != TheoremId::P4_2)
            needs_corpus = true;

    std::vector<GroupAnalysis> corpus;
    if (needs_corpus) corpus = standard_corpus(corpus_name == "quick", opts.jobs);
    SweepResult result = run_sweep(selection, corpus, opts.jobs, max_n);

    if (opts.format == "csv") std::cout << render_sweep_csv(result);
    else if (opts.format == "json")
        for (const auto& v : result.verdicts) std::cout << render_verdict_json(v);
    else std::cout << render_sweep_text(result);
    return result.ok() ? 0 : 1;
}

int run_table(const std::string& preset, int max_n, const CommonOptions& opts) {
    std::vector<std::string> specs;
    if (preset == "open-questions") {
        specs = {"Q:16", "Q:32", "SD:16", "S:4", "S:5", "A:5"};
    } else if (preset == "dihedral") {
        for (int n = 2; n <= max_n; ++n) specs.push_back("D:" + std::to_string(2 * n));
    } else if (preset == "fixtures") {
        specs = {"S:3", "D:8"};
    } else {
        throw CLI::ValidationError("unknown preset: " + preset);
    }

    std::vector<DegreeReport> rows;
    for (const auto& spec : specs)
        rows.push_back(compute_report(spec, opts.compute_options()).report);

    if (opts.format == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            std::string row = render_json(rows[i], false);
            row.pop_back(); // newline
            std::cout << row << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
    } else {
        std::cout << render_csv_header();
        for (const auto& row : rows) std::cout << render_csv_row(row);
    }
    return 0;
}

int run_cache(const std::string& action, const CommonOptions& opts) {
    if (action == "list") {
        for (const auto& entry : list_cache(opts.cache_dir))
            std::cout << entry.hash << "  order=" << entry.order
                      << "  lattice=" << entry.lattice_size
                      << (entry.spec.empty() ? "" : "  spec=" + entry.spec) << "\n";
        return 0;
    }
    if (action == "clear") {
        std::cout << "removed " << clear_cache(opts.cache_dir) << " entries\n";
        return 0;
    }
    throw CLI::ValidationError("unknown cache action: " + action);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permutability/commutativity degree computations for finite groups"};
    app.require_subcommand(1);

    CommonOptions opts;

    std::string compute_spec;
    bool compute_profile_flag = false;
    auto* compute = app.add_subcommand("compute", "Compute invariants for a group spec");
    compute->add_option("spec", compute_spec, "Group spec, e.g. D:8 or C:2xC:4")->required();
    compute->add_flag("--profile", compute_profile_flag, "Emit the per-subgroup permutizer table");
    add_common_flags(compute, opts);

    std::vector<std::string> verify_selectors;
    std::string corpus_name = "standard";
    int verify_max_n = 100;
    auto* verify = app.add_subcommand("verify", "Run theorem sweeps over the corpus");
    verify->add_option("theorems", verify_selectors, "Theorem ids (default: all)");
    verify->add_option("--corpus", corpus_name, "Corpus selector")
        ->check(CLI::IsMember({"standard", "quick"}));
    verify->add_option("--max-n", verify_max_n, "Upper n for the dihedral lattice-size sweep");
    add_common_flags(verify, opts);

    std::string table_preset;
    int table_max_n = 20;
    auto* table = app.add_subcommand("table", "Emit a preset table");
    table->add_option("preset", table_preset, "open-questions, dihedral or fixtures")->required();
    table->add_option("--max-n", table_max_n, "Upper n for the dihedral preset");
    add_common_flags(table, opts);

    std::string cache_action;
    auto* cache = app.add_subcommand("cache", "Manage the lattice cache");
    cache->add_option("action", cache_action, "list or clear")->required();
    add_common_flags(cache, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(compute_spec, opts, compute_profile_flag);
        if (*verify) return run_verify(verify_selectors, corpus_name, verify_max_n, opts);
        if (*table) return run_table(table_preset, table_max_n, opts);
        if (*cache) return run_cache(cache_action, opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

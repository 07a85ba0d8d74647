#pragma once

#include <string>

#include "pdeg/io.hpp"
#include "pdeg/permutizer.hpp"
#include "pdeg/theorems.hpp"

namespace pdeg {

/// One group's invariants, ready for rendering in any output format.
struct DegreeReport {
    std::string spec;
    int order = 0;
    int lattice_size = 0;
    Ratio d;
    Ratio sd;
    Ratio pd;
    int center_order = 0;
    int norm_order = 0;
    int quasicenter_order = 0;
    int hyperquasicenter_order = 0;
    int p_subgroup_order = 0;
    bool is_p_group = false;
    bool quasihamiltonian = false;
    long long elapsed_ms = 0;
    bool cache_hit = false;
};

struct ComputeOptions {
    CacheConfig cache;
    int jobs = 1;
    int order_cap = kDefaultOrderCap;
    int lattice_cap = kDefaultLatticeCap;
};

struct ComputeResult {
    DegreeReport report;
    GroupAnalysis analysis;
    std::string warning; // e.g. corrupt cache entry skipped
};

/// Parse, build, enumerate (through the cache), profile.
ComputeResult compute_report(const std::string& spec_text, const ComputeOptions& options);

// Rendering. `with_timing` controls whether the wall-clock field appears;
// leaving it off keeps the output byte-stable across runs.
std::string render_text(const DegreeReport& report, bool with_timing);
std::string render_json(const DegreeReport& report, bool with_timing);
std::string render_csv_header();
std::string render_csv_row(const DegreeReport& report);

/// Per-subgroup permutizer table export (hex bit patterns and orders).
std::string render_profile_json(const GroupAnalysis& analysis);

// Verdict / sweep rendering.
std::string render_verdict_json(const TheoremVerdict& verdict);
std::string render_sweep_csv(const SweepResult& result);
std::string render_sweep_text(const SweepResult& result);

} // namespace pdeg

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdeg/permutizer.hpp"

namespace pdeg {

enum class TheoremId {
    T4_1_lower,
    T4_1_upper,
    P4_2,
    T4_3,
    T5_1_lower,
    T5_1_upper,
    T5_2,
    T5_3,
    P6_1,
    R2_3,
    L_FORMULA,
    ERRATA_D8,
};

const char* theorem_id_name(TheoremId id);
std::optional<TheoremId> theorem_id_from_name(const std::string& name);
std::vector<TheoremId> all_theorem_ids();

struct TheoremVerdict {
    TheoremId theorem_id;
    std::string group_description;
    bool hypotheses_hold = false;
    Ratio lhs;
    Ratio rhs;
    bool passed = false; // vacuously true when hypotheses fail
    std::string witness; // structured detail, empty when none

    bool vacuous() const { return !hypotheses_hold; }
};

/// Precomputed view of one group: lattice plus permutizer profile. The
/// group lives behind a shared_ptr so the internal pointers survive moves.
struct GroupAnalysis {
    std::string description;
    std::shared_ptr<const FiniteGroup> group;
    SubgroupLattice lattice;
    PermutizerProfile profile;
};

GroupAnalysis analyze(FiniteGroup g, const std::string& description, int jobs = 1);

/// A lattice member re-materialized as a standalone group, with the map
/// from its local element indices back to ambient ones.
struct SubgroupAnalysis {
    int index_in_parent = -1;
    std::vector<int> embedding;
    GroupAnalysis analysis;
};
SubgroupAnalysis analyze_subgroup(const GroupAnalysis& parent, int subgroup_index, int jobs = 1);

// --- individual checkers -------------------------------------------------

TheoremVerdict check_t41_lower(const GroupAnalysis& g, const SubgroupAnalysis& h);
TheoremVerdict check_t41_upper(const GroupAnalysis& g, const SubgroupAnalysis& h);
TheoremVerdict check_p42(const GroupAnalysis& g, const GroupAnalysis& h,
                         const GroupAnalysis& product);
TheoremVerdict check_t43(const GroupAnalysis& g);
TheoremVerdict check_t51_lower(const GroupAnalysis& g);
TheoremVerdict check_t51_upper(const GroupAnalysis& g);
TheoremVerdict check_t52(const GroupAnalysis& g);
TheoremVerdict check_t53(const GroupAnalysis& g);
TheoremVerdict check_p61(int p);
TheoremVerdict check_errata_d8();
TheoremVerdict check_r23(const GroupAnalysis& g);
TheoremVerdict check_lattice_formula(int n);

// --- sweeps --------------------------------------------------------------

struct SweepSummary {
    TheoremId theorem_id;
    int applicable = 0; // hypotheses held
    int passed = 0;     // hypotheses held and conclusion verified
    int vacuous = 0;
    int failed = 0;     // non-vacuous failures
};

struct SweepResult {
    std::vector<TheoremVerdict> verdicts;
    std::vector<SweepSummary> summaries;
    bool ok() const;
};

/// Analyses for every group in the standard corpus (C_n n<=32, D_2n
/// n<=100, Q_8/16/32, SD_16/32, S_n and A_n n<=5, coprime products of
/// order <= 200). `quick` trims to small representatives.
std::vector<GroupAnalysis> standard_corpus(bool quick = false, int jobs = 1);

/// Coprime factor pairs used for the product-multiplicativity sweep.
std::vector<std::pair<std::string, std::string>> coprime_product_pairs();

SweepResult run_sweep(const std::vector<TheoremId>& selection,
                      const std::vector<GroupAnalysis>& corpus, int jobs = 1,
                      int lattice_formula_max_n = 100);

} // namespace pdeg

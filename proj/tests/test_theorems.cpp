#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeg/errors.hpp"
#include "pdeg/families.hpp"
#include "pdeg/theorems.hpp"

using namespace pdeg;

TEST_CASE("theorem id names round trip") {
    for (TheoremId id : all_theorem_ids()) {
        auto back = theorem_id_from_name(theorem_id_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(theorem_id_from_name("T9_9").has_value());
}

TEST_CASE("analyze bundles lattice and profile coherently") {
    GroupAnalysis a = analyze(make_symmetric(3), "S:3");
    CHECK(a.lattice.size() == 6);
    CHECK(a.profile.pd == Ratio(1));
    CHECK(a.lattice.group == a.group.get());
    // moving the analysis must not invalidate the internal pointers
    std::vector<GroupAnalysis> moved;
    moved.push_back(std::move(a));
    moved.push_back(analyze(make_dihedral(8), "D:8"));
    CHECK(moved[0].lattice.group == moved[0].group.get());
    CHECK(moved[0].profile.pd == Ratio(1));
}

TEST_CASE("analyze_subgroup extracts a working standalone group") {
    GroupAnalysis s4 = analyze(make_symmetric(4), "S:4");
    int a4_index = -1;
    for (int i = 0; i < s4.lattice.size(); ++i)
        if (s4.lattice.subgroups[size_t(i)].count() == 12) a4_index = i;
    REQUIRE(a4_index >= 0);
    SubgroupAnalysis sub = analyze_subgroup(s4, a4_index);
    CHECK(sub.analysis.group->order() == 12);
    CHECK(sub.analysis.lattice.size() == 10); // L(A_4)
    CHECK(sub.embedding.size() == 12);
}

TEST_CASE("T4.1 lower bound holds for sample pairs") {
    GroupAnalysis s4 = analyze(make_symmetric(4), "S:4");
    for (int i = 0; i < s4.lattice.size(); ++i) {
        SubgroupAnalysis h = analyze_subgroup(s4, i);
        TheoremVerdict v = check_t41_lower(s4, h);
        CHECK(v.hypotheses_hold);
        CHECK(v.passed);
    }
}

TEST_CASE("T4.1 upper bound: sanity on an abelian example") {
    GroupAnalysis c12 = analyze(make_cyclic(12), "C:12");
    for (int i = 0; i < c12.lattice.size(); ++i) {
        TheoremVerdict v = check_t41_upper(c12, analyze_subgroup(c12, i));
        CHECK(v.passed); // pass or vacuous, never a live failure
    }
}

TEST_CASE("P4.2 multiplicativity for coprime products") {
    GroupAnalysis s3 = analyze(make_symmetric(3), "S:3");
    GroupAnalysis c5 = analyze(make_cyclic(5), "C:5");
    GroupAnalysis prod =
        analyze(FiniteGroup::direct_product(make_symmetric(3), make_cyclic(5)), "S:3xC:5");
    TheoremVerdict v = check_p42(s3, c5, prod);
    CHECK(v.passed);
    CHECK(v.lhs == v.rhs);

    GroupAnalysis a4 = analyze(make_alternating(4), "A:4");
    GroupAnalysis prod2 =
        analyze(FiniteGroup::direct_product(make_alternating(4), make_cyclic(5)), "A:4xC:5");
    TheoremVerdict w = check_p42(a4, c5, prod2);
    CHECK(w.passed);
    CHECK(w.lhs < Ratio(1)); // pd(A_4) < 1 carries through the product

    GroupAnalysis c2 = analyze(make_cyclic(2), "C:2");
    GroupAnalysis d8 = analyze(make_dihedral(8), "D:8");
    GroupAnalysis bogus = analyze(FiniteGroup::direct_product(make_cyclic(2), make_dihedral(8)),
                                  "C:2xD:8");
    CHECK_THROWS_AS(check_p42(c2, d8, bogus), Error); // orders not coprime
}

TEST_CASE("T4.3 reformulation") {
    // cyclic groups are excluded by hypothesis
    TheoremVerdict c = check_t43(analyze(make_cyclic(9), "C:9"));
    CHECK(c.passed);

    // D_8 has pd = 1 so some permutizer equals G: hypotheses fail, vacuous pass
    TheoremVerdict d = check_t43(analyze(make_dihedral(8), "D:8"));
    CHECK_FALSE(d.hypotheses_hold);
    CHECK(d.passed);

    // sweep-level: no non-vacuous failure anywhere in a small corpus
    for (const auto& g : standard_corpus(true)) {
        TheoremVerdict v = check_t43(g);
        CHECK(v.passed);
    }
}

TEST_CASE("T5.1 bounds on groups with pd below 1") {
    GroupAnalysis a4 = analyze(make_alternating(4), "A:4");
    TheoremVerdict lower = check_t51_lower(a4);
    CHECK(lower.hypotheses_hold);
    CHECK(lower.passed);

    TheoremVerdict upper = check_t51_upper(a4);
    CHECK(upper.passed);

    // pd = 1 boundary is vacuous for the lower bound
    TheoremVerdict boundary = check_t51_lower(analyze(make_symmetric(3), "S:3"));
    CHECK_FALSE(boundary.hypotheses_hold);
    CHECK(boundary.passed);
}

TEST_CASE("T5.2 and T5.3 conditional checks never fail non-vacuously") {
    for (const auto& g : standard_corpus(true)) {
        CHECK(check_t52(g).passed);
        CHECK(check_t53(g).passed);
    }
}

TEST_CASE("Prop 6.1 closed forms") {
    for (int p : {3, 5, 7, 11, 13}) {
        TheoremVerdict v = check_p61(p);
        CHECK(v.passed);
        CHECK(v.lhs == v.rhs);
    }
    CHECK_THROWS_AS(check_p61(4), Error);
    CHECK_THROWS_AS(check_p61(2), Error);
    CHECK_THROWS_AS(check_p61(9), Error);
}

TEST_CASE("D_8 example with the corrected values") {
    TheoremVerdict v = check_errata_d8();
    CHECK(v.passed);
    CHECK(v.lhs == Ratio(1));
}

TEST_CASE("Remark 2.3: maximal-only lattices with the permutizer condition") {
    // C_p x C_p style lattices: every proper subgroup maximal
    TheoremVerdict v = check_r23(analyze(build_group(parse_spec("C:2xC:2")), "C:2xC:2"));
    CHECK(v.hypotheses_hold);
    CHECK(v.passed);

    TheoremVerdict s4 = check_r23(analyze(make_symmetric(4), "S:4"));
    CHECK_FALSE(s4.hypotheses_hold); // deep lattice
    CHECK(s4.passed);
}

TEST_CASE("lattice-size law verdicts") {
    for (int n : {1, 2, 3, 4, 12, 36, 97}) CHECK(check_lattice_formula(n).passed);
    CHECK_THROWS_AS(check_lattice_formula(0), Error);
}

TEST_CASE("quick sweep comes back clean with counts that add up") {
    auto corpus = standard_corpus(true, 2);
    SweepResult result = run_sweep(all_theorem_ids(), corpus, 2, 20);
    CHECK(result.ok());
    REQUIRE(result.summaries.size() == all_theorem_ids().size());
    size_t total = 0;
    for (const auto& s : result.summaries) {
        CHECK(s.failed == 0);
        CHECK(s.applicable == s.passed);
        total += size_t(s.applicable + s.vacuous);
    }
    CHECK(total == result.verdicts.size());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdeg/errors.hpp"
#include "pdeg/group.hpp"

using namespace pdeg;

namespace {

FiniteGroup s3() {
    return FiniteGroup::from_generators(3, {{1, 2, 0}, {1, 0, 2}});
}

FiniteGroup d8() {
    // square symmetries: 4-cycle plus a reflection
    return FiniteGroup::from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
}

} // namespace

TEST_CASE("closure of permutation generators") {
    CHECK(s3().order() == 6);
    CHECK(d8().order() == 8);
    CHECK(FiniteGroup::from_generators(1, {}).order() == 1);
    CHECK_THROWS_AS(FiniteGroup::from_generators(3, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}}, 4), Error);
}

TEST_CASE("table validation names the failure") {
    CHECK(FiniteGroup::from_table({{0}}).order() == 1);
    CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}),
                         doctest::Contains("NotLatinSquare"), Error);
    // Latin square with identity but not associative (order 5 quasigroup)
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    Error);
    // Latin square with no two-sided identity
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}),
                         doctest::Contains("NoIdentity"), Error);
    // identity merely relocated is fine
    CHECK(FiniteGroup::from_table({{1, 0}, {0, 1}}).order() == 2);
}

TEST_CASE("identity relocation when loading a table") {
    // C_3 table written with the identity at index 2
    FiniteGroup g = FiniteGroup::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.mul(0, 1) == 1);
    CHECK(g.element_order(1) == 3);
}

TEST_CASE("element orders and cyclic subgroups") {
    FiniteGroup g = s3();
    CHECK(g.element_order(0) == 1);
    int three_cycle = -1, transposition = -1;
    for (int x = 1; x < 6; ++x) {
        if (g.element_order(x) == 3) three_cycle = x;
        if (g.element_order(x) == 2) transposition = x;
    }
    CHECK(g.cyclic_subgroup(three_cycle).count() == 3);
    CHECK(g.cyclic_subgroup(transposition).count() == 2);
    CHECK(g.cyclic_subgroup(0).count() == 1);
    for (int x = 0; x < 6; ++x) CHECK(6 % g.element_order(x) == 0);
}

TEST_CASE("centralizers and centers") {
    FiniteGroup g = s3();
    for (int x = 1; x < 6; ++x)
        if (g.element_order(x) == 2) CHECK(g.centralizer(x).count() == 2);
    CHECK(g.center().count() == 1);

    FiniteGroup d = d8();
    CHECK(d.center().count() == 2);
    // the central involution's centralizer is everything
    for (int x : d.center().members())
        CHECK(d.centralizer(x).count() == 8);
}

TEST_CASE("commutativity degree: both formulas and the class-count oracle") {
    FiniteGroup g = s3();
    CHECK(g.commutativity_degree() == Ratio(1, 2));
    CHECK(g.commutativity_degree_pairs() == Ratio(1, 2));
    CHECK(Ratio(g.conjugacy_class_count(), g.order()) == Ratio(1, 2));

    FiniteGroup d = d8();
    CHECK(d.commutativity_degree() == Ratio(5, 8));
    CHECK(d.commutativity_degree_pairs() == Ratio(5, 8));
    CHECK(Ratio(d.conjugacy_class_count(), d.order()) == Ratio(5, 8));

    FiniteGroup c = FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}});
    CHECK(c.commutativity_degree() == Ratio(1));
}

TEST_CASE("direct products") {
    FiniteGroup c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    FiniteGroup c3 = FiniteGroup::from_generators(3, {{1, 2, 0}});
    FiniteGroup p = FiniteGroup::direct_product(c2, c3);
    CHECK(p.order() == 6);
    bool has_order6 = false;
    for (int x = 0; x < 6; ++x)
        if (p.element_order(x) == 6) has_order6 = true;
    CHECK(has_order6); // coprime cyclic factors give a cyclic product

    FiniteGroup trivial = FiniteGroup::from_generators(1, {});
    FiniteGroup same = FiniteGroup::direct_product(s3(), trivial);
    CHECK(same.order() == 6);
    CHECK(same.canonical_hash() == s3().canonical_hash());

    CHECK(FiniteGroup::direct_product(s3(), FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}}))
              .order() == 30);
    CHECK_THROWS_AS(FiniteGroup::direct_product(d8(), d8(), 32), Error);
}

TEST_CASE("normality and quotients") {
    FiniteGroup g = s3();
    ElementSet a3(6), reflection(6);
    for (int x = 0; x < 6; ++x) {
        int o = g.element_order(x);
        if (o == 1 || o == 3) a3.add(x);
    }
    for (int x = 0; x < 6; ++x)
        if (g.element_order(x) == 2) {
            reflection = g.cyclic_subgroup(x);
            break;
        }
    CHECK(g.is_normal(a3));
    CHECK_FALSE(g.is_normal(reflection));
    CHECK(g.is_normal(g.center() | ElementSet::singleton(6, 0)));

    auto q = g.quotient(a3);
    CHECK(q.group.order() == 2);
    CHECK(q.projection[0] == 0);
    // projection is a homomorphism
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            CHECK(q.projection[size_t(g.mul(x, y))] ==
                  q.group.mul(q.projection[size_t(x)], q.projection[size_t(y)]));

    CHECK(g.quotient(ElementSet::singleton(6, 0)).group.order() == 6);
    CHECK(g.quotient(ElementSet::full(6)).group.order() == 1);
    CHECK_THROWS_AS(g.quotient(reflection), Error);
    ElementSet junk(6);
    junk.add(0);
    junk.add(1);
    junk.add(2);
    if (!g.is_subgroup_set(junk)) CHECK_THROWS_AS(g.is_normal(junk), Error);
}

TEST_CASE("subgroup extraction") {
    FiniteGroup g = s3();
    ElementSet a3(6);
    for (int x = 0; x < 6; ++x)
        if (g.element_order(x) != 2) a3.add(x);
    std::vector<int> embedding;
    FiniteGroup h = g.extract_subgroup(a3, &embedding);
    CHECK(h.order() == 3);
    CHECK(embedding.size() == 3);
    CHECK(embedding[0] == 0);
    // the embedding is a homomorphism into g
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(g.mul(embedding[size_t(i)], embedding[size_t(j)]) ==
                  embedding[size_t(h.mul(i, j))]);
}

TEST_CASE("canonical hash is content-based") {
    CHECK(s3().canonical_hash() == s3().canonical_hash());
    CHECK(s3().canonical_hash() != d8().canonical_hash());
    CHECK(s3().canonical_hash().size() == 16);
}

#include "pdeg/permutizer.hpp"

#include "pdeg/errors.hpp"
#include "pdeg/parallel.hpp"

namespace pdeg {

namespace {

bool cyclic_permutes_with(const FiniteGroup& g, const std::vector<int>& cyclic,
                          const std::vector<int>& x_members) {
    ElementSet left(g.order()), right(g.order());
    for (int c : cyclic)
        for (int m : x_members) {
            left.add(g.mul(c, m));
            right.add(g.mul(m, c));
        }
    return left == right;
}

/// Bitset of all g whose cyclic subgroup permutes with X.
ElementSet permuting_elements(const FiniteGroup& g, const ElementSet& x) {
    auto x_members = x.members();
    ElementSet out(g.order());
    for (int e = 0; e < g.order(); ++e) {
        auto cyclic = g.cyclic_subgroup(e).members();
        if (cyclic_permutes_with(g, cyclic, x_members)) out.add(e);
    }
    return out;
}

} // namespace

ElementSet permutizer(const FiniteGroup& g, const ElementSet& x) {
    // one pass collecting the permuting elements, then a single closure;
    // elements of X always qualify, so X ⊆ P_G(X)
    return generated_subgroup(g, permuting_elements(g, x) | x);
}

ElementSet p_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice) {
    ElementSet out = ElementSet::full(g.order());
    for (const auto& x : lattice.subgroups) out = out & permutizer(g, x);
    return out;
}

ElementSet norm_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice) {
    ElementSet out = ElementSet::full(g.order());
    for (const auto& x : lattice.subgroups) out = out & g.normalizer(x);
    return out;
}

ElementSet quasicenter(const FiniteGroup& g, const SubgroupLattice& lattice) {
    ElementSet qualifying(g.order());
    for (int e = 0; e < g.order(); ++e) {
        auto cyclic = g.cyclic_subgroup(e).members();
        bool with_all = true;
        for (const auto& k : lattice.subgroups) {
            if (!cyclic_permutes_with(g, cyclic, k.members())) {
                with_all = false;
                break;
            }
        }
        if (with_all) qualifying.add(e);
    }
    return generated_subgroup(g, qualifying);
}

HyperquasicenterResult hyperquasicenter(const FiniteGroup& g, const SubgroupLattice& lattice) {
    HyperquasicenterResult result;
    ElementSet current = ElementSet::singleton(g.order(), 0);
    result.chain.push_back(current);
    for (int step = 0; step <= g.order(); ++step) {
        if (!g.is_normal(current))
            throw Error(ErrorKind::QuasicenterNotNormal,
                        "chain term of order " + std::to_string(current.count()) +
                            " is not normal");
        auto quotient = g.quotient(current);
        ElementSet q_of_quotient =
            quasicenter(quotient.group, enumerate_subgroups(quotient.group));
        ElementSet next(g.order());
        for (int x = 0; x < g.order(); ++x)
            if (q_of_quotient.contains(quotient.projection[size_t(x)])) next.add(x);
        if (next == current) break;
        current = next;
        result.chain.push_back(current);
    }
    result.stable = current;
    return result;
}

bool satisfies_permutizer_condition(const SubgroupLattice& lattice,
                                    const std::vector<ElementSet>& permutizers) {
    int whole = lattice.whole_group_index();
    for (int i = 0; i < lattice.size(); ++i) {
        if (i == whole) continue;
        if (permutizers[size_t(i)] == lattice.subgroups[size_t(i)]) return false;
    }
    return true;
}

bool is_quasihamiltonian(const SubgroupLattice& lattice) {
    int m = lattice.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!permutes(*lattice.group, lattice.subgroups[size_t(i)],
                          lattice.subgroups[size_t(j)]))
                return false;
    return true;
}

Ratio permutability_degree(const FiniteGroup& g, const SubgroupLattice& lattice,
                           const std::vector<ElementSet>& permutizers) {
    BigInt sum = 0;
    for (const auto& p : permutizers) sum += p.count();
    return Ratio(sum, BigInt(g.order()) * lattice.size());
}

PdDecomposition pd_decomposition(const SubgroupLattice& lattice,
                                 const std::vector<ElementSet>& permutizers,
                                 const ElementSet& p_of_g) {
    PdDecomposition out{0, 0};
    for (int i = 0; i < lattice.size(); ++i) {
        if (lattice.subgroups[size_t(i)].is_subset_of(p_of_g))
            out.inside_sum += permutizers[size_t(i)].count();
        else
            out.outside_sum += permutizers[size_t(i)].count();
    }
    return out;
}

PermutizerProfile compute_profile(const FiniteGroup& g, const SubgroupLattice& lattice,
                                  int jobs) {
    PermutizerProfile profile;
    profile.group = &g;
    profile.permutizers.assign(size_t(lattice.size()), ElementSet(g.order()));
    parallel_for(lattice.size(), jobs, [&](int i) {
        profile.permutizers[size_t(i)] = permutizer(g, lattice.subgroups[size_t(i)]);
    });

    profile.p_subgroup = ElementSet::full(g.order());
    for (const auto& p : profile.permutizers) profile.p_subgroup = profile.p_subgroup & p;
    profile.norm = norm_subgroup(g, lattice);
    profile.quasicenter = quasicenter(g, lattice);
    auto hq = hyperquasicenter(g, lattice);
    profile.hyperquasicenter = hq.stable;
    profile.quasicenter_chain = std::move(hq.chain);
    profile.is_p_group = satisfies_permutizer_condition(lattice, profile.permutizers);
    profile.quasihamiltonian = is_quasihamiltonian(lattice);
    profile.pd = permutability_degree(g, lattice, profile.permutizers);
    return profile;
}

} // namespace pdeg

#pragma once

#include <vector>

#include "pdeg/lattice.hpp"

namespace pdeg {

/// Everything the permutizer machinery knows about one group: the
/// permutizer of every subgroup, the intersection subgroup P(G), the norm
/// N(G), quasicenter Q(G), hyperquasicenter Q_inf(G) with its chain, the
/// permutizer condition, and pd(G).
struct PermutizerProfile {
    const FiniteGroup* group = nullptr;
    /// permutizers[i] = P_G(lattice.subgroups[i]).
    std::vector<ElementSet> permutizers;
    ElementSet p_subgroup;
    ElementSet norm;
    ElementSet quasicenter;
    ElementSet hyperquasicenter;
    std::vector<ElementSet> quasicenter_chain; // Q_0 ⊂ Q_1 ⊂ ... = Q_inf
    bool is_p_group = false;
    bool quasihamiltonian = false;
    Ratio pd;
};

/// Subgroup generated by all g with <g>X = X<g>.
ElementSet permutizer(const FiniteGroup& g, const ElementSet& x);

/// Intersection of all permutizers over the lattice.
ElementSet p_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Intersection of all subgroup normalizers.
ElementSet norm_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Subgroup generated by elements whose cyclic subgroup permutes with
/// every lattice member.
ElementSet quasicenter(const FiniteGroup& g, const SubgroupLattice& lattice);

struct HyperquasicenterResult {
    ElementSet stable;
    std::vector<ElementSet> chain; // Q_0, Q_1, ..., stable term
};
/// Iterated quasicenter-of-quotient chain, pulled back along projections.
HyperquasicenterResult hyperquasicenter(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Every proper subgroup is properly contained in its permutizer.
bool satisfies_permutizer_condition(const SubgroupLattice& lattice,
                                    const std::vector<ElementSet>& permutizers);

/// All pairs of subgroups permute (sd = 1).
bool is_quasihamiltonian(const SubgroupLattice& lattice);

/// pd(G) = (1/(|G||L|)) * sum |P_G(X)|.
Ratio permutability_degree(const FiniteGroup& g, const SubgroupLattice& lattice,
                           const std::vector<ElementSet>& permutizers);

/// Eq-style split of the pd sum into the L(P(G)) part and its complement;
/// parts re-sum to |G|·|L(G)|·pd exactly.
struct PdDecomposition {
    BigInt inside_sum;  // over X ⊆ P(G)
    BigInt outside_sum; // over the rest of the lattice
};
PdDecomposition pd_decomposition(const SubgroupLattice& lattice,
                                 const std::vector<ElementSet>& permutizers,
                                 const ElementSet& p_of_g);

PermutizerProfile compute_profile(const FiniteGroup& g, const SubgroupLattice& lattice,
                                  int jobs = 1);

} // namespace pdeg

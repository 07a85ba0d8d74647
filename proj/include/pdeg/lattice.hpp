#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pdeg/group.hpp"

namespace pdeg {

inline constexpr int kDefaultLatticeCap = 100000;

/// Complete subgroup lattice of a group. Subgroups are stored sorted by
/// (cardinality, bit pattern), so index 0 is the trivial subgroup and the
/// last index is the whole group.
struct SubgroupLattice {
    const FiniteGroup* group = nullptr;
    std::vector<ElementSet> subgroups;
    /// inclusion[i] is the set of lattice indices j with subgroups[i] ⊆ subgroups[j].
    std::vector<std::vector<int>> inclusion;
    /// Covering pairs (i, j): subgroups[i] ⊂ subgroups[j] with nothing in between.
    std::vector<std::pair<int, int>> hasse_edges;

    int size() const { return int(subgroups.size()); }
    /// Index of a subgroup by exact bit pattern; throws SubgroupNotInLattice.
    int index_of(const ElementSet& s) const;
    int whole_group_index() const { return size() - 1; }
};

/// Smallest subgroup containing the (nonempty) seed set.
ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seed);

/// All subgroups by join saturation from the cyclic subgroups.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int lattice_cap = kDefaultLatticeCap);

/// Computes inclusion lists and Hasse edges for an already-complete,
/// sorted subgroup list.
void build_lattice_structure(SubgroupLattice& lattice);

/// {h·k : h in H, k in K} as a plain subset.
ElementSet product_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& k);

/// HK = KH as sets. When true, sanity-asserts that the product is
/// inverse-closed and contains the identity.
bool permutes(const FiniteGroup& g, const ElementSet& h, const ElementSet& k);

/// |{K in L : HK = KH}| for H a lattice member.
int permuting_subgroups_count(const SubgroupLattice& lattice, const ElementSet& h);

/// sd(G); cross-checked pair-count vs sum form internally.
Ratio subgroup_commutativity_degree(const SubgroupLattice& lattice, int jobs = 1);

// Divisor arithmetic backing the dihedral lattice-size law.
uint64_t sigma(uint64_t n);
uint64_t tau(uint64_t n);
/// sigma(n) + tau(n) = |L(D_2n)|; asserted against the prime-power
/// closed form m + (p^{m+1}+p-2)/(p-1) when n = p^m.
uint64_t dihedral_lattice_size(uint64_t n);

} // namespace pdeg

// Test-only oracles, deliberately independent of the library's
// enumeration and permutizer code paths.
#pragma once

#include <algorithm>
#include <vector>

#include "pdeg/lattice.hpp"

namespace pdeg::oracles {

/// Exhaustive subset-scan subgroup enumeration: every subset containing
/// the identity whose size divides |G| is tested against the subgroup
/// axioms directly. Feasible to |G| <= 24.
inline std::vector<ElementSet> subgroups_by_subset_scan(const FiniteGroup& g) {
    int n = g.order();
    std::vector<ElementSet> found;

    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    auto closed = [&](const std::vector<int>& members) {
        ElementSet in(n);
        for (int m : members) in.add(m);
        for (int a : members)
            for (int b : members)
                if (!in.contains(g.mul(a, b))) return false;
        return true;
    };

    for (int d : divisors) {
        if (d == 1) {
            found.push_back(ElementSet::singleton(n, 0));
            continue;
        }
        // choose d-1 elements from {1..n-1}; identity is always in
        std::vector<int> pick(size_t(d - 1));
        for (int i = 0; i < d - 1; ++i) pick[size_t(i)] = i + 1;
        for (;;) {
            std::vector<int> members{0};
            members.insert(members.end(), pick.begin(), pick.end());
            if (closed(members)) {
                ElementSet s(n);
                for (int m : members) s.add(m);
                found.push_back(s);
            }
            // next combination
            int i = d - 2;
            while (i >= 0 && pick[size_t(i)] == n - (d - 1) + i) --i;
            if (i < 0) break;
            ++pick[size_t(i)];
            for (int j = i + 1; j < d - 1; ++j) pick[size_t(j)] = pick[size_t(j - 1)] + 1;
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Permutizer by a different route: collect the permuting elements, then
/// intersect every lattice member containing them (instead of running a
/// closure).
inline ElementSet permutizer_by_lattice_intersection(const FiniteGroup& g,
                                                     const SubgroupLattice& lattice,
                                                     const ElementSet& x) {
    ElementSet permuting(g.order());
    auto x_members = x.members();
    for (int e = 0; e < g.order(); ++e) {
        auto cyclic = g.cyclic_subgroup(e).members();
        ElementSet left(g.order()), right(g.order());
        for (int c : cyclic)
            for (int m : x_members) {
                left.add(g.mul(c, m));
                right.add(g.mul(m, c));
            }
        if (left == right) permuting.add(e);
    }
    ElementSet out = ElementSet::full(g.order());
    for (const auto& s : lattice.subgroups)
        if (permuting.is_subset_of(s) && x.is_subset_of(s)) out = out & s;
    return out;
}

} // namespace pdeg::oracles

#include "pdeg/lattice.hpp"

#include <algorithm>
#include <set>

#include "pdeg/errors.hpp"
#include "pdeg/parallel.hpp"

namespace pdeg {

int SubgroupLattice::index_of(const ElementSet& s) const {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s);
    if (it == subgroups.end() || *it != s)
        throw Error(ErrorKind::SubgroupNotInLattice, "no such subgroup");
    return int(it - subgroups.begin());
}

ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seed) {
    std::vector<int> elements = seed.members();
    if (elements.empty()) throw Error(ErrorKind::InvalidParameter, "empty seed");
    ElementSet in = seed;
    in.add(0);
    if (!seed.contains(0)) elements.push_back(0);
    // closure under products; in a finite group this also yields inverses
    for (size_t head = 0; head < elements.size(); ++head) {
        int x = elements[head];
        for (size_t j = 0; j <= head; ++j) {
            int y = elements[j];
            for (int p : {g.mul(x, y), g.mul(y, x)}) {
                if (!in.contains(p)) {
                    in.add(p);
                    elements.push_back(p);
                }
            }
        }
    }
    return in;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, int lattice_cap) {
    std::set<ElementSet> known;
    std::vector<ElementSet> list;
    auto insert = [&](const ElementSet& s) {
        if (known.insert(s).second) {
            list.push_back(s);
            if (int(list.size()) > lattice_cap)
                throw Error(ErrorKind::LatticeTooLarge,
                            "subgroup count exceeds cap " + std::to_string(lattice_cap));
            return true;
        }
        return false;
    };

    // seed with every cyclic subgroup (includes the trivial one)
    for (int x = 0; x < g.order(); ++x) insert(g.cyclic_subgroup(x));

    // join saturation: each newly found subgroup is joined with everything
    for (size_t head = 0; head < list.size(); ++head) {
        ElementSet current = list[head];
        if (current.count() == g.order()) continue;
        for (size_t j = 0; j < head; ++j) {
            const ElementSet& other = list[j];
            if (other.is_subset_of(current) || current.is_subset_of(other)) continue;
            insert(generated_subgroup(g, current | other));
        }
    }

    SubgroupLattice lattice;
    lattice.group = &g;
    lattice.subgroups.assign(known.begin(), known.end()); // sorted by (size, pattern)
    build_lattice_structure(lattice);
    return lattice;
}

void build_lattice_structure(SubgroupLattice& lattice) {
    int m = lattice.size();
    lattice.inclusion.assign(size_t(m), {});
    std::vector<std::vector<char>> below(size_t(m), std::vector<char>(size_t(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (lattice.subgroups[size_t(i)].is_subset_of(lattice.subgroups[size_t(j)])) {
                lattice.inclusion[size_t(i)].push_back(j);
                below[size_t(i)][size_t(j)] = 1;
            }

    lattice.hasse_edges.clear();
    for (int i = 0; i < m; ++i) {
        for (int j : lattice.inclusion[size_t(i)]) {
            if (j == i) continue;
            bool covering = true;
            for (int k : lattice.inclusion[size_t(i)]) {
                if (k != i && k != j && below[size_t(k)][size_t(j)]) {
                    covering = false;
                    break;
                }
            }
            if (covering) lattice.hasse_edges.emplace_back(i, j);
        }
    }
    std::sort(lattice.hasse_edges.begin(), lattice.hasse_edges.end());
}

ElementSet product_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& k) {
    ElementSet out(g.order());
    auto hm = h.members();
    auto km = k.members();
    for (int a : hm)
        for (int b : km) out.add(g.mul(a, b));
    return out;
}

bool permutes(const FiniteGroup& g, const ElementSet& h, const ElementSet& k) {
    ElementSet hk = product_set(g, h, k);
    if (hk != product_set(g, k, h)) return false;
    // HK = KH makes HK a subgroup; sanity-check identity and inverses
    if (!hk.contains(0)) throw Error(ErrorKind::NotASubgroup, "permuting product misses identity");
    for (int x : hk.members())
        if (!hk.contains(g.inv(x)))
            throw Error(ErrorKind::NotASubgroup, "permuting product is not inverse-closed");
    long long expected = (long long)h.count() * k.count() / (h & k).count();
    if (hk.count() != expected)
        throw Error(ErrorKind::NotASubgroup, "product order formula violated");
    return true;
}

int permuting_subgroups_count(const SubgroupLattice& lattice, const ElementSet& h) {
    lattice.index_of(h); // throws when absent
    int count = 0;
    for (const auto& k : lattice.subgroups)
        if (permutes(*lattice.group, h, k)) ++count;
    return count;
}

Ratio subgroup_commutativity_degree(const SubgroupLattice& lattice, int jobs) {
    int m = lattice.size();
    const FiniteGroup& g = *lattice.group;

    // row counts |C_L(H)| in parallel; the pair-count form re-sums the
    // full ordered matrix and must agree with the sum form
    std::vector<long long> row(size_t(m), 0);
    std::vector<long long> col(size_t(m), 0);
    std::vector<std::vector<char>> matrix(size_t(m), std::vector<char>(size_t(m), 0));
    parallel_for(m, jobs, [&](int i) {
        for (int j = 0; j < m; ++j)
            matrix[size_t(i)][size_t(j)] =
                permutes(g, lattice.subgroups[size_t(i)], lattice.subgroups[size_t(j)]) ? 1 : 0;
    });
    long long pair_count = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (matrix[size_t(i)][size_t(j)]) {
                ++pair_count;
                ++row[size_t(i)];
                ++col[size_t(j)];
            }
    long long row_sum = 0;
    for (int i = 0; i < m; ++i) {
        if (row[size_t(i)] != col[size_t(i)])
            throw Error(ErrorKind::NotASubgroup, "permutes relation is not symmetric");
        row_sum += row[size_t(i)];
    }
    if (row_sum != pair_count)
        throw Error(ErrorKind::NotASubgroup, "sd pair-count and sum forms disagree");
    return Ratio(BigInt(long(pair_count)), BigInt(long(m)) * m);
}

uint64_t sigma(uint64_t n) {
    uint64_t sum = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        sum += d;
        if (d != n / d) sum += n / d;
    }
    return sum;
}

uint64_t tau(uint64_t n) {
    uint64_t count = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        count += (d == n / d) ? 1 : 2;
    }
    return count;
}

uint64_t dihedral_lattice_size(uint64_t n) {
    uint64_t value = sigma(n) + tau(n);
    // prime-power closed form m + (p^{m+1}+p-2)/(p-1)
    uint64_t rest = n, p = 0;
    for (uint64_t d = 2; d * d <= rest; ++d)
        if (rest % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = rest;
    if (rest > 1) {
        uint64_t m = 0, pm = 1;
        while (rest % p == 0) {
            rest /= p;
            ++m;
            pm *= p;
        }
        if (rest == 1) {
            uint64_t closed = m + (pm * p + p - 2) / (p - 1);
            if (closed != value)
                throw Error(ErrorKind::InvalidParameter, "prime-power lattice-size forms disagree");
        }
    }
    return value;
}

} // namespace pdeg

#include "pdeg/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pdeg/errors.hpp"

namespace pdeg {

namespace {

std::string format_triple(int i, int j, int k) {
    std::ostringstream out;
    out << "(" << i << "," << j << "," << k << ")";
    return out.str();
}

void validate_table(const std::vector<uint16_t>& table, int order) {
    // identity row/column
    for (int j = 0; j < order; ++j)
        if (table[j] != j)
            throw Error(ErrorKind::NoIdentity, "row 0 is not the identity at column " + std::to_string(j));
    for (int i = 0; i < order; ++i)
        if (table[size_t(i) * order] != i)
            throw Error(ErrorKind::NoIdentity, "column 0 is not the identity at row " + std::to_string(i));

    // Latin square
    std::vector<char> seen(size_t(order), 0);
    for (int i = 0; i < order; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < order; ++j) {
            int v = table[size_t(i) * order + j];
            if (seen[size_t(v)])
                throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats " + std::to_string(v));
            seen[size_t(v)] = 1;
        }
    }
    for (int j = 0; j < order; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < order; ++i) {
            int v = table[size_t(i) * order + j];
            if (seen[size_t(v)])
                throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(j) + " repeats " + std::to_string(v));
            seen[size_t(v)] = 1;
        }
    }

    auto mul = [&](int a, int b) { return int(table[size_t(a) * order + b]); };

    if (order <= kExhaustiveAssocBound) {
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                for (int k = 0; k < order; ++k)
                    if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                        throw Error(ErrorKind::NotAssociative, "triple " + format_triple(i, j, k));
    } else {
        // spot check on a stride sample; weaker than the exhaustive pass
        int stride = std::max(1, order / 64);
        for (int i = 0; i < order; i += stride)
            for (int j = 0; j < order; j += stride)
                for (int k = 0; k < order; k += stride)
                    if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                        throw Error(ErrorKind::NotAssociative, "triple " + format_triple(i, j, k));
    }
}

} // namespace

void FiniteGroup::finalize() {
    validate_table(table_, order_);

    inverse_.assign(size_t(order_), -1);
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j) {
            if (mul(i, j) == 0 && mul(j, i) == 0) {
                inverse_[size_t(i)] = j;
                break;
            }
        }
        if (inverse_[size_t(i)] < 0)
            throw Error(ErrorKind::NoInverse, "element " + std::to_string(i));
    }

    // FNV-1a over the table contents, keyed by the order
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(uint64_t(order_));
    for (uint16_t v : table_) mix(v);
    std::ostringstream hex;
    hex << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) hex << ((h >> shift) & 0xf);
    hash_ = hex.str();
}

FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<Permutation>& generators,
                                         int order_cap) {
    if (degree < 1) throw Error(ErrorKind::InvalidPermutation, "degree must be positive");
    for (const auto& g : generators) {
        if (int(g.size()) != degree)
            throw Error(ErrorKind::InvalidPermutation, "generator degree mismatch");
        std::vector<char> hit(size_t(degree), 0);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[size_t(v)])
                throw Error(ErrorKind::InvalidPermutation, "generator is not a bijection");
            hit[size_t(v)] = 1;
        }
    }

    Permutation identity(size_t(degree), 0);
    for (int i = 0; i < degree; ++i) identity[size_t(i)] = i;

    auto compose = [degree](const Permutation& a, const Permutation& b) {
        Permutation out(size_t(degree), 0);
        for (int x = 0; x < degree; ++x) out[size_t(x)] = a[size_t(b[size_t(x)])];
        return out;
    };

    // first-discovery (BFS) order; right multiplication by generators
    std::vector<Permutation> elements{identity};
    std::map<Permutation, int> index{{identity, 0}};
    for (size_t head = 0; head < elements.size(); ++head) {
        Permutation current = elements[head];
        for (const auto& g : generators) {
            Permutation next = compose(current, g);
            if (index.emplace(next, int(elements.size())).second) {
                if (int(elements.size()) >= order_cap)
                    throw Error(ErrorKind::ClosureTooLarge,
                                "closure exceeds order cap " + std::to_string(order_cap));
                elements.push_back(std::move(next));
            }
        }
    }

    int order = int(elements.size());
    FiniteGroup g;
    g.order_ = order;
    g.table_.resize(size_t(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            g.table_[size_t(i) * order + j] = uint16_t(index.at(compose(elements[size_t(i)], elements[size_t(j)])));
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    int order = int(table.size());
    if (order < 1) throw Error(ErrorKind::NoIdentity, "empty table");
    if (order > 65535) throw Error(ErrorKind::ClosureTooLarge, "table too large");
    for (const auto& row : table)
        if (int(row.size()) != order)
            throw Error(ErrorKind::NotLatinSquare, "table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= order)
                throw Error(ErrorKind::NotLatinSquare, "entry out of range");

    // locate the two-sided identity
    int identity = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int j = 0; j < order && ok; ++j)
            if (table[size_t(e)][size_t(j)] != j || table[size_t(j)][size_t(e)] != j) ok = false;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

    // reindex so the identity is 0, preserving the order of the rest
    std::vector<int> old_to_new(size_t(order), 0);
    std::vector<int> new_to_old(size_t(order), 0);
    int next = 0;
    old_to_new[size_t(identity)] = 0;
    new_to_old[0] = identity;
    ++next;
    for (int i = 0; i < order; ++i) {
        if (i == identity) continue;
        old_to_new[size_t(i)] = next;
        new_to_old[size_t(next)] = i;
        ++next;
    }

    FiniteGroup g;
    g.order_ = order;
    g.table_.resize(size_t(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            g.table_[size_t(i) * order + j] =
                uint16_t(old_to_new[size_t(table[size_t(new_to_old[size_t(i)])][size_t(new_to_old[size_t(j)])])]);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap) {
    long long order = (long long)a.order() * b.order();
    if (order > order_cap)
        throw Error(ErrorKind::ClosureTooLarge, "product order " + std::to_string(order) +
                                                    " exceeds cap " + std::to_string(order_cap));
    int n = int(order), nb = b.order();
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        int ia = i / nb, ib = i % nb;
        for (int j = 0; j < n; ++j) {
            int ja = j / nb, jb = j % nb;
            g.table_[size_t(i) * n + j] = uint16_t(a.mul(ia, ja) * nb + b.mul(ib, jb));
        }
    }
    g.finalize();
    return g;
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
    if (int(labels.size()) != order_)
        throw Error(ErrorKind::InvalidParameter, "label count does not match order");
    labels_ = std::move(labels);
}

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int x = g;
    while (x != 0) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

ElementSet FiniteGroup::cyclic_subgroup(int g) const {
    ElementSet s(order_);
    int x = 0;
    do {
        s.add(x);
        x = mul(x, g);
    } while (x != 0);
    return s;
}

ElementSet FiniteGroup::centralizer(int x) const {
    ElementSet s(order_);
    for (int y = 0; y < order_; ++y)
        if (mul(x, y) == mul(y, x)) s.add(y);
    return s;
}

ElementSet FiniteGroup::center() const {
    ElementSet s(order_);
    for (int x = 0; x < order_; ++x) {
        bool central = true;
        for (int y = 0; y < order_ && central; ++y)
            if (mul(x, y) != mul(y, x)) central = false;
        if (central) s.add(x);
    }
    return s;
}

Ratio FiniteGroup::commutativity_degree() const {
    BigInt sum = 0;
    for (int x = 0; x < order_; ++x) sum += centralizer(x).count();
    return Ratio(sum, BigInt(order_) * order_);
}

Ratio FiniteGroup::commutativity_degree_pairs() const {
    BigInt pairs = 0;
    for (int x = 0; x < order_; ++x)
        for (int y = 0; y < order_; ++y)
            if (mul(x, y) == mul(y, x)) ++pairs;
    return Ratio(pairs, BigInt(order_) * order_);
}

int FiniteGroup::conjugacy_class_count() const {
    std::vector<char> visited(size_t(order_), 0);
    int classes = 0;
    for (int x = 0; x < order_; ++x) {
        if (visited[size_t(x)]) continue;
        ++classes;
        for (int g = 0; g < order_; ++g)
            visited[size_t(mul(mul(g, x), inv(g)))] = 1;
    }
    return classes;
}

bool FiniteGroup::is_subgroup_set(const ElementSet& s) const {
    if (s.universe_size() != order_ || !s.contains(0)) return false;
    auto mem = s.members();
    for (int h : mem) {
        if (!s.contains(inv(h))) return false;
        for (int k : mem)
            if (!s.contains(mul(h, k))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const ElementSet& s) const {
    if (!is_subgroup_set(s)) throw Error(ErrorKind::NotASubgroup, "is_normal on a non-subgroup");
    auto mem = s.members();
    for (int g = 0; g < order_; ++g)
        for (int h : mem)
            if (!s.contains(mul(mul(g, h), inv(g)))) return false;
    return true;
}

ElementSet FiniteGroup::normalizer(const ElementSet& s) const {
    auto mem = s.members();
    ElementSet out(order_);
    for (int g = 0; g < order_; ++g) {
        bool fixes = true;
        for (int h : mem)
            if (!s.contains(mul(mul(g, h), inv(g)))) {
                fixes = false;
                break;
            }
        if (fixes) out.add(g);
    }
    return out;
}

FiniteGroup::Quotient FiniteGroup::quotient(const ElementSet& n) const {
    if (!is_subgroup_set(n)) throw Error(ErrorKind::NotASubgroup, "quotient by a non-subgroup");
    if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");

    auto mem = n.members();
    std::vector<int> projection(size_t(order_), -1);
    std::vector<int> reps;
    for (int x = 0; x < order_; ++x) {
        if (projection[size_t(x)] >= 0) continue;
        int coset = int(reps.size());
        reps.push_back(x);
        for (int h : mem) projection[size_t(mul(x, h))] = coset;
    }

    int q_order = int(reps.size());
    std::vector<std::vector<int>> table(size_t(q_order), std::vector<int>(size_t(q_order), 0));
    for (int a = 0; a < q_order; ++a)
        for (int b = 0; b < q_order; ++b)
            table[size_t(a)][size_t(b)] = projection[size_t(mul(reps[size_t(a)], reps[size_t(b)]))];
    return Quotient{from_table(table), std::move(projection)};
}

FiniteGroup FiniteGroup::extract_subgroup(const ElementSet& h, std::vector<int>* embedding) const {
    if (!is_subgroup_set(h)) throw Error(ErrorKind::NotASubgroup, "extract_subgroup on a non-subgroup");
    auto mem = h.members(); // ascending, so the ambient identity 0 is first
    std::vector<int> local(size_t(order_), -1);
    for (size_t i = 0; i < mem.size(); ++i) local[size_t(mem[i])] = int(i);

    int n = int(mem.size());
    std::vector<std::vector<int>> table(size_t(n), std::vector<int>(size_t(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[size_t(i)][size_t(j)] = local[size_t(mul(mem[size_t(i)], mem[size_t(j)]))];
    if (embedding) *embedding = mem;
    return from_table(table);
}

} // namespace pdeg

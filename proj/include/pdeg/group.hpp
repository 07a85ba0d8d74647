#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdeg/element_set.hpp"
#include "pdeg/ratio.hpp"

namespace pdeg {

inline constexpr int kDefaultOrderCap = 5000;
inline constexpr int kExhaustiveAssocBound = 512;

using Permutation = std::vector<int>;

/// Immutable finite group given by its Cayley table. Element 0 is always
/// the identity; the remaining indices follow first-discovery order of
/// the construction. Safe to share across threads after construction.
class FiniteGroup {
public:
    /// Closure of permutation generators on 0..degree-1.
    static FiniteGroup from_generators(int degree, const std::vector<Permutation>& generators,
                                       int order_cap = kDefaultOrderCap);

    /// Validates all group axioms; rows/columns are reindexed so the
    /// identity lands at index 0. Associativity is exhaustive up to
    /// kExhaustiveAssocBound, generator spot checks above.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                      int order_cap = kDefaultOrderCap);

    int order() const { return order_; }
    int mul(int i, int j) const { return table_[size_t(i) * order_ + j]; }
    int inv(int i) const { return inverse_[i]; }
    int identity() const { return 0; }

    /// Hex digest of the table contents; cache key.
    const std::string& canonical_hash() const { return hash_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    int element_order(int g) const;
    ElementSet cyclic_subgroup(int g) const;
    ElementSet centralizer(int x) const;
    ElementSet center() const;

    /// d(G) via the centralizer-sum formula.
    Ratio commutativity_degree() const;
    /// d(G) via the ordered-pair count; must agree with the sum form.
    Ratio commutativity_degree_pairs() const;
    /// Number of conjugacy classes (orbit partitioning).
    int conjugacy_class_count() const;

    bool is_subgroup_set(const ElementSet& s) const;
    /// Requires s to be a subgroup.
    bool is_normal(const ElementSet& s) const;
    ElementSet normalizer(const ElementSet& s) const;

    struct Quotient; // defined below: quotient group + projection map
    /// Left-coset quotient; n must be normal.
    Quotient quotient(const ElementSet& n) const;

    /// Re-materializes a subgroup as a standalone group. The optional
    /// embedding maps new indices back to ambient indices (increasing).
    FiniteGroup extract_subgroup(const ElementSet& h, std::vector<int>* embedding = nullptr) const;

private:
    FiniteGroup() = default;
    void finalize(); // inverse table, hash, axiom checks

    int order_ = 0;
    std::vector<uint16_t> table_; // row-major, order_ x order_
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::string hash_;
};

struct FiniteGroup::Quotient {
    FiniteGroup group;
    std::vector<int> projection; // element index -> coset index
};

} // namespace pdeg

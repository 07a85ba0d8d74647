#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pdeg/group.hpp"

namespace pdeg {

// Note on naming: D/Q/SD parameters are the GROUP ORDER (D_8 is the
// dihedral group of order 8, not of degree 8); C takes the order, S/A the
// permutation degree.

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int order);      // order even, >= 2 (order 2 is C_2)
FiniteGroup make_quaternion(int order);    // power of 2, >= 8
FiniteGroup make_semidihedral(int order);  // power of 2, >= 16
FiniteGroup make_symmetric(int degree);    // degree >= 1
FiniteGroup make_alternating(int degree);  // degree >= 1

enum class Family { C, D, Q, SD, S, A, File };

struct GroupSpecTerm {
    Family family;
    int parameter = 0;   // unused for File
    std::string path;    // File only
};

/// Parsed "D:8", "C:2xC:4", "file:group.json" style spec; terms combine
/// by direct product.
struct GroupSpec {
    std::vector<GroupSpecTerm> terms;
    std::string text; // original, normalized
};

GroupSpec parse_spec(const std::string& text);

/// Realizes the spec. File terms load the group-core file formats.
FiniteGroup build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

} // namespace pdeg

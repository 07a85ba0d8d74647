#include "pdeg/families.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "pdeg/errors.hpp"
#include "pdeg/io.hpp"

namespace pdeg {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Permutation cycle(int degree) {
    Permutation p(size_t(degree), 0);
    for (int i = 0; i < degree; ++i) p[size_t(i)] = (i + 1) % degree;
    return p;
}

} // namespace

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "cyclic order must be >= 1");
    if (n == 1) return FiniteGroup::from_generators(1, {});
    return FiniteGroup::from_generators(n, {cycle(n)});
}

FiniteGroup make_dihedral(int order) {
    if (order < 2 || order % 2)
        throw Error(ErrorKind::InvalidParameter, "dihedral order must be even and >= 2");
    int n = order / 2;
    if (n == 1) return make_cyclic(2);
    if (n == 2) // the Klein group; the 2-point rotation action is not faithful
        return FiniteGroup::from_generators(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    Permutation reflection(size_t(n), 0);
    for (int i = 0; i < n; ++i) reflection[size_t(i)] = (n - i) % n;
    return FiniteGroup::from_generators(n, {cycle(n), reflection});
}

FiniteGroup make_quaternion(int order) {
    if (!is_power_of_two(order) || order < 8)
        throw Error(ErrorKind::InvalidParameter, "quaternion order must be a power of 2, >= 8");
    // elements a^i b^e, i < n, e in {0,1}; b^2 = a^{n/2}, b a b^-1 = a^-1
    int n = order / 2, half = n / 2;
    auto id = [n](int i, int e) { return e * n + i; };
    std::vector<std::vector<int>> table(size_t(order), std::vector<int>(size_t(order), 0));
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int exp = e ? (i - j + n) % n : (i + j) % n;
                    if (e && f) exp = (exp + half) % n;
                    table[size_t(id(i, e))][size_t(id(j, f))] = id(exp, e ^ f);
                }
    return FiniteGroup::from_table(table);
}

FiniteGroup make_semidihedral(int order) {
    if (!is_power_of_two(order) || order < 16)
        throw Error(ErrorKind::InvalidParameter, "semidihedral order must be a power of 2, >= 16");
    // elements a^i b^e, i < n, e in {0,1}; b^2 = 1, b a b^-1 = a^{n/2 - 1}
    int n = order / 2, r = n / 2 - 1;
    auto id = [n](int i, int e) { return e * n + i; };
    std::vector<std::vector<int>> table(size_t(order), std::vector<int>(size_t(order), 0));
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int exp = e ? (i + r * j) % n : (i + j) % n;
                    table[size_t(id(i, e))][size_t(id(j, f))] = id(exp, e ^ f);
                }
    return FiniteGroup::from_table(table);
}

FiniteGroup make_symmetric(int degree) {
    if (degree < 1) throw Error(ErrorKind::InvalidParameter, "symmetric degree must be >= 1");
    if (degree == 1) return FiniteGroup::from_generators(1, {});
    Permutation swap(size_t(degree), 0);
    for (int i = 0; i < degree; ++i) swap[size_t(i)] = i;
    swap[0] = 1;
    swap[1] = 0;
    return FiniteGroup::from_generators(degree, {cycle(degree), swap});
}

FiniteGroup make_alternating(int degree) {
    if (degree < 1) throw Error(ErrorKind::InvalidParameter, "alternating degree must be >= 1");
    if (degree <= 2) return FiniteGroup::from_generators(std::max(1, degree), {});
    // 3-cycles (0 1 k) generate A_n
    std::vector<Permutation> generators;
    for (int k = 2; k < degree; ++k) {
        Permutation p(size_t(degree), 0);
        for (int i = 0; i < degree; ++i) p[size_t(i)] = i;
        p[0] = 1;
        p[1] = k;
        p[size_t(k)] = 0;
        generators.push_back(std::move(p));
    }
    return FiniteGroup::from_generators(degree, generators);
}

namespace {

struct Scanner {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw Error(ErrorKind::ParseError,
                    message + " at position " + std::to_string(pos));
    }
};

GroupSpecTerm parse_term(Scanner& scan) {
    const std::string& s = scan.text;
    size_t colon = s.find(':', scan.pos);
    if (colon == std::string::npos) scan.fail("expected ':' in term");
    std::string head = s.substr(scan.pos, colon - scan.pos);
    std::string lowered = head;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });

    GroupSpecTerm term;
    if (lowered == "c") term.family = Family::C;
    else if (lowered == "d") term.family = Family::D;
    else if (lowered == "q") term.family = Family::Q;
    else if (lowered == "sd") term.family = Family::SD;
    else if (lowered == "s") term.family = Family::S;
    else if (lowered == "a") term.family = Family::A;
    else if (lowered == "file") term.family = Family::File;
    else scan.fail("unknown family '" + head + "'");

    scan.pos = colon + 1;
    if (term.family == Family::File) {
        // a path runs to the end of the spec; combine file groups by
        // listing the file term last
        if (scan.pos == s.size()) scan.fail("empty path");
        term.path = s.substr(scan.pos);
        scan.pos = s.size();
        return term;
    }

    size_t start = scan.pos;
    while (scan.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[scan.pos]))) ++scan.pos;
    if (scan.pos == start) scan.fail("expected integer");
    long value = 0;
    for (size_t i = start; i < scan.pos; ++i) {
        value = value * 10 + (s[i] - '0');
        if (value > 1000000) scan.fail("parameter too large");
    }
    term.parameter = int(value);

    switch (term.family) {
        case Family::C:
            if (term.parameter < 1) scan.fail("C order must be >= 1");
            break;
        case Family::D:
            if (term.parameter < 4 || term.parameter % 2)
                scan.fail("D order must be even and >= 4");
            break;
        case Family::Q:
            if (!is_power_of_two(term.parameter) || term.parameter < 8)
                scan.fail("Q order must be a power of 2, >= 8");
            break;
        case Family::SD:
            if (!is_power_of_two(term.parameter) || term.parameter < 16)
                scan.fail("SD order must be a power of 2, >= 16");
            break;
        case Family::S:
        case Family::A:
            if (term.parameter < 1) scan.fail("degree must be >= 1");
            break;
        case Family::File:
            break;
    }
    return term;
}

} // namespace

GroupSpec parse_spec(const std::string& text) {
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, "whitespace not allowed in spec");
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty spec");

    GroupSpec spec;
    spec.text = text;
    Scanner scan{text};
    spec.terms.push_back(parse_term(scan));
    while (scan.pos < text.size()) {
        char sep = text[scan.pos];
        if (sep != 'x' && sep != 'X') scan.fail("expected 'x' between terms");
        ++scan.pos;
        spec.terms.push_back(parse_term(scan));
    }
    return spec;
}

FiniteGroup build_group(const GroupSpec& spec, int order_cap) {
    std::optional<FiniteGroup> result;
    for (const auto& term : spec.terms) {
        FiniteGroup g = [&] {
            switch (term.family) {
                case Family::C: return make_cyclic(term.parameter);
                case Family::D: return make_dihedral(term.parameter);
                case Family::Q: return make_quaternion(term.parameter);
                case Family::SD: return make_semidihedral(term.parameter);
                case Family::S: return make_symmetric(term.parameter);
                case Family::A: return make_alternating(term.parameter);
                case Family::File: return load_group_file(term.path, order_cap);
            }
            throw Error(ErrorKind::InvalidParameter, "unknown family");
        }();
        if (g.order() > order_cap)
            throw Error(ErrorKind::ClosureTooLarge, "group exceeds order cap");
        result = result ? FiniteGroup::direct_product(*result, g, order_cap) : std::move(g);
    }
    return *result;
}

} // namespace pdeg

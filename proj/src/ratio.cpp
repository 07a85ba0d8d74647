#include "pdeg/ratio.hpp"

#include <sstream>

#include "pdeg/errors.hpp"

namespace pdeg {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::NotLatinSquare: return "NotLatinSquare";
        case ErrorKind::NoIdentity: return "NoIdentity";
        case ErrorKind::NoInverse: return "NoInverse";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::SubgroupNotInLattice: return "SubgroupNotInLattice";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::QuasicenterNotNormal: return "QuasicenterNotNormal";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::CacheError: return "CacheError";
    }
    return "UnknownError";
}

Ratio Ratio::from_strings(const std::string& num, const std::string& den) {
    BigInt n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw Error(ErrorKind::ParseError, "bad integer in ratio: " + num + "/" + den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return Ratio(n, d);
}

std::string Ratio::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Ratio::approx(int significant_digits) const {
    mpf_class f(value_, 256);
    mp_exp_t exp;
    std::string digits = f.get_str(exp, 10, size_t(significant_digits));
    if (digits.empty()) return "0";
    bool neg = digits[0] == '-';
    std::string mant = neg ? digits.substr(1) : digits;
    std::ostringstream out;
    if (neg) out << '-';
    // scientific-free rendering for the exponent range that actually occurs
    if (exp <= 0) {
        out << "0.";
        for (mp_exp_t i = 0; i < -exp; ++i) out << '0';
        out << mant;
    } else if (size_t(exp) >= mant.size()) {
        out << mant;
        for (size_t i = mant.size(); i < size_t(exp); ++i) out << '0';
    } else {
        out << mant.substr(0, size_t(exp)) << "." << mant.substr(size_t(exp));
    }
    return out.str();
}

} // namespace pdeg

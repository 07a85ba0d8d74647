#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pdeg {

using BigInt = mpz_class;

/// Reduced fraction with arbitrary-precision numerator/denominator.
/// All degree values travel as Ratio; floating point only appears in
/// display approximations.
class Ratio {
public:
    Ratio() : value_(0) {}
    Ratio(long num, long den = 1) : value_(num, den) { value_.canonicalize(); }
    Ratio(const BigInt& num, const BigInt& den) : value_(num, den) { value_.canonicalize(); }
    explicit Ratio(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    static Ratio from_strings(const std::string& num, const std::string& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    std::string num_string() const { return value_.get_num().get_str(); }
    std::string den_string() const { return value_.get_den().get_str(); }

    /// "5/6" or "1" when the denominator is 1.
    std::string str() const;
    /// Decimal approximation with the given number of significant digits.
    std::string approx(int significant_digits = 12) const;
    double to_double() const { return value_.get_d(); }

    friend Ratio operator+(const Ratio& a, const Ratio& b) { return Ratio(mpq_class(a.value_ + b.value_)); }
    friend Ratio operator-(const Ratio& a, const Ratio& b) { return Ratio(mpq_class(a.value_ - b.value_)); }
    friend Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(mpq_class(a.value_ * b.value_)); }
    friend Ratio operator/(const Ratio& a, const Ratio& b) { return Ratio(mpq_class(a.value_ / b.value_)); }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return a.value_ != b.value_; }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_;
};

} // namespace pdeg

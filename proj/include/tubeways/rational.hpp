#pragma once

#include "tubeways/bigint.hpp"

#include <string>

namespace tubeways {

/// Exact rational scalar, always in canonical form: gcd(num, den) == 1 and
/// den > 0. All decision geometry in the library runs on these; doubles
/// appear only in rendering.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(BigInt num, BigInt den);

    /// Accepts "p", "-p", "p/q" with optional sign on p.
    static Rational from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // o must be nonzero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string to_string() const; // "p" or "p/q"
    /// Decimal rendering with the given number of significant digits,
    /// round-half-away; exact digit computation, no floating point.
    std::string to_decimal(int significant_digits) const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::size_t bit_size() const { return num_.bit_length() + den_.bit_length(); }

    static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

} // namespace tubeways

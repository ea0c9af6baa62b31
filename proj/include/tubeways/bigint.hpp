#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tubeways {

/// Arbitrary-precision signed integer on base-2^32 limbs, little-endian.
/// Covers exactly the operations the rational kernel needs: ring
/// arithmetic, truncated division, gcd, decimal I/O and bit length.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(const std::string& s); // optional sign + decimal digits

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated toward zero, like C99. Divisor must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b); // nonnegative

    /// Bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;

    std::string to_string() const;
    /// Lossy, for rendering and diagnostics only.
    double to_double() const;

    bool fits_int64() const;
    std::int64_t as_int64() const; // precondition: fits_int64()

private:
    // normalized: no trailing zero limbs, zero is {} with negative_ == false
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // precondition: |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

} // namespace tubeways

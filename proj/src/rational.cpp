#include "tubeways/rational.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>

namespace tubeways {

void Rational::normalize() {
    if (den_.is_zero())
        raise(Errc::Internal, "rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }
Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt::from_string(s), BigInt(1));
    BigInt n = BigInt::from_string(s.substr(0, slash));
    BigInt d = BigInt::from_string(s.substr(slash + 1));
    if (d.is_zero())
        raise(Errc::ParseError, "zero denominator in rational: " + s);
    return Rational(std::move(n), std::move(d));
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        raise(Errc::Internal, "rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::to_string() const {
    if (is_integer())
        return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(int significant_digits) const {
    if (is_zero())
        return "0";
    bool neg = sign() < 0;
    BigInt n = num_.abs();
    const BigInt ten(10);
    // exponent e with |value| in [10^(e-1), 10^e); e <= 0 for fractions
    int exponent = 0;
    BigInt lo = n, hi = den_;
    if (lo >= hi) {
        while (lo >= hi) {
            hi = hi * ten;
            ++exponent;
        }
    } else {
        while (lo * ten <= hi) {
            lo = lo * ten;
            --exponent;
        }
        if (lo < hi)
            --exponent; // value strictly below 10^exponent
        exponent += 1;
    }
    BigInt scaled_num = n;
    if (exponent < significant_digits) {
        for (int i = 0; i < significant_digits - exponent; ++i)
            scaled_num = scaled_num * ten;
    }
    BigInt scaled_den = den_;
    for (int i = 0; i < std::max(0, exponent - significant_digits); ++i)
        scaled_den = scaled_den * ten;
    BigInt q, r;
    BigInt::divmod(scaled_num, scaled_den, q, r);
    // round half away from zero
    if (r * BigInt(2) >= scaled_den)
        q = q + BigInt(1);
    std::string digits = q.to_string();
    int point = exponent; // digits before the decimal point
    std::string out;
    if (neg)
        out.push_back('-');
    if (static_cast<int>(digits.size()) > significant_digits) {
        // rounding overflowed into one more digit (e.g. 999 -> 1000)
        ++point;
    }
    if (point <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-point), '0');
        out += digits;
    } else if (point >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<std::size_t>(point - static_cast<int>(digits.size())), '0');
    } else {
        out += digits.substr(0, static_cast<std::size_t>(point));
        out += ".";
        out += digits.substr(static_cast<std::size_t>(point));
    }
    // strip trailing fractional zeros and a bare point
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
    }
    return out;
}

} // namespace tubeways

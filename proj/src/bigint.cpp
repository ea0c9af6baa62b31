#include "tubeways/bigint.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tubeways {

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
    if (limbs_.empty())
        negative_ = false;
}

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    // careful with INT64_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    if (mag)
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32)
        limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_string(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size())
        raise(Errc::ParseError, "empty integer literal");
    BigInt r;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            raise(Errc::ParseError, "bad digit in integer literal: " + s);
        // r = r*10 + digit, done limb-wise to avoid temporaries
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : r.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10u + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry)
            r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    r.trim();
    r.negative_ = neg && !r.limbs_.empty();
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i])
            return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry)
        out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (cur < 0) {
            cur += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero())
        r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (negative_ == o.negative_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.negative_ = negative_;
    } else {
        int c = cmp_mag(*this, o);
        if (c == 0)
            return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.negative_ = negative_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.negative_ = o.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero())
        return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = limbs_[i];
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = ai * o.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = carry + r.limbs_[k];
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != o.negative_;
    r.trim();
    return r;
}

// Shift-subtract long division on 32-bit limbs with 64-bit trial quotients.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero())
        raise(Errc::Internal, "division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    if (b.limbs_.size() == 1) {
        std::uint64_t d = b.limbs_[0];
        std::vector<std::uint32_t> qs(a.limbs_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            qs[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q = BigInt();
        q.limbs_ = std::move(qs);
        q.trim();
        q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
        r = BigInt(static_cast<std::int64_t>(rem));
        if (!r.is_zero())
            r.negative_ = a.negative_;
        return;
    }

    // Knuth algorithm D. Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    std::uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= shift ? (v[i] << shift) : v[i];
            if (shift)
                out[i + 1] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) >> (32 - shift)));
        }
        return out;
    };
    std::vector<std::uint32_t> u = shl(a.limbs_);
    std::vector<std::uint32_t> v = shl(b.limbs_);
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    std::vector<std::uint32_t> qs(m, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsec = n >= 2 ? v[n - 2] : 0;
    for (std::size_t j = m; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / vtop;
        std::uint64_t rhat = num % vtop;
        if (qhat > 0xffffffffu)
            qhat = 0xffffffffu;
        while (rhat <= 0xffffffffu &&
               qhat * vsec > ((rhat << 32) | (j + n >= 2 ? u[j + n - 2] : 0))) {
            --qhat;
            rhat += vtop;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t cur = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (cur < 0) {
                cur += (std::int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(cur);
        }
        std::int64_t last = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (last < 0) {
            // qhat was one too large; add v back
            last += (std::int64_t(1) << 32);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                c2 = cur >> 32;
            }
            last += static_cast<std::int64_t>(c2);
            last &= 0xffffffff;
        }
        u[j + n] = static_cast<std::uint32_t>(last);
        qs[j] = static_cast<std::uint32_t>(qhat);
    }
    q = BigInt();
    q.limbs_ = std::move(qs);
    q.trim();
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    // remainder = u >> shift, low n limbs
    r = BigInt();
    r.limbs_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t lo = u[i] >> shift;
        std::uint64_t hi = shift ? (static_cast<std::uint64_t>(u[i + 1]) << (32 - shift)) : 0;
        r.limbs_[i] = static_cast<std::uint32_t>((lo | hi) & 0xffffffffu);
    }
    r.trim();
    r.negative_ = !r.is_zero() && a.negative_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_)
        return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty())
        return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::string BigInt::to_string() const {
    if (is_zero())
        return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // divide by 1e9, collecting 9 decimal digits per round
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0)
            work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
            if (work.empty() && rem == 0)
                break;
        }
    }
    while (digits.size() > 1 && digits.back() == '0')
        digits.pop_back();
    if (negative_)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        r = r * 4294967296.0 + limbs_[i];
    return negative_ ? -r : r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2)
        return false;
    if (limbs_.size() < 2)
        return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= 0x8000000000000000ull : mag < 0x8000000000000000ull;
}

std::int64_t BigInt::as_int64() const {
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1)
        mag |= limbs_[0];
    if (limbs_.size() >= 2)
        mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
    case Errc::SameX: return "SameX";
    case Errc::DegenerateTube: return "DegenerateTube";
    case Errc::DegenerateContact: return "DegenerateContact";
    case Errc::DegenerateOverlap: return "DegenerateOverlap";
    case Errc::HoleNotRepresentable: return "HoleNotRepresentable";
    case Errc::NotSingle: return "NotSingle";
    case Errc::AmbiguousOrder: return "AmbiguousOrder";
    case Errc::ConstructionFailure: return "ConstructionFailure";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Unsupported: return "Unsupported";
    case Errc::EarSelectionFailure: return "EarSelectionFailure";
    case Errc::EmptyAnchor: return "EmptyAnchor";
    case Errc::FragmentTooLarge: return "FragmentTooLarge";
    case Errc::EmbeddingInvalid: return "EmbeddingInvalid";
    case Errc::Internal: return "Internal";
    }
    return "Error";
}

} // namespace tubeways

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tubeways/bigint.hpp"
#include "tubeways/rational.hpp"

#include <cstdint>
#include <random>

using tubeways::BigInt;
using tubeways::Rational;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(7).to_string() == "7");
    CHECK(BigInt(-12345).to_string() == "-12345");
    CHECK((BigInt(1) + BigInt(-1)).is_zero());
    CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
    CHECK(BigInt::from_string("-00012").to_string() == "-12");
    CHECK(BigInt::from_string("340282366920938463463374607431768211456").bit_length() == 129);
}

TEST_CASE("bigint int64 cross-check") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> d(-1000000000LL, 1000000000LL);
    for (int it = 0; it < 2000; ++it) {
        std::int64_t a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_string() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).to_string() == std::to_string(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint wide division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);
    CHECK(q.to_string() == "124999998748437501153");
    CHECK(r.to_string() == "142745764920524676");
    // divisor larger than dividend
    BigInt::divmod(b, a, q, r);
    CHECK(q.is_zero());
    CHECK(r == b);
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_string() == "6");
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).to_string() == "6");
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_string() == "5");
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(BigInt::gcd(big * BigInt(6), big * BigInt(4)) == big * BigInt(2));
}

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(0, 17).to_string() == "0");
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK(Rational::from_string("-6") == Rational(-6));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK((Rational(1, 3) / Rational(2, 3)) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational int64 cross-check") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    std::uniform_int_distribution<std::int64_t> e(1, 50);
    for (int it = 0; it < 1000; ++it) {
        std::int64_t an = d(rng), ad = e(rng), bn = d(rng), bd = e(rng);
        Rational a(an, ad), b(bn, bd);
        // compare against exact integer cross-multiplication
        CHECK((a < b) == (an * bd < bn * ad));
        Rational sum = a + b;
        CHECK(sum * Rational(ad * bd) == Rational(an * bd + bn * ad));
    }
}

TEST_CASE("rational decimal rendering") {
    CHECK(Rational(1, 2).to_decimal(9) == "0.5");
    CHECK(Rational(1, 3).to_decimal(9) == "0.333333333");
    CHECK(Rational(2, 3).to_decimal(9) == "0.666666667");
    CHECK(Rational(-1, 8).to_decimal(9) == "-0.125");
    CHECK(Rational(1000).to_decimal(9) == "1000");
    CHECK(Rational(999999999999LL).to_decimal(9) == "1000000000000");
    CHECK(Rational(1, 1000000).to_decimal(3) == "0.000001");
    CHECK(Rational(0).to_decimal(9) == "0");
}

TEST_CASE("rational bit size") {
    Rational r(3, 8);
    CHECK(r.bit_size() == 2 + 4); // 3 -> 2 bits, 8 -> 4 bits
}

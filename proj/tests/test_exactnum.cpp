#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "matel/rational.hpp"

using namespace matel::exactnum;
using matel::pole_error;
using matel::usage_error;

TEST_CASE("frac canonicalizes sign and gcd") {
    CHECK(frac(2, 4) == frac(1, 2));
    CHECK(frac(3, -6) == frac(-1, 2));
    CHECK(frac(-4, -8) == frac(1, 2));
    CHECK(frac(0, 7) == 0);
    CHECK_THROWS_AS(frac(1, 0), usage_error);
}

TEST_CASE("to_string and parse_rational invert each other") {
    CHECK(to_string(frac(-7, 3)) == "-7/3");
    CHECK(to_string(frac(5, 1)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-61/900") == frac(-61, 900));
    CHECK(parse_rational("42") == 42);
    CHECK(parse_rational("-527/14700") == frac(-527, 14700));
    CHECK(parse_rational("4/6") == frac(2, 3));

    std::mt19937_64 gen(7u);
    for (int trial = 0; trial < 200; ++trial) {
        const long num = static_cast<long>(gen() % 20001) - 10000;
        const long den = static_cast<long>(gen() % 999) + 1;
        const Rational value = frac(num, den);
        CHECK(parse_rational(to_string(value)) == value);
    }

    CHECK_THROWS_AS(parse_rational(""), usage_error);
    CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
    CHECK_THROWS_AS(parse_rational("a/b"), usage_error);
    CHECK_THROWS_AS(parse_rational("1.5"), usage_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), usage_error);
    CHECK_THROWS_AS(parse_rational("--4"), usage_error);
    CHECK_THROWS_AS(parse_rational("2 "), usage_error);
}

TEST_CASE("integer predicates and conversions") {
    CHECK(is_integer(frac(6, 3)));
    CHECK_FALSE(is_integer(frac(1, 2)));
    CHECK(is_nonpositive_integer(Rational(0)));
    CHECK(is_nonpositive_integer(Rational(-3)));
    CHECK_FALSE(is_nonpositive_integer(Rational(1)));
    CHECK_FALSE(is_nonpositive_integer(frac(-1, 2)));
    CHECK(to_long(frac(-12, 4)) == -3);
    CHECK(to_double(frac(1, 4)) == 0.25);
}

TEST_CASE("pow_int covers negative exponents and rejects 0^-k") {
    CHECK(pow_int(frac(2, 3), 3) == frac(8, 27));
    CHECK(pow_int(frac(2, 3), 0) == 1);
    CHECK(pow_int(frac(2, 3), -2) == frac(9, 4));
    CHECK(pow_int(Rational(0), 5) == 0);
    CHECK(pow_int(Rational(0), 0) == 1);
    CHECK_THROWS_AS(pow_int(Rational(0), -1), pole_error);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == parse_rational("2432902008176640000"));
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(factorial(-1), usage_error);
}

TEST_CASE("pochhammer forward and backward") {
    CHECK(pochhammer(frac(1, 2), 3) == frac(15, 8));
    CHECK(pochhammer(Rational(-3), 3) == -6);
    CHECK(pochhammer(Rational(-3), 4) == 0);
    CHECK(pochhammer(Rational(5), 0) == 1);
    // (a)_{-n} = 1/(a-n)...(a-1)
    CHECK(pochhammer(Rational(5), -2) == frac(1, 12));
    CHECK(pochhammer(frac(1, 2), -1) == -2);
    CHECK_THROWS_AS(pochhammer(Rational(1), -2), pole_error);

    // (a)_{m+n} = (a)_m (a+m)_n for random rational a
    std::mt19937_64 gen(11u);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = frac(static_cast<long>(gen() % 41) - 20,
                                static_cast<long>(gen() % 7) + 1);
        const long m = static_cast<long>(gen() % 6);
        const long n = static_cast<long>(gen() % 6);
        CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n));
    }
}

TEST_CASE("tracked products divide out matching zeros") {
    // (-3)_5 has one zero factor; (-3)_5 / (-3)_5 must be 1, not 0/0.
    const TrackedProduct num = pochhammer_tracked(Rational(-3), 5);
    const TrackedProduct den = pochhammer_tracked(Rational(-3), 5);
    CHECK(num.zero_count == 1);
    CHECK(tracked_ratio(num, den) == 1);

    // More zeros upstairs than downstairs: exact zero.
    TrackedProduct plain;
    plain.multiply_factor(Rational(7));
    CHECK(tracked_ratio(num, plain) == 0);

    // More zeros downstairs: a genuine pole.
    CHECK_THROWS_AS(tracked_ratio(plain, num), pole_error);

    // collapse() folds the zeros back in.
    CHECK(num.collapse() == 0);
    CHECK(plain.collapse() == 7);

    TrackedProduct merged = pochhammer_tracked(Rational(-1), 2);
    merged *= pochhammer_tracked(Rational(-2), 1);
    CHECK(merged.zero_count == 1);
    CHECK(merged.nonzero_part == 2); // (-1) from the first product, (-2) from the second
}

TEST_CASE("tracked pochhammer equals plain pochhammer when nonzero") {
    std::mt19937_64 gen(13u);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a = frac(static_cast<long>(gen() % 31) - 15,
                                static_cast<long>(gen() % 5) + 1);
        const long n = static_cast<long>(gen() % 8);
        CHECK(pochhammer_tracked(a, n).collapse() == pochhammer(a, n));
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == frac(25, 12));
    CHECK(odd_harmonic(0) == 1);
    CHECK(odd_harmonic(1) == frac(4, 3));
    CHECK(odd_harmonic(2) == frac(23, 15));
    // h_{2n+1} = hodd_n + h_n / 2 ties the two tables together.
    for (long n = 0; n <= 30; ++n)
        CHECK(harmonic(2 * n + 1) == odd_harmonic(n) + harmonic(n) / 2);
    CHECK_THROWS_AS(harmonic(-1), usage_error);
}

TEST_CASE("memoized tables are safe under concurrent growth") {
    std::vector<std::thread> threads;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            Rational acc = 0;
            for (long r = 0; r <= 400; ++r) acc += harmonic(r) + odd_harmonic(r);
            results[static_cast<std::size_t>(t)] = acc;
        });
    for (auto& thread : threads) thread.join();
    for (int t = 1; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == results[0]);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "matel/gegenbauer.hpp"
#include "matel/matelem.hpp"
#include "matel/poly.hpp"

using namespace matel::gegenbauer;
using matel::exactnum::frac;
using matel::exactnum::Rational;
using matel::polyops::Poly;

TEST_CASE("ultraspherical family from the recurrence") {
    const GegenbauerFamily family = gegenbauer_family(frac(3, 2), 4);
    REQUIRE(family.polys.size() == 5);
    CHECK(family.polys[0] == Poly::constant(Rational(1)));
    CHECK(family.polys[1] == Poly::monomial(1, Rational(3)));
    // 2 C_2 = 2x (5/2) C_1 - 3 C_0
    CHECK(family.polys[2] == Poly({frac(-3, 2), Rational(0), frac(15, 2)}));
}

TEST_CASE("recurrence matches the generating-function coefficients") {
    std::mt19937_64 gen(43u);
    for (int trial = 0; trial < 8; ++trial) {
        Rational nu = frac(static_cast<long>(gen() % 17) - 8, static_cast<long>(gen() % 4) + 1);
        if (nu == 0) nu = frac(1, 3);
        const GegenbauerFamily family = gegenbauer_family(nu, 10);
        for (int j = 0; j <= 10; ++j) CHECK(family.polys[static_cast<std::size_t>(j)] ==
                                            gegenbauer_gf_coeff(nu, j));
    }
}

TEST_CASE("order one half reduces to Legendre") {
    const GegenbauerFamily family = gegenbauer_family(frac(1, 2), 10);
    for (int n = 0; n <= 10; ++n)
        CHECK(family.polys[static_cast<std::size_t>(n)] == matel::polyops::legendre(n));
}

TEST_CASE("ultraspherical-Legendre product integrals") {
    // pinned: nu = 3/2, j = 2, s = 0 gives 2 on both sides
    const auto [lhs, rhs] = gegleg_integral_check(frac(3, 2), 2, 0);
    CHECK(lhs == 2);
    CHECK(rhs == 2);
    std::mt19937_64 gen(47u);
    for (int trial = 0; trial < 20; ++trial) {
        Rational nu = frac(static_cast<long>(gen() % 21) - 10, static_cast<long>(gen() % 4) + 1);
        if (matel::exactnum::is_nonpositive_integer(nu)) nu += frac(1, 2);
        for (int j = 0; j <= 8; ++j)
            for (int s = 0; 2 * s <= j; ++s) {
                const auto [a, b] = gegleg_integral_check(nu, j, s);
                CHECK(a == b);
            }
    }
}

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_T(0) == Poly::constant(Rational(1)));
    CHECK(chebyshev_T(1) == Poly::monomial(1));
    CHECK(chebyshev_T(3) == Poly({Rational(0), Rational(-3), Rational(0), Rational(4)}));
    CHECK(chebyshev_T(5) ==
          Poly({Rational(0), Rational(5), Rational(0), Rational(-20), Rational(0), Rational(16)}));
}

TEST_CASE("chebyshev-Legendre product integrals: closed form verified everywhere") {
    const auto [lhs21, rhs21] = cheb_leg_integral_check(2, 1);
    CHECK(lhs21 == frac(-2, 3));
    CHECK(rhs21 == frac(-2, 3));
    const auto [lhs10, rhs10] = cheb_leg_integral_check(1, 0);
    CHECK(lhs10 == frac(4, 3));
    CHECK(rhs10 == frac(4, 3));
    const auto [lhs42, rhs42] = cheb_leg_integral_check(4, 2);
    CHECK(lhs42 == frac(-1, 15));
    CHECK(rhs42 == frac(-1, 15));
    const auto [lhs30, rhs30] = cheb_leg_integral_check(3, 0);
    CHECK(lhs30 == frac(32, 105));
    CHECK(rhs30 == frac(32, 105));
    for (int j = 1; j <= 12; ++j)
        for (int s = 0; 2 * s <= j; ++s) {
            const auto [lhs, rhs] = cheb_leg_integral_check(j, s);
            INFO("j = " << j << ", s = " << s);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("distance-kernel expansion partial sums") {
    const double value = polya_szego_partial(1.0, 0.3, -0.4, 5000);
    CHECK(std::abs(value - 0.7) <= 1e-5);
    const double coarse = polya_szego_partial(1.0, 0.3, -0.4, 100);
    CHECK(std::abs(coarse - 0.7) < 1e-2);
    CHECK(std::abs(coarse - 0.7) > std::abs(value - 0.7));
}

TEST_CASE("log-kernel expansion partial sums") {
    const double value = cheb_log_expansion_check(0.3, -0.4, 10000);
    CHECK(std::abs(value - std::log(0.7)) <= 1e-3);
}

TEST_CASE("expansion route reproduces the standard-basis power entry") {
    const double via_expansion = psint_route_B(0.5, 2, 0);
    const double direct = matel::matelem::B_power_float(2, 0, frac(1, 2));
    CHECK(std::abs(via_expansion - direct) <= 1e-8 * std::abs(direct));
    const double diag = psint_route_B(1.5, 2, 2);
    const double diag_direct = matel::matelem::B_power_float(2, 2, frac(3, 2));
    CHECK(std::abs(diag - diag_direct) <= 1e-8 * std::abs(diag_direct));
}

TEST_CASE("order-derivative of the ultraspherical family at zero") {
    CHECK(nu_derivative_at_zero(0).is_zero());
    for (int n = 1; n <= 8; ++n)
        CHECK(nu_derivative_at_zero(n) == frac(2, n) * chebyshev_T(n));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numeric>
#include <random>

#include "matel/oracle.hpp"
#include "matel/poly.hpp"

using namespace matel::oracle;
using matel::math_domain_error;
using matel::quadrature_error;
using matel::usage_error;
using matel::exactnum::frac;
using matel::exactnum::Rational;
using matel::exactnum::to_double;

TEST_CASE("exact power integrals: pinned values") {
    // (x-y)^a against constants integrates the kernel alone
    for (long a = 0; a <= 5; ++a)
        CHECK(exact_power_L(0, 0, a) == frac(1, (a + 1) * (a + 2)));
    CHECK(exact_power_L(1, 0, 0) == frac(1, 6));
    CHECK(exact_power_L(2, 0, 1) == frac(1, 60));
    CHECK(exact_power_L(3, 0, 2) == frac(1, 420));
    CHECK(exact_power_L(3, 1, 4) == frac(-1, 420));
    CHECK(exact_power_L(2, 1, 1) == 0);
    CHECK_THROWS_AS(exact_power_L(0, 0, -1), usage_error);
}

TEST_CASE("exact log integrals: pinned values") {
    CHECK(exact_log_L(0, 0) == frac(-3, 4));
    CHECK(exact_log_L(2, 0) == frac(1, 24));
    CHECK(exact_log_L(3, 0) == frac(-1, 120));
    CHECK(exact_log_L(2, 1) == frac(-61, 900));
    CHECK(exact_log_L(3, 3) == frac(-1, 48));
}

TEST_CASE("gauss-legendre rules integrate polynomials to machine precision") {
    std::vector<double> nodes, weights;
    for (int order : {8, 13, 32}) {
        gauss_legendre(order, nodes, weights);
        REQUIRE(static_cast<int>(nodes.size()) == order);
        double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
        CHECK(std::abs(weight_sum - 2.0) <= 1e-14);
        // exact through degree 2*order - 1
        for (int k = 0; k <= 2 * order - 1; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i)
                acc += weights[i] * std::pow(nodes[i], k);
            const double truth = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
            CHECK(std::abs(acc - truth) <= 1e-13);
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0, nodes, weights), usage_error);
}

TEST_CASE("float recurrence matches the exact polynomials") {
    // Evaluate the exact-coefficient polynomial in rational arithmetic: the
    // monomial basis cancels catastrophically in doubles at high degree.
    std::mt19937_64 gen(31u);
    for (int n = 0; n <= 16; ++n) {
        const auto poly = matel::polyops::legendre_shifted(n);
        for (int trial = 0; trial < 20; ++trial) {
            const long numer = static_cast<long>(gen() % 10001);
            const matel::exactnum::Rational x = matel::exactnum::frac(numer, 10000);
            const double exact = matel::exactnum::to_double(poly(x));
            CHECK(std::abs(shifted_legendre_value(n, to_double(x)) - exact) <= 1e-12);
        }
    }
}

TEST_CASE("pairwise sum is deterministic and order-structured") {
    std::vector<double> terms;
    std::mt19937_64 gen(37u);
    for (int i = 0; i < 1000; ++i)
        terms.push_back((static_cast<double>(gen() % 2000001) - 1000000.0) / 997.0);
    const double first = pairwise_sum(terms);
    const double second = pairwise_sum(terms);
    CHECK(std::memcmp(&first, &second, sizeof(double)) == 0);
    CHECK(std::abs(first - std::accumulate(terms.begin(), terms.end(), 0.0)) <= 1e-6);
    CHECK(pairwise_sum({}) == 0.0);
    CHECK(pairwise_sum({1.5}) == 1.5);
}

TEST_CASE("quadrature referee reproduces the exact log values") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}, {3, 3}, {5, 2}}) {
        const QuadOutcome outcome = quad_log_L_detail(m, n);
        CHECK(outcome.error_estimate <= 1e-10);
        CHECK(outcome.rounds >= 1);
        CHECK(std::abs(outcome.value - to_double(exact_log_L(m, n))) <= 1e-9);
    }
}

TEST_CASE("quadrature referee reproduces exact power values, integer and half-integer") {
    CHECK(std::abs(quad_power_L(2, 0, 1.0) - 1.0 / 60.0) <= 1e-9);
    CHECK(std::abs(quad_power_L(3, 1, 4.0) + 1.0 / 420.0) <= 1e-9);
    // half-integer pinned values
    CHECK(std::abs(quad_power_L(0, 0, 0.5) - 4.0 / 15.0) <= 1e-9);
    CHECK(std::abs(quad_power_L(1, 1, 0.5) + 4.0 / 135.0) <= 1e-9);
}

TEST_CASE("quadrature configuration is validated") {
    QuadConfig cfg;
    cfg.nodes_per_panel = 4;
    CHECK_THROWS_AS(quad_log_L(0, 0, cfg), usage_error);
    cfg.nodes_per_panel = 128;
    CHECK_THROWS_AS(quad_log_L(0, 0, cfg), usage_error);
    cfg = {};
    cfg.target_abs_err = 1e-15;
    CHECK_THROWS_AS(quad_log_L(0, 0, cfg), usage_error);
    CHECK_THROWS_AS(quad_log_L(17, 0), usage_error);
    CHECK_THROWS_AS(quad_power_L(0, 17, 1.0), usage_error);
    CHECK_THROWS_AS(quad_power_L(0, 0, -1.0), math_domain_error);
}

TEST_CASE("an unreachable tolerance raises quadrature_error") {
    QuadConfig cfg;
    cfg.nodes_per_panel = 8;
    cfg.max_subdivisions = 1;
    cfg.target_abs_err = 1e-13;
    CHECK_THROWS_AS(quad_log_L(6, 5, cfg), quadrature_error);
}

TEST_CASE("parallel and serial quadrature agree bitwise") {
    QuadConfig cfg;
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {6, 5}}) {
        const double serial = quad_log_L_detail(m, n, cfg, false).value;
        const double parallel = quad_log_L_detail(m, n, cfg, true).value;
        CHECK(std::memcmp(&serial, &parallel, sizeof(double)) == 0);
    }
    const double ps = quad_power_L_detail(4, 2, 0.5, cfg, false).value;
    const double pp = quad_power_L_detail(4, 2, 0.5, cfg, true).value;
    CHECK(std::memcmp(&ps, &pp, sizeof(double)) == 0);
}

TEST_CASE("gauss-weighted Euler integral matches series values") {
    // 2F1(-1, 1; 3; 1/2) = 1 - 1/6
    CHECK(std::abs(euler_integral_quad(-1.0, 1.0, 3.0, 0.5) - 5.0 / 6.0) <= 1e-9);
    // 2F1(1, 1; 2; -1) = ln 2
    CHECK(std::abs(euler_integral_quad(1.0, 1.0, 2.0, -1.0) - std::log(2.0)) <= 1e-9);
    // generic parameters against the defining series
    const double series = [] {
        double term = 1.0, acc = 1.0;
        for (int k = 0; k < 4000; ++k) {
            term *= (0.5 + k) * (1.5 + k) / ((3.5 + k) * (k + 1.0)) * 0.8;
            acc += term;
        }
        return acc;
    }();
    CHECK(std::abs(euler_integral_quad(0.5, 1.5, 3.5, 0.8) - series) <= 1e-9);
    CHECK_THROWS_AS(euler_integral_quad(1.0, 2.0, 1.5, 0.5), math_domain_error);
    CHECK_THROWS_AS(euler_integral_quad(1.0, -1.0, 2.0, 0.5), math_domain_error);
    CHECK_THROWS_AS(euler_integral_quad(1.0, 1.0, 2.0, 1.0), math_domain_error);
}

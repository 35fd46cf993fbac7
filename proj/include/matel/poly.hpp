#pragma once

#include <vector>

#include "matel/rational.hpp"

namespace matel::polyops {

using exactnum::Rational;

// Dense univariate polynomial with exact rational coefficients, stored as
// coefficients[k] = coefficient of x^k with trailing zeros trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    static Poly constant(const Rational& c);
    static Poly monomial(long power, const Rational& c = Rational(1));

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    // Coefficient of x^k; zero beyond the degree.
    Rational coefficient(long k) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& scalar);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    bool operator==(const Poly& other) const = default;

    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;
    // p(scale * x + shift), computed exactly.
    Poly compose_affine(const Rational& scale, const Rational& shift) const;
    // p(x)/x; requires a zero constant term.
    Poly divide_by_x() const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

// Integration interval for exact inner products.
enum class Interval { unit,      // [0, 1]
                      symmetric  // [-1, 1]
};

Rational integrate(const Poly& p, Interval interval);
Rational inner_product(const Poly& f, const Poly& g, Interval interval);

// Legendre polynomial P_n on [-1,1], built from the three-term recurrence
// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.  Memoized; returns a copy.
Poly legendre(int n);
// Rodrigues construction (2^n n!)^{-1} d^n/dx^n (x^2-1)^n, for cross-checks.
Poly legendre_rodrigues(int n);

// Shifted Legendre polynomial p_n(x) = P_n(2x - 1) on [0,1].
Poly legendre_shifted(int n);
// Coefficient of x^k in p_n: (-1)^(n-k) (n+k)! / ((n-k)! k!^2).
Rational shifted_coefficient(int n, int k);
// p_n assembled directly from shifted_coefficient, for cross-checks.
Poly legendre_shifted_explicit(int n);
// Rodrigues form (n!)^{-1} d^n/dx^n (x^n (x-1)^n).
Poly legendre_shifted_rodrigues(int n);

// q_{n+1}(x) = integral of p_n from 0 to x (degree n+1, q_{n+1}(0) = 0).
Poly q_poly(int n);

// Integral over [0,1] of q_{n+1}(x)/x = (-1)^n / (n (n+1)); requires n >= 1.
Rational q_over_x_integral(int n);

// Coefficient map u_r x^r -> u_r/(r+1) x^r.
Poly op_M(const Poly& p);
// Coefficient map u_r x^r -> u_r h_{r+1}/(r+1) x^{r+1}.
Poly op_N(const Poly& p);

// sum_{j+k=r+1} (-1)^j p_m^(j)(0) p_n^(k)(0) over j,k >= 0, where p^(j) is
// the j-th derivative; vanishes exactly when r = |m-n| + 2s.
Rational bilinear_identity_sum(int m, int n, int r);
// Variant reading both derivative orders as j (kept to document that it
// breaks the vanishing property; see tests).
Rational bilinear_identity_sum_repeated_index(int m, int n, int r);

// Polynomial r with r' + lambda r = p, i.e. r = p/lambda - p'/lambda^2 + ...
// Requires lambda != 0.
Poly exp_poly_antiderivative(const Poly& p, const Rational& lambda);

} // namespace matel::polyops

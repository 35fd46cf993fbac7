#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matel/oracle.hpp"
#include "matel/rational.hpp"

namespace matel::ksums {

using exactnum::Rational;

// Coefficients of p_m(x) q_{n+1}(x) = sum_r S(m,n,r) x^(r+1), r = 0..m+n.
struct STable {
    int m = 0;
    int n = 0;
    std::vector<Rational> values;

    // S(m,n,r); zero outside [0, m+n].
    Rational at(long r) const;
};

// Built two ways -- the explicit factorial double sum and the polynomial
// product expansion -- with exact agreement asserted internally.
STable s_table(int m, int n);

// K(m,n) = sum_r S(m,n,r)/(r+2)^2.
Rational K_value(int m, int n);

// D(m,n,r) = (n+1) S(m,n,r) - (n-1) S(m-1,n-1,r); requires m, n >= 1.
Rational D_value(int m, int n, int r);

// Both sides of the K recurrence
//   (n+1)K(m,n) - (m+1)K(n,m) = (n-1)K(m-1,n-1) - (m-1)K(n-1,m-1).
std::pair<Rational, Rational> recurrence_check(int m, int n);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    bool all_pass = true;
    std::vector<CheckLine> lines;
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Antisymmetry K(m,n) + K(n,m) = 0 for |m-n| >= 2, the diagonal and
// near-diagonal closed forms, the K(m,0) closed form, and the off-diagonal
// closed-form comparison (the printed all-d form holds for even d only;
// odd-d deviations are reported, not asserted).
SuiteReport K_symmetry_suite(int bound);

// mu_n = mu_0 - 1/6 + hodd_{2n+1} - h_{n+1}/2 + (1/(2n+3) - 1/(2n+1))/2,
// mu_0 = -1/12; internally asserts mu_n/((2n+1)(2n+3)) = K(n+1,n).
std::vector<Rational> mu_sequence(int n_max);

// sum_p S(m,n,p)/(p+l) for integer l >= 1.
Rational T_sum(int m, int n, long l);

// lhs: float quadrature of the log-kernel triangle integral;
// rhs: -<M[p_m q_{n+1}], 1> - <p_m, N p_n> exactly.
std::pair<double, Rational> getridlog_check(int m, int n,
                                            const oracle::QuadConfig& cfg = {});

// The printed off-diagonal closed form -1/((m+n)(m+n+2)(d^2-1)), m-n >= 2.
Rational k_offdiagonal_printed(int m, int n);

} // namespace matel::ksums

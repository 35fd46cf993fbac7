#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "matel/rational.hpp"

namespace matel::matelem {

using exactnum::Rational;

// Exact carrier for standard-basis log entries: value = q0 + q1 * ln 2.
// Only the (0,0) entry has q1 != 0.
struct LogValue {
    Rational q0;
    Rational q1;
    bool operator==(const LogValue&) const = default;
    double to_double() const;
};

enum class Kernel { power, log };
enum class Basis { standard, shifted };
enum class Region { square, triangle };
enum class Mode { exact, floating };

struct KernelQuery {
    Kernel kernel = Kernel::log;
    Basis basis = Basis::shifted;
    Region region = Region::triangle;
    Rational alpha = 0; // power kernel only
    int m = 0;
    int n = 0;
};

// Throws usage_error for structurally invalid queries (standard-basis
// triangle) and math_domain_error for power kernels at alpha <= -1.
void validate_query(const KernelQuery& query);

// ---- power kernel on the triangle 0 < y < x < 1, shifted basis ----

// Literal evaluation of the printed closed form
//   -1/(a+1) * ((d-a)/2)_n (-a-1)_d / (((a+d+4)/2)_n (a+2)_{d+1}),  d = m-n.
// Kept verbatim so the sign audit against the oracle stays reproducible;
// requires m >= n.
Rational r_power_printed(int m, int n, const Rational& alpha);

// Canonical exact value of the triangle integral of (x-y)^alpha p_m p_n.
// Differs from r_power_printed by the factor (-1)^(d+1): the printed form
// matches direct integration only for odd d (see the route-agreement and
// oracle tests).  Any m, n (reflection symmetry applied for m < n).
Rational tilde_L_power(int m, int n, const Rational& alpha);

// Universal finite-sum evaluator, pole-free for every rational alpha > -1:
// (-1)^(m+n) sum_j (-n)_j (n+1)_j / (j! (a+1)_{j+1})
//                 * (-a-1-j)_m / ((a+2+j)_{m+1}).
Rational tilde_L_exact_sum(int m, int n, const Rational& alpha);

// 3F2 route: (-1)^(m+n) (-a-1)_m/(a+1)_{m+2} *
//            3F2(-n, n+1, a+2; a+m+3, a+2-m; 1).
// Integer alpha in [m-n-1, m-2] hits a denominator-parameter pole (use
// tilde_L_exact_sum there).
Rational tilde_L_via_3F2(int m, int n, const Rational& alpha);

// Inner integral over y of (x-y)^alpha p_n(y):
// x^(alpha+1)/(alpha+1) * 2F1(-n, n+1; alpha+2; x), exact whenever
// x^(alpha+1) is rational (integer alpha, or x in {0, 1}).
Rational A_alpha(int n, const Rational& alpha, const Rational& x);

// ---- log kernel ----

// 1/((m+n)(m+n+2)(d^2-1)); requires m >= n, (m,n) != (0,0), d != 1.
Rational r_log(int m, int n);

// Exact triangle integral of ln(x-y) p_m p_n, all cases:
// (0,0) -> -3/4; d=0, n>0 -> r_log(n,n);
// d=1 -> -(1/q)(hodd_{2n+1} - 1/4 - 1/q), q=(2n+1)(2n+3);
// d>=2 -> (-1)^d r_log(m,n)  [oracle-validated sign].
Rational tilde_L_log(int m, int n);

// ---- square region ----

// 0 for odd m-n, otherwise 2 * the triangle value.
Rational tilde_B_power(int m, int n, const Rational& alpha);
Rational tilde_B_log(int m, int n);

// Standard-basis square values.  Exact power values exist only for
// integer alpha (2^(alpha+2) must be rational).
Rational B_power(int m, int n, const Rational& alpha);
double B_power_float(int m, int n, const Rational& alpha);
LogValue B_log(int m, int n);

// ---- Legendre-function-of-the-second-kind route ----

// 0 when m-k is even, else 2/((m-k)(k+m+1)); accepts k >= -1.
Rational I_legendre_Q(int m, int k);

// Reconstruction of the rational part of B_log from I_legendre_Q:
// (2/(2n+1)) (I(m,n+1) - I(m,n-1)); even m-n, (m,n) != (0,0).
Rational rahman_B_log(int m, int n);

// The alpha -> 0 limit of the power closed form against 2*r_log:
// lhs: d=0 -> -(1)_{n-1}/(2 (2)_n); even d>=2 ->
//      2 (d/2)_n (1)_{d-2} / ((d/2+2)_n (2)_{d+1}); rhs: 2*r_log.
std::pair<Rational, Rational> log_limit_check(int m, int n);

// ---- matrix assembly ----

using EntryValue = std::variant<Rational, LogValue, double>;
double entry_to_double(const EntryValue& value);

struct MatrixResult {
    KernelQuery query;
    int size = 0;
    Mode mode = Mode::exact;
    std::vector<std::vector<EntryValue>> entries; // [m][n]
};

// N x N table over (m,n) in [0,N)^2; entries may be computed concurrently
// (memo tables are prewarmed first).
MatrixResult assemble_matrix(const KernelQuery& query, int size, Mode mode = Mode::exact,
                             bool parallel = true);

} // namespace matel::matelem

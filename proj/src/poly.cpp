#include "matel/poly.hpp"

#include <mutex>

namespace matel::polyops {

using exactnum::frac;

Poly::Poly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

Poly Poly::constant(const Rational& c) {
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(long power, const Rational& c) {
    if (power < 0) throw usage_error("monomial with negative power");
    std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1, Rational(0));
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Poly::coefficient(long k) const {
    if (k < 0 || k > degree()) return 0;
    return coefficients_[static_cast<std::size_t>(k)];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + exactnum::to_double(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly result = *this;
    for (auto& c : result.coefficients_) c = -c;
    return result;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] += other.coefficients_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] -= other.coefficients_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1,
                                  Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    coefficients_ = std::move(product);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    for (auto& c : coefficients_) c *= scalar;
    trim();
    return *this;
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly();
    std::vector<Rational> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k)
        d[k - 1] = coefficients_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> a(coefficients_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < coefficients_.size(); ++k)
        a[k + 1] = coefficients_[k] / Rational(static_cast<long>(k) + 1);
    return Poly(std::move(a));
}

Poly Poly::compose_affine(const Rational& scale, const Rational& shift) const {
    // Horner in the affine argument keeps everything exact.
    Poly inner({shift, scale});
    Poly acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc *= inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly Poly::divide_by_x() const {
    if (is_zero()) return Poly();
    if (coefficients_.front() != 0)
        throw math_domain_error("divide_by_x requires a zero constant term");
    return Poly(std::vector<Rational>(coefficients_.begin() + 1, coefficients_.end()));
}

Rational integrate(const Poly& p, Interval interval) {
    Poly anti = p.antiderivative();
    if (interval == Interval::unit) return anti(Rational(1));
    return anti(Rational(1)) - anti(Rational(-1));
}

Rational inner_product(const Poly& f, const Poly& g, Interval interval) {
    return integrate(f * g, interval);
}

namespace {

std::mutex legendre_mutex;

// Shared recurrence memo; slot n holds P_n.
std::vector<Poly>& legendre_table() {
    static std::vector<Poly> table{Poly::constant(Rational(1)),
                                   Poly::monomial(1)};
    return table;
}

} // namespace

Poly legendre(int n) {
    if (n < 0) throw usage_error("legendre index must be nonnegative");
    std::lock_guard<std::mutex> lock(legendre_mutex);
    auto& table = legendre_table();
    while (static_cast<int>(table.size()) <= n) {
        const long k = static_cast<long>(table.size()) - 1; // last computed index
        const Poly& pk = table[static_cast<std::size_t>(k)];
        const Poly& pk1 = table[static_cast<std::size_t>(k - 1)];
        Poly next = Poly::monomial(1, frac(2 * k + 1, k + 1)) * pk -
                    frac(k, k + 1) * pk1;
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(n)];
}

Poly legendre_rodrigues(int n) {
    if (n < 0) throw usage_error("legendre index must be nonnegative");
    Poly base({Rational(-1), Rational(0), Rational(1)}); // x^2 - 1
    Poly power = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i) power *= base;
    for (int i = 0; i < n; ++i) power = power.derivative();
    return power * (1 / (exactnum::pow_int(Rational(2), n) * exactnum::factorial(n)));
}

Poly legendre_shifted(int n) {
    return legendre(n).compose_affine(Rational(2), Rational(-1));
}

Rational shifted_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational magnitude = exactnum::factorial(n + k) /
                         (exactnum::factorial(n - k) * exactnum::factorial(k) *
                          exactnum::factorial(k));
    return ((n - k) % 2 == 0) ? magnitude : -magnitude;
}

Poly legendre_shifted_explicit(int n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = shifted_coefficient(n, k);
    return Poly(std::move(coeffs));
}

Poly legendre_shifted_rodrigues(int n) {
    Poly base({Rational(0), Rational(1)});        // x
    Poly shifted({Rational(-1), Rational(1)});    // x - 1
    Poly power = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i) power *= base * shifted;
    for (int i = 0; i < n; ++i) power = power.derivative();
    return power * (1 / exactnum::factorial(n));
}

Poly q_poly(int n) {
    return legendre_shifted(n).antiderivative();
}

Rational q_over_x_integral(int n) {
    if (n < 1) throw math_domain_error("q_over_x_integral requires n >= 1");
    Rational value = frac(1, static_cast<long>(n) * (static_cast<long>(n) + 1));
    return (n % 2 == 0) ? value : -value;
}

Poly op_M(const Poly& p) {
    std::vector<Rational> coeffs(p.coefficients());
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        coeffs[r] /= Rational(static_cast<long>(r) + 1);
    return Poly(std::move(coeffs));
}

Poly op_N(const Poly& p) {
    if (p.is_zero()) return Poly();
    std::vector<Rational> coeffs(p.coefficients().size() + 1, Rational(0));
    for (std::size_t r = 0; r < p.coefficients().size(); ++r)
        coeffs[r + 1] = p.coefficients()[r] * exactnum::harmonic(static_cast<long>(r) + 1) /
                        Rational(static_cast<long>(r) + 1);
    return Poly(std::move(coeffs));
}

namespace {

// j-th derivative of the shifted Legendre polynomial at 0:
// p_n^(j)(0) = j! * [x^j] p_n.
Rational shifted_derivative_at_zero(int n, int j) {
    return exactnum::factorial(j) * shifted_coefficient(n, j);
}

} // namespace

Rational bilinear_identity_sum(int m, int n, int r) {
    if (r < -1) throw usage_error("bilinear_identity_sum requires r >= -1");
    Rational sum = 0;
    for (int j = 0; j <= r + 1; ++j) {
        const int k = r + 1 - j;
        Rational term = shifted_derivative_at_zero(m, j) * shifted_derivative_at_zero(n, k);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational bilinear_identity_sum_repeated_index(int m, int n, int r) {
    if (r < -1) throw usage_error("bilinear_identity_sum requires r >= -1");
    Rational sum = 0;
    for (int j = 0; j <= r + 1; ++j) {
        Rational term = shifted_derivative_at_zero(m, j) * shifted_derivative_at_zero(n, j);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

Poly exp_poly_antiderivative(const Poly& p, const Rational& lambda) {
    if (lambda == 0) throw math_domain_error("exp_poly_antiderivative requires lambda != 0");
    // r = sum_{i>=0} (-1)^i p^(i) / lambda^(i+1); terminates at deg p.
    Poly result;
    Poly term = p;
    Rational scale = 1 / lambda;
    bool negate = false;
    while (!term.is_zero()) {
        Poly contribution = term * scale;
        result += negate ? -contribution : contribution;
        term = term.derivative();
        scale /= lambda;
        negate = !negate;
    }
    return result;
}

} // namespace matel::polyops

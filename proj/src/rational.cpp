#include "matel/rational.hpp"

#include <cctype>
#include <mutex>

namespace matel::exactnum {

Rational frac(long num, long den) {
    if (den == 0) throw usage_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw usage_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational parse_rational(const std::string& text) {
    // Grammar: '-'? digits ('/' digits)?
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw usage_error("malformed rational: '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw usage_error("malformed rational: '" + text + "'");
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size())
            throw usage_error("malformed rational: '" + text + "'");
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw usage_error("malformed rational: '" + text + "'");
    if (r.get_den() == 0) throw usage_error("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

bool is_nonpositive_integer(const Rational& value) {
    return is_integer(value) && value <= 0;
}

long to_long(const Rational& value) {
    if (!is_integer(value)) throw usage_error("to_long on non-integer " + to_string(value));
    if (!value.get_num().fits_slong_p())
        throw usage_error("to_long overflow on " + to_string(value));
    return value.get_num().get_si();
}

double to_double(const Rational& value) {
    return value.get_d();
}

Rational pow_int(const Rational& value, long exponent) {
    if (exponent == 0) return 1;
    if (value == 0) {
        if (exponent < 0) throw pole_error("0 raised to a negative power");
        return 0;
    }
    const unsigned long mag = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), mag);
    return exponent > 0 ? frac(num, den) : frac(den, num);
}

Rational factorial(long n) {
    if (n < 0) throw usage_error("factorial of negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0) return 0;
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational pochhammer(const Rational& a, long n) {
    if (n >= 0) {
        Rational product = 1;
        Rational factor = a;
        for (long i = 0; i < n; ++i) {
            product *= factor;
            factor += 1;
        }
        return product;
    }
    // (a)_n = 1 / (a+n)_{-n} when the latter is nonzero.
    Rational tail = pochhammer(a + Rational(n), -n);
    if (tail == 0)
        throw pole_error("pochhammer(" + to_string(a) + ", " + std::to_string(n) +
                         ") inverts a zero factor");
    return 1 / tail;
}

void TrackedProduct::multiply_factor(const Rational& factor) {
    if (factor == 0)
        ++zero_count;
    else
        nonzero_part *= factor;
}

TrackedProduct& TrackedProduct::operator*=(const TrackedProduct& other) {
    zero_count += other.zero_count;
    nonzero_part *= other.nonzero_part;
    return *this;
}

Rational TrackedProduct::collapse() const {
    return zero_count > 0 ? Rational(0) : nonzero_part;
}

TrackedProduct pochhammer_tracked(const Rational& a, long n) {
    if (n < 0) throw usage_error("pochhammer_tracked requires n >= 0");
    TrackedProduct product;
    Rational factor = a;
    for (long i = 0; i < n; ++i) {
        product.multiply_factor(factor);
        factor += 1;
    }
    return product;
}

Rational tracked_ratio(const TrackedProduct& num, const TrackedProduct& den) {
    if (num.zero_count > den.zero_count) return 0;
    if (num.zero_count < den.zero_count)
        throw pole_error("tracked ratio has uncancelled zero in denominator");
    return num.nonzero_part / den.nonzero_part;
}

namespace {
std::mutex memo_mutex;
} // namespace

Rational harmonic(long r) {
    if (r < 0) throw usage_error("harmonic number of negative index");
    static std::vector<Rational> table{Rational(0)}; // h_0 = 0
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<long>(table.size()) <= r)
        table.push_back(table.back() + frac(1, static_cast<long>(table.size())));
    return table[static_cast<std::size_t>(r)]; // copied while still locked
}

Rational odd_harmonic(long n) {
    if (n < 0) throw usage_error("odd harmonic number of negative index");
    static std::vector<Rational> table{Rational(1)}; // 1/(2*0+1)
    std::lock_guard<std::mutex> lock(memo_mutex);
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() + frac(1, 2 * static_cast<long>(table.size()) + 1));
    return table[static_cast<std::size_t>(n)];
}

} // namespace matel::exactnum

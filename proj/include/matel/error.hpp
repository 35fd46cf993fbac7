#pragma once

#include <stdexcept>
#include <string>

namespace matel {

// Malformed request: unknown option combination, invalid query shape, bad
// input grammar.  CLI maps this to exit code 2.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically out-of-domain request (e.g. power kernel at alpha <= -1, or
// an exact-mode query whose value is irrational).  CLI maps this to exit 3.
class math_domain_error : public std::domain_error {
public:
    explicit math_domain_error(const std::string& what) : std::domain_error(what) {}
};

// A pole was hit: Gamma at a nonpositive integer, Pochhammer inversion of a
// zero factor, a tracked ratio with more zeros downstairs than upstairs, a
// hypergeometric denominator parameter hitting a nonpositive integer before
// termination.  CLI maps this to exit 3.
class pole_error : public math_domain_error {
public:
    explicit pole_error(const std::string& what) : math_domain_error(what) {}
};

// Adaptive quadrature failed to reach its target within the refinement cap.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace matel

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace p3b {

using Int = std::int64_t;
using Rat = boost::rational<Int>;

// Internal-inconsistency error: integrality violations, regime disagreements,
// overflow. Must never fire on well-formed input; the CLI maps it to exit 1.
class arithmetic_fault : public std::logic_error {
  public:
    explicit arithmetic_fault(const std::string& what) : std::logic_error(what) {}
};

// Precondition / out-of-regime error; the CLI maps it to a status record or exit 2.
class domain_fault : public std::domain_error {
  public:
    explicit domain_fault(const std::string& what) : std::domain_error(what) {}
};

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_fault("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_fault("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_fault("integer overflow in multiplication");
    return r;
}

// Exact division; remainder must be zero.
inline Int exact_div(Int a, Int b, const char* context)
{
    if (b == 0 || a % b != 0)
        throw arithmetic_fault(std::string("non-exact division in ") + context);
    return a / b;
}

// Narrow a rational known to be integral.
inline Int to_integer(const Rat& r, const char* context)
{
    if (r.denominator() != 1)
        throw arithmetic_fault(std::string("non-integral value in ") + context);
    return r.numerator();
}

// Counting binomial: number of r-subsets, 0 whenever n < r or n < 0.
// This is the convention used by every section-count formula here.
inline Int count_binom(Int n, Int r)
{
    if (r < 0)
        throw domain_fault("count_binom: negative r");
    if (n < 0 || n < r)
        return 0;
    Int num = 1, den = 1;
    if (r > n - r)
        r = n - r;
    for (Int i = 0; i < r; ++i) {
        num = checked_mul(num, n - i);
        den = checked_mul(den, i + 1);
    }
    return exact_div(num, den, "count_binom");
}

// Degree-r polynomial extension n(n-1)...(n-r+1)/r!, defined for every integer n.
inline Int poly_binom(Int n, Int r)
{
    if (r < 0)
        throw domain_fault("poly_binom: negative r");
    Int num = 1, den = 1;
    for (Int i = 0; i < r; ++i) {
        num = checked_mul(num, n - i);
        den = checked_mul(den, i + 1);
    }
    return exact_div(num, den, "poly_binom");
}

} // namespace p3b

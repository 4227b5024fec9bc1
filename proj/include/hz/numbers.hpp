#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hz {

// Every scalar in the library is an exact integer or rational; no floating
// point appears anywhere in a computation path.
using Integer = mpz_class;
using Rational = mpq_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input that should never reach core computations.
class argument_error : public error {
public:
    using error::error;
};

// A requested computation exceeds a configured cap or enumeration budget.
class resource_limit_error : public error {
public:
    using error::error;
};

// A violated internal invariant (signals a convention bug, not bad input).
class internal_error : public error {
public:
    using error::error;
};

Integer factorial(unsigned n);

// x^e for integer e (negative allowed; x must be nonzero then).
Rational rational_pow(const Rational& x, long e);

// "n" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "n" or "p/q"; normalizes to lowest terms with positive denominator.
Rational parse_rational(std::string_view text);

inline Rational rational_of(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace hz

#include "hz/numbers.hpp"

namespace hz {

Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational rational_pow(const Rational& x, long e)
{
    if (e == 0) return Rational(1);
    if (x == 0 && e < 0) throw argument_error("zero base with negative exponent");
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    return out;  // powers of a canonical rational stay canonical
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(std::string_view text)
{
    if (text.empty()) throw argument_error("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw argument_error("bad rational literal: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw argument_error("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

}  // namespace hz

#ifndef HAMCHECK_RATIONAL_HPP
#define HAMCHECK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hamcheck/errors.hpp"

namespace hamcheck {

// Exact arbitrary-precision rational coefficient field.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1ul
                             : static_cast<unsigned long>(exp);
    if (invert && b == 0) throw ZeroDenominator();
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
    out.canonicalize();
    if (invert) return Rational(1) / out;
    return out;
}

// Parses "123", "1/2" or decimal notation like "0.25" into an exact rational.
Rational rational_from_string(const std::string& text);

}  // namespace hamcheck

#endif

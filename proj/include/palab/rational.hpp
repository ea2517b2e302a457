#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace palab {

// All motif analytics run in exact rational arithmetic; GMP backs both the
// rationals and the big-integer counts.
using Rational = mpq_class;
using BigInt = mpz_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with integer p, q.
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        Rational r(text);
        r.canonicalize();
        if (r.get_den() < 0) {
            r = Rational(-r.get_num(), -r.get_den());
            r.canonicalize();
        }
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

}  // namespace palab

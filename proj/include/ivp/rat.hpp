#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ivp {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of a nonzero integer. Throws on n == 0.
long val_p(const Int& n, const Int& p);

/// p-adic valuation of a nonzero rational: val_p(num) - val_p(den).
long val_p(const Rat& r, const Int& p);

/// BPSW-level probable-prime test (mpz_probab_prime_p with 32 rounds).
bool is_probable_prime(const Int& n);

/// Parses "123", "-4" or "a/b" into a canonical rational.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// n-th prime, 1-based (nth_prime(1) == 2). Desk-scale sieve.
Int nth_prime(unsigned n);

}  // namespace ivp

#include "ivp/rat.hpp"

#include <vector>

namespace ivp {

long val_p(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("val_p: zero has no finite valuation");
    if (p < 2) throw std::domain_error("val_p: modulus must be >= 2");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long val_p(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("val_p: zero has no finite valuation");
    return val_p(Int(r.get_num()), p) - val_p(Int(r.get_den()), p);
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& r) { return r.get_str(); }

Int nth_prime(unsigned n) {
    if (n == 0) throw std::domain_error("nth_prime: index is 1-based");
    Int p = 1;
    for (unsigned i = 0; i < n; ++i) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

}  // namespace ivp

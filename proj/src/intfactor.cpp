#include "ivp/intfactor.hpp"

#include <algorithm>
#include <map>

namespace ivp {

namespace {

// Pollard rho, Brent cycle variant. Returns a nontrivial factor or 1.
Int pollard_brent(const Int& n, unsigned long c0, unsigned long max_iters) {
    if (n % 2 == 0) return 2;
    Int y = Int(c0) % n + 1, c = Int(c0) % n + 1, m = 128;
    Int g = 1, r = 1, q = 1, x = 0, ys = 0;
    unsigned long iters = 0;
    while (g == 1 && iters < max_iters) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = m < r - k ? m : r - k;
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            iters += static_cast<unsigned long>(lim.get_ui());
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack
        do {
            ys = (ys * ys + c) % n;
            Int d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return (g == n || g == 1) ? Int(1) : g;
}

void split(const Int& n, const FactorBudget& budget, std::map<Int, int>& primes, Int& unfactored) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes[n]++;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r = sqrt(n);
        split(r, budget, primes, unfactored);
        split(r, budget, primes, unfactored);
        return;
    }
    for (int t = 0; t < budget.rho_restarts; ++t) {
        Int d = pollard_brent(n, 3 + 2 * static_cast<unsigned long>(t), budget.rho_iterations);
        if (d != 1) {
            split(d, budget, primes, unfactored);
            split(n / d, budget, primes, unfactored);
            return;
        }
    }
    unfactored *= n;  // budget exhausted, leave the composite cofactor honest
}

}  // namespace

FactoredInteger factor_integer(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw std::domain_error("factor_integer: zero input");
    Int rest = abs(n);
    std::map<Int, int> primes;
    Int unfactored = 1;

    for (unsigned long t = 2; t <= budget.trial_bound && rest > 1; t = (t == 2 ? 3 : t + 2)) {
        if (Int(t) * t > rest) break;
        while (rest % t == 0) {
            primes[Int(t)]++;
            rest /= t;
        }
    }
    if (rest > 1) split(rest, budget, primes, unfactored);

    FactoredInteger out;
    out.primes.assign(primes.begin(), primes.end());
    out.unfactored = unfactored;
    return out;
}

}  // namespace ivp

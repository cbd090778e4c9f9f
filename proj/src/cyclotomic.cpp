#include "ivp/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace ivp {

namespace {
std::map<unsigned, RatPoly> g_cache;
std::mutex g_cache_mutex;
}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

RatPoly cyclotomic(unsigned m) {
    if (m == 0 || m > 256) throw std::domain_error("cyclotomic: index must be in 1..256");
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_cache.find(m);
        if (it != g_cache.end()) return it->second;
    }
    RatPoly result;
    if (m == 1) {
        result = RatPoly({Rat(-1), Rat(1)});
    } else {
        RatPoly f = RatPoly::monomial(1, m) - RatPoly::constant(1);
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) f = f.exact_div(cyclotomic(d));
        result = f;
    }
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    g_cache.emplace(m, result);
    return result;
}

}  // namespace ivp

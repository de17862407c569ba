#include "invphi/totient.hpp"

#include <cmath>

namespace invphi {

u64 phi(const Factorization& f) {
    u64 result = 1;
    for (const auto& [p, e] : f.factors) {
        result *= p - 1;
        for (u64 k = 1; k < e; ++k) result *= p;
    }
    return result;  // phi(n) <= n, never overflows
}

u64 phi(u64 n) {
    if (n == 0) throw std::domain_error("phi: n must be positive");
    return phi(factorize(n));
}

u64 phi_prime_power(u64 p, u64 alpha) {
    if (alpha == 0 || !is_prime(p))
        throw std::domain_error("phi_prime_power: need prime p and alpha >= 1");
    return checked_mul(checked_pow(p, alpha - 1), p - 1);
}

u64 brute_phi(u64 n) {
    if (n == 0) throw std::domain_error("brute_phi: n must be positive");
    u64 count = 0;
    for (u64 x = 1; x <= n; ++x)
        if (gcd(x, n) == 1) ++count;
    return count;
}

namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

}  // namespace

std::vector<u64> phi_window(u64 lo, u64 hi) {
    if (lo == 0 || hi < lo) throw std::domain_error("phi_window: need 1 <= lo <= hi");
    const u64 width = hi - lo + 1;
    std::vector<u64> rem(width), ph(width, 1);
    for (u64 i = 0; i < width; ++i) rem[i] = lo + i;
    for (u64 p : primes_up_to(isqrt(hi))) {
        for (u64 j = (lo + p - 1) / p * p; j <= hi; j += p) {
            u64& r = rem[j - lo];
            u64 pe = 1;
            while (r % p == 0) {
                r /= p;
                pe *= p;
            }
            ph[j - lo] *= pe / p * (p - 1);
        }
    }
    // any leftover is a single prime factor > sqrt(hi)
    for (u64 i = 0; i < width; ++i)
        if (rem[i] > 1) ph[i] *= rem[i] - 1;
    return ph;
}

}  // namespace invphi

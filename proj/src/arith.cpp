#include "invphi/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace invphi {

u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer addition overflows 64 bits");
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer multiplication overflows 64 bits");
    return r;
}

u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

static u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

// Miller-Rabin round; n odd, n > 2, n - 1 = d * 2^s with d odd.
bool witness_passes(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

const auto& small_primes() {
    // sieved once; a cofactor surviving trial division has no factor <= 2^16
    static const std::vector<u64> primes = primes_up_to(1 << 16);
    return primes;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this witness set decides primality exactly for all n < 3.3 * 10^24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!witness_passes(n, a, d, s)) return false;
    return true;
}

namespace {

// Pollard-Brent rho: nontrivial factor of composite n with no factor <= 2^16.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = y;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t n = divs.size();
        u64 pk = 1;
        for (u64 k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            for (std::size_t i = 0; i < n; ++i) divs.push_back(checked_mul(divs[i], pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<u64> primes_in_ap(u64 a, u64 n, u64 bound) {
    if (gcd(a, n) != 1)
        throw std::domain_error("primes_in_ap: residue and modulus must be coprime");
    std::vector<u64> out;
    for (u64 p : primes_up_to(bound))
        if (p % n == a % n) out.push_back(p);
    return out;
}

Primality fermat_status(u64 index) {
    if (index <= 4) return Primality::prime;
    if (index <= 12) return Primality::composite;  // known factorizations exist
    return Primality::unknown;
}

FermatStatus fermat_number(u64 index) {
    if (index >= 6)
        throw std::overflow_error("fermat_number: F_n exceeds 64 bits for n >= 6");
    u64 value = checked_add(checked_pow(2, u64(1) << index), 1);
    return {index, value, is_prime(value) ? Primality::prime : Primality::composite};
}

namespace {

u64 to_u64_checked(const Rational::bigint& v, const char* what) {
    if (v > std::numeric_limits<u64>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return v.convert_to<u64>();
}

}  // namespace

Rational::Rational(u64 num, u64 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::pow2(u64 exponent) {
    Rational r;
    r.value_ = bigint(1) << exponent;
    return r;
}

Rational::bigint Rational::numerator() const {
    return boost::multiprecision::numerator(value_);
}

Rational::bigint Rational::denominator() const {
    return boost::multiprecision::denominator(value_);
}

u64 Rational::num() const { return to_u64_checked(numerator(), "rational numerator"); }

u64 Rational::den() const { return to_u64_checked(denominator(), "rational denominator"); }

bool Rational::integral() const { return denominator() == 1; }

u64 Rational::floor() const {
    return to_u64_checked(numerator() / denominator(), "rational floor");
}

Rational Rational::times(u64 n, u64 d) const {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    Rational r;
    r.value_ = value_ * boost::multiprecision::cpp_rational(n, d);
    return r;
}

Rational Rational::times(const Rational& r) const {
    Rational out;
    out.value_ = value_ * r.value_;
    return out;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!integral()) s += "/" + denominator().str();
    return s;
}

bool Rational::less_equal(u64 x) const { return value_ <= x; }

}  // namespace invphi

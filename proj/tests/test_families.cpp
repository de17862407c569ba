#include <doctest.h>

#include <algorithm>

#include "invphi/families.hpp"
#include "invphi/inverse.hpp"
#include "invphi/totient.hpp"

using namespace invphi;

TEST_CASE("classify_2p") {
    const FamilyVerdict v2 = classify_2p(2);
    CHECK(v2.in_image);
    CHECK(v2.witness == 5);
    CHECK(v2.m == 4);

    const FamilyVerdict v7 = classify_2p(7);
    CHECK_FALSE(v7.in_image);
    CHECK_FALSE(v7.witness.has_value());

    const FamilyVerdict v5 = classify_2p(5);
    CHECK(v5.in_image);
    CHECK(v5.witness == 11);
    CHECK(inverse_phi(10) == std::vector<u64>{11, 22});

    CHECK_THROWS_AS(classify_2p(6), std::domain_error);
}

TEST_CASE("classify_2p matches the enumeration oracle") {
    for (u64 p : primes_up_to(500)) {
        const FamilyVerdict v = classify_2p(p);
        REQUIRE(v.in_image == !inverse_phi(2 * p).empty());
        if (v.in_image) REQUIRE(phi(*v.witness) == 2 * p);
    }
}

TEST_CASE("preimage of 2p for Sophie Germain p >= 5") {
    for (u64 p : primes_up_to(500)) {
        if (p < 5 || !is_prime(2 * p + 1)) continue;
        REQUIRE(inverse_phi(2 * p) == std::vector<u64>{2 * p + 1, 4 * p + 2});
        const GuptaBound b = gupta_bound(2 * p);
        REQUIRE(b.value == Rational(6 * p + 3, 1));
        REQUIRE(phi(6 * p + 3) == 4 * p);
    }
}

TEST_CASE("sophie scan over the primes up to 50") {
    const SophieScan s = sophie_scan(50);
    CHECK(s.sophie_germain == std::vector<u64>{2, 3, 5, 11, 23, 29, 41});
    CHECK(s.safe_primes == std::vector<u64>{5, 7, 11, 23, 47, 59, 83});
    CHECK(s.image_members == std::vector<u64>{4, 6, 10, 22, 46, 58, 82});
    CHECK(s.nonimage_members == std::vector<u64>{14, 26, 34, 38, 62, 74, 86, 94});
}

TEST_CASE("safe prime residues") {
    CHECK(safe_prime_residue_check(7));
    CHECK(safe_prime_residue_check(5));
    CHECK(safe_prime_residue_check(23));
    CHECK_THROWS_AS(safe_prime_residue_check(13), std::domain_error);  // (13-1)/2 = 6
    CHECK_THROWS_AS(safe_prime_residue_check(9), std::domain_error);
    for (u64 q : sophie_scan(5000).safe_primes) REQUIRE(safe_prime_residue_check(q));
}

TEST_CASE("classify_2pk") {
    const FamilyVerdict a = classify_2pk(5, 1);
    CHECK(a.in_image);
    CHECK(a.witness == 11);

    const FamilyVerdict b = classify_2pk(5, 2);  // 51 = 3 * 17
    CHECK_FALSE(b.in_image);
    CHECK(b.m == 50);
    CHECK(inverse_phi(50).empty());

    const FamilyVerdict c = classify_2pk(7, 1);  // 15 = 3 * 5
    CHECK_FALSE(c.in_image);

    CHECK_THROWS_AS(classify_2pk(3, 1), std::domain_error);
    CHECK_THROWS_AS(classify_2pk(2, 1), std::domain_error);
    CHECK_THROWS_AS(classify_2pk(5, 0), std::domain_error);
    CHECK_THROWS_AS(classify_2pk(15, 1), std::domain_error);
}

TEST_CASE("classify_2pk agrees with enumeration, consequences hold") {
    for (u64 p : primes_up_to(50)) {
        if (p < 5) continue;
        for (u64 k = 1;; ++k) {
            u64 m = 2;
            for (u64 i = 0; i < k; ++i) m *= p;
            if (m > 1000000) break;
            const FamilyVerdict v = classify_2pk(p, k);
            REQUIRE(v.in_image == !inverse_phi(m).empty());
            if (v.in_image) {
                REQUIRE((m + 1) % 4 == 3);
                REQUIRE(k % 2 == 1);
                REQUIRE(phi(*v.witness) == m);
            }
        }
    }
}

TEST_CASE("2 * 3^k is always in the image") {
    const FamilyVerdict k0 = classify_2_3k(0);
    CHECK(k0.witness == 3);
    CHECK(k0.m == 2);

    const FamilyVerdict k3 = classify_2_3k(3);
    CHECK(k3.witness == 81);
    CHECK(k3.m == 54);
    CHECK(phi(81) == 54);

    const FamilyVerdict k1 = classify_2_3k(1);
    CHECK(k1.witness == 9);
    CHECK(phi(9) == 6);

    for (u64 k = 0; k <= 30; ++k) {
        const FamilyVerdict v = classify_2_3k(k);
        REQUIRE(v.in_image);
        REQUIRE(phi(*v.witness) == v.m);
    }
}

TEST_CASE("min_power2_exponent") {
    CHECK(min_power2_exponent(7, 30) == 2);
    CHECK(min_power2_exponent(17, 30) == 3);
    CHECK(min_power2_exponent(3, 30) == 1);
    CHECK_FALSE(min_power2_exponent(7, 1).has_value());
    CHECK_THROWS_AS(min_power2_exponent(2, 10), std::domain_error);
}

TEST_CASE("classify_2k_p") {
    const FamilyVerdict a = classify_2k_p(5, 3);
    CHECK(a.witness == 88);
    CHECK(a.m == 40);
    CHECK(phi(88) == 40);

    const FamilyVerdict b = classify_2k_p(2, 1);
    CHECK(b.witness == 10);
    CHECK(b.m == 4);
    CHECK(phi(10) == 4);

    const FamilyVerdict c = classify_2k_p(3, 2);
    CHECK(c.witness == 28);
    CHECK(c.m == 12);
    CHECK(phi(28) == 12);

    CHECK_THROWS_AS(classify_2k_p(7, 1), std::domain_error);  // 15 composite
    CHECK_THROWS_AS(classify_2k_p(5, 0), std::domain_error);
}

TEST_CASE("pow2 preimage") {
    const Pow2Preimage k3 = pow2_preimage(3);
    CHECK(k3.odd_count == 1);
    CHECK(k3.odd_witness == 15);

    const Pow2Preimage k32 = pow2_preimage(32);
    CHECK(k32.odd_count == 0);
    CHECK_FALSE(k32.odd_witness.has_value());

    const Pow2Preimage k5 = pow2_preimage(5);
    CHECK(k5.bound == Rational(255, 2));
    CHECK(k5.odd_witness == 51);
    CHECK(phi(51) == 32);

    CHECK(pow2_preimage(1).odd_witness == 3);
    CHECK(pow2_preimage(2).odd_witness == 5);
    CHECK_THROWS_AS(pow2_preimage(0), std::domain_error);
}

TEST_CASE("pow2 bound equals the general Gupta bound") {
    for (u64 k = 1; k <= 20; ++k)
        REQUIRE(pow2_preimage(k).bound == gupta_bound(u64(1) << k).value);
}

TEST_CASE("pow2 odd counts match enumeration") {
    for (u64 k = 1; k <= 12; ++k) {
        u64 odd = 0;
        for (u64 n : inverse_phi(u64(1) << k))
            if (n % 2 == 1) ++odd;
        const Pow2Preimage r = pow2_preimage(k);
        REQUIRE(r.odd_count == odd);
        REQUIRE(r.odd_count <= 1);
        if (r.odd_witness) REQUIRE(phi(*r.odd_witness) == u64(1) << k);
    }
}

TEST_CASE("A(2^k) is the integer 2^(k-30) F0 F1 F2 F3 F4 for k >= 30") {
    const u64 product = 3ull * 5 * 17 * 257 * 65537;  // 2^32 - 1
    for (u64 k = 30; k <= 40; ++k) {
        const Pow2Preimage r = pow2_preimage(k);
        REQUIRE(r.bound.integral());
        REQUIRE(r.bound.floor() == (u64(1) << (k - 30)) * product);
    }
}

TEST_CASE("factorial witnesses") {
    CHECK(factorial_witness(0).verdict.witness == 2);
    CHECK(factorial_witness(1).verdict.witness == 2);
    CHECK(factorial_witness(2).verdict.witness == 4);

    const FactorialVerdict f3 = factorial_witness(3);
    CHECK(f3.verdict.witness == 18);
    CHECK(f3.verdict.m == 6);
    CHECK(phi(18) == 6);

    const FactorialVerdict f5 = factorial_witness(5);
    CHECK(f5.verdict.witness == 450);
    CHECK(f5.verdict.m == 120);
    CHECK(phi(450) == 120);
    CHECK(f5.decomposition.alpha == 0);
    REQUIRE(f5.decomposition.odd_terms.size() == 2);
    CHECK(f5.decomposition.odd_terms[0] == PrimePower{3, 1});
    CHECK(f5.decomposition.odd_terms[1] == PrimePower{5, 1});

    CHECK_THROWS_AS(factorial_witness(21), std::overflow_error);
}

TEST_CASE("factorial decomposition reconstructs n!") {
    for (u64 n = 3; n <= 20; ++n) {
        const FactorialVerdict f = factorial_witness(n);
        u64 reconstructed = checked_pow(2, f.decomposition.alpha);
        for (const auto& [p, e] : f.decomposition.odd_terms) {
            REQUIRE(e >= 1);
            reconstructed = checked_mul(reconstructed, checked_pow(p, e));
            reconstructed = checked_mul(reconstructed, p - 1);
        }
        u64 target = 1;
        for (u64 i = 2; i <= n; ++i) target *= i;
        REQUIRE(reconstructed == target);
        REQUIRE(phi(*f.verdict.witness) == target);
    }
}

TEST_CASE("s_set membership") {
    const NonimageFamily s3 = s_set(3, 50);
    CHECK(s3.members == std::vector<u64>{7, 13, 19, 31, 37, 43});
    CHECK(s3.doubles == std::vector<u64>{14, 26, 38, 62, 74, 86});
    CHECK(std::all_of(s3.congruence_check.begin(), s3.congruence_check.end(),
                      [](bool b) { return b; }));

    const NonimageFamily s5 = s_set(5, 40);
    auto has = [](const std::vector<u64>& v, u64 x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(has(s5.doubles, 14));
    CHECK(has(s5.doubles, 34));

    const NonimageFamily s7 = s_set(7, 40);
    CHECK(has(s7.doubles, 34));
    CHECK_FALSE(has(s7.doubles, 14));
    CHECK_FALSE(has(s7.doubles, 26));
    // q = (p-1)/2 itself is excluded: 2*3+1 = 7 is prime, so 6 is in the image
    CHECK_FALSE(has(s7.members, 3));

    CHECK_THROWS_AS(s_set(2, 100), std::domain_error);
    CHECK_THROWS_AS(s_set(9, 100), std::domain_error);
}

TEST_CASE("s_set structure") {
    for (u64 p : {3ull, 5ull, 7ull, 11ull}) {
        const NonimageFamily fam = s_set(p, 500);
        REQUIRE(!fam.members.empty());
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
            const u64 q = fam.members[i];
            REQUIRE(is_prime(q));
            REQUIRE(q % p == (p - 1) / 2);
            REQUIRE(q > (p - 1) / 2);
            REQUIRE(fam.doubles[i] == 2 * q);
            REQUIRE((2 * q + 1) % p == 0);
            REQUIRE_FALSE(is_prime(2 * q + 1));
            REQUIRE(fam.congruence_check[i]);
        }
    }
}

TEST_CASE("odd doubles in the image") {
    CHECK(odd_doubles_in_image(12) == std::vector<u64>{1, 3, 5});
    for (u64 s : odd_doubles_in_image(200)) {
        REQUIRE(s % 2 == 1);
        REQUIRE(is_prime(2 * s + 1));
        REQUIRE(phi(2 * s + 1) == 2 * s);
        REQUIRE_FALSE(inverse_phi(2 * s).empty());
    }
}

TEST_CASE("Korselt criterion") {
    CHECK(is_carmichael(561));
    CHECK(is_carmichael(1105));
    CHECK(is_carmichael(1729));
    CHECK_FALSE(is_carmichael(7));
    CHECK_FALSE(is_carmichael(15));
    CHECK_FALSE(is_carmichael(9));
    CHECK_FALSE(is_carmichael(2));
    CHECK_THROWS_AS(is_carmichael(1), std::domain_error);
}

TEST_CASE("no 2p+1 is a Carmichael number") {
    CHECK(no_carmichael_2p1(10000));
    CHECK_FALSE(is_carmichael(2 * 7 + 1));
    CHECK_FALSE(is_carmichael(2 * 3 + 1));
}

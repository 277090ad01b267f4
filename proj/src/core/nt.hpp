#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace zetafn {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
bool is_prime_u64(uint64_t n);
uint64_t next_prime_u64(uint64_t n);  // smallest prime > n

// Prime factorisation, ascending primes.
std::map<uint64_t, int> factor_u64(uint64_t n);
std::vector<uint64_t> prime_divisors_u64(uint64_t n);

bool is_prime(const mpz_class& n);
std::map<mpz_class, int> factor(const mpz_class& n);

mpz_class isqrt(const mpz_class& n);  // floor of square root, n >= 0
mpz_class pow_mpz(const mpz_class& b, unsigned long e);
uint64_t u64_of(const mpz_class& n);  // checked narrowing

// floor(log2(n)) + 1 for n >= 1, i.e. bit length.
unsigned bit_length(const mpz_class& n);

}  // namespace zetafn

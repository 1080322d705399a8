#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace eliminant {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(),
                   static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    Rat inv = 1 / base;
    return pow_rat(inv, -e);
}

// true if b | a over the integers
inline bool divides(const Int& b, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

bool is_prime_u64(std::uint64_t n);

// modular arithmetic on a word-size prime p < 2^62
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace eliminant

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iep {

using Int = mpz_class;
using Rat = mpq_class;

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw internal_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw internal_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Legendre symbol (a/p), p an odd prime
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// a mod m in [0, m), m > 0
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::vector<Int> primes_up_to(const Int& bound);
std::vector<Int> prime_divisors(const Int& n);

// "num" or "num/den"
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// modular arithmetic on uint64 residues (p < 2^31 so products fit)
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p);
// solutions of x^2 = a (mod p), p odd prime; empty if non-residue
std::vector<uint64_t> sqrt_mod_p(uint64_t a, uint64_t p);
// residue of a GMP integer mod a word-size p
uint64_t residue_u64(const Int& a, uint64_t p);

}  // namespace iep

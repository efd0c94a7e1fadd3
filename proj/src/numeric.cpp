#include "iep/numeric.hpp"

#include <algorithm>

namespace iep {

std::vector<Int> primes_up_to(const Int& bound) {
    std::vector<Int> out;
    if (bound < 2) return out;
    if (!bound.fits_ulong_p()) throw config_error("prime bound too large to sieve");
    unsigned long n = bound.get_ui();
    std::vector<bool> composite(n + 1, false);
    for (unsigned long i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
    for (unsigned long i = 2; i <= n; ++i)
        if (!composite[i]) out.emplace_back(i);
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    Int m = abs(n);
    if (m < 2) return out;
    for (Int d = 2; d * d <= m; ++d) {
        if (divides(d, m)) {
            out.push_back(d);
            while (divides(d, m)) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

Rat parse_rat(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, pos));
        Int den(s.substr(pos + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw config_error("cannot parse rational: '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Tonelli-Shanks
std::vector<uint64_t> sqrt_mod_p(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return {0};
    if (p == 2) return {a};
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return {};
    uint64_t r;
    if (p % 4 == 3) {
        r = powmod_u64(a, (p + 1) / 4, p);
    } else {
        uint64_t q = p - 1, s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        uint64_t z = 2;
        while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t m = s;
        uint64_t c = powmod_u64(z, q, p);
        uint64_t t = powmod_u64(a, q, p);
        r = powmod_u64(a, (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0, tt = t;
            while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
            m = i;
            c = mulmod_u64(b, b, p);
            t = mulmod_u64(t, c, p);
            r = mulmod_u64(r, b, p);
        }
    }
    uint64_t r2 = p - r;
    if (r == r2) return {r};
    return {std::min(r, r2), std::max(r, r2)};
}

uint64_t residue_u64(const Int& a, uint64_t p) {
    Int r = mod_floor(a, Int(static_cast<unsigned long>(p)));
    return r.get_ui();
}

}  // namespace iep

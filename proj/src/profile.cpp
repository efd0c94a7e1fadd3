#include "iep/profile.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace iep {

namespace {

// the degenerate-zero guard applied before computing D(y_i y_j)
bool pair_guard(const Int& Ni, const Int& Nj, const Int& T) {
    return (Ni == 0 && T == 0) || (Nj == 0 && T == 0) || (Ni != 0 && Nj != 0);
}

// roots of a2 T^2 + a1 T + a0 = 0 (mod p), odd p; nullopt means every residue
std::optional<std::vector<uint64_t>> solve_quadratic_mod_p(const Int& a2, const Int& a1,
                                                           const Int& a0, uint64_t p) {
    const uint64_t A2 = residue_u64(a2, p);
    const uint64_t A1 = residue_u64(a1, p);
    const uint64_t A0 = residue_u64(a0, p);
    if (A2 == 0) {
        if (A1 == 0) {
            if (A0 == 0) return std::nullopt;
            return std::vector<uint64_t>{};
        }
        const uint64_t inv = powmod_u64(A1, p - 2, p);
        return std::vector<uint64_t>{mulmod_u64((p - A0) % p, inv, p)};
    }
    // T = (-a1 +- sqrt(a1^2 - 4 a2 a0)) / (2 a2)
    const uint64_t disc = (mulmod_u64(A1, A1, p) + p - mulmod_u64(4 % p, mulmod_u64(A2, A0, p), p)) % p;
    auto roots = sqrt_mod_p(disc, p);
    std::vector<uint64_t> out;
    const uint64_t inv2a = powmod_u64(mulmod_u64(2, A2, p), p - 2, p);
    for (uint64_t r : roots) {
        out.push_back(mulmod_u64((p - A1 + r) % p, inv2a, p));
        if (r != 0) out.push_back(mulmod_u64((2 * p - A1 - r) % p, inv2a, p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// visit all integers in [lo, hi] satisfying the congruence when a modular
// pre-filter is worthwhile, otherwise scan the window
void iterate_window(const Int& lo, const Int& hi, const Int& p_int, const Int& a2, const Int& a1,
                    const Int& a0, const std::function<void(const Int&)>& visit) {
    if (lo > hi) return;
    const Int width = hi - lo + 1;
    const bool fast = p_int > 2 && width > 64 && p_int > 64;
    if (!fast) {
        for (Int T = lo; T <= hi; ++T) visit(T);
        return;
    }
    const uint64_t p = p_int.get_ui();
    auto roots = solve_quadratic_mod_p(a2, a1, a0, p);
    if (!roots) {
        for (Int T = lo; T <= hi; ++T) visit(T);
        return;
    }
    for (uint64_t r : *roots) {
        // first T >= lo with T = r (mod p)
        Int T = lo + mod_floor(Int(static_cast<unsigned long>(r)) - lo, p_int);
        for (; T <= hi; T += p_int) visit(T);
    }
}

struct SeptupleCtx {
    const Septuple& s;
    Int adn_ax_b;  // a*dn - a*x - b      (n*k1)
    Int acn_bx;    // a*cn + b*x          (n*k2)

    explicit SeptupleCtx(const Septuple& s_)
        : s(s_),
          adn_ax_b(s_.a * s_.dn - s_.a * s_.x - s_.b),
          acn_bx(s_.a * s_.cn + s_.b * s_.x) {}
};

}  // namespace

bool profile_relations_hold(const Septuple& s, const NormTraceProfile& prof, const Int& target) {
    const SeptupleCtx c(s);
    const bool generic = prof.mode == Mode::generic;
    // relation 1, scaled by n
    if (s.n * target != s.n * prof.N1 + s.gamma * prof.N2 + s.b * prof.T23 + s.a * prof.N3)
        return false;
    // relation 2: (generic) a = RHS - T12, (imaginary) T12 = RHS
    const Int rhs2 = (c.adn_ax_b * s.cn - c.acn_bx * s.dn) * prof.N2 + c.adn_ax_b * prof.N3 -
                     c.acn_bx * prof.T23;
    const Int lhs2 = generic ? Int(s.n * (prof.T12 + s.a)) : Int(s.n * prof.T12);
    if (lhs2 != rhs2) return false;
    // relation 3
    const Int rhs3 = (c.acn_bx * s.cn - s.b * s.b) * prof.N2 -
                     (s.a * s.a - c.adn_ax_b * s.dn - c.acn_bx) * prof.N3 -
                     (s.a * s.b + c.adn_ax_b * s.cn) * prof.T23;
    const Int lhs3 = generic ? Int(s.n * (prof.T13 + s.b)) : Int(s.n * prof.T13);
    return lhs3 == rhs3;
}

std::vector<NormTraceProfile> enumerate_profiles_generic(const Septuple& s, const Int& p,
                                                         const AchievableSet& ach,
                                                         bool allzero_ok) {
    std::vector<NormTraceProfile> out;
    const Int &x = s.x, &a = s.a, &b = s.b, &cn = s.cn, &dn = s.dn, &gamma = s.gamma, &n = s.n;
    for (Int N1 = 0; N1 <= x; ++N1) {
        if (!ach.contains(N1)) continue;
        const Int M1 = x - N1;
        const Int N2cap = a * M1;
        for (Int N2 = 0; N2 <= N2cap; ++N2) {
            if (!ach.contains(N2)) continue;
            const Int w = isqrt(4 * N1 * N2);
            // p | D(x1 x2) = T12^2 - 4 N1 N2 pre-filters the scan
            iterate_window(-w, w, p, Int(1), Int(0), -4 * N1 * N2, [&](const Int& T12) {
                if (!pair_guard(N1, N2, T12)) return;
                const Int D12 = T12 * T12 - 4 * N1 * N2;
                if (!divides(p, D12)) return;
                const Int N3 = (a * cn + b * x) * M1 + a * b - cn * N2 + b * T12;
                if (N3 < 0) return;
                if (N3 > gamma * M1) return;
                if (a * a * N3 > 2 * (a * n * M1 + (b * b - n) * N2)) return;
                if (!ach.contains(N3) || !ach.contains(N1 + N2 - T12)) return;
                const Int T13 =
                    (dn * x - x * x - a + cn) * M1 + a * dn - a * x - b + N2 + (dn - x) * T12;
                if (!pair_guard(N1, N3, T13)) return;
                if (T13 * T13 > 4 * N1 * N3) return;
                const Int D13 = T13 * T13 - 4 * N1 * N3;
                if (!divides(p, D13)) return;
                if (!ach.contains(N1 + N3 - T13)) return;
                if (gamma * gamma * N2 > 2 * (gamma * n * M1 + (b * b - n) * N3)) return;
                const Int T23 = (a * dn - a * x - b) * M1 - a * a - dn * N2 - a * T12;
                if (!pair_guard(N2, N3, T23)) return;
                if (T23 * T23 > 4 * N2 * N3) return;
                const Int D23 = T23 * T23 - 4 * N2 * N3;
                if (!divides(p, D23)) return;
                if (!ach.contains(N2 + N3 - T23)) return;
                const Int disc = disc123_from_profile(N1, N2, N3, T12, T13, T23);
                if (!is_perfect_square(disc) || !divides(p, disc)) return;
                if (D12 == 0 && D13 == 0 && D23 == 0 && !allzero_ok) return;
                NormTraceProfile prof{N1, N2, N3, T12, T13, T23, Mode::generic};
                if (!profile_relations_hold(s, prof, x))
                    throw internal_error("generic profile fails its defining relations");
                out.push_back(std::move(prof));
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormTraceProfile> enumerate_profiles_imaginary(const Septuple& s, const Int& p,
                                                           const AchievableSet& ach,
                                                           const Int& mf2D, bool allzero_ok) {
    std::vector<NormTraceProfile> out;
    const Int &x = s.x, &a = s.a, &b = s.b, &cn = s.cn, &dn = s.dn, &gamma = s.gamma, &n = s.n;
    const SeptupleCtx c(s);
    (void)x;
    for (Int N1 = 0; N1 <= mf2D; ++N1) {
        if (!ach.contains(N1)) continue;
        const Int M1 = mf2D - N1;
        const Int N2cap = a * M1;
        for (Int N2 = 0; N2 <= N2cap; ++N2) {
            if (!ach.contains(N2)) continue;
            const Int K = n * M1 - gamma * N2;

            auto process = [&](const Int& T23) {
                const Int num3 = K - b * T23;
                if (!divides(a, num3)) return;
                const Int N3 = num3 / a;
                if (N3 < 0) return;
                if (N3 > gamma * M1) return;
                if (a * a * N3 > 2 * (a * n * M1 + (b * b - n) * N2)) return;
                if (gamma * gamma * N2 > 2 * (gamma * n * M1 + (b * b - n) * N3)) return;
                if (!ach.contains(N3)) return;
                if (T23 * T23 > 4 * N2 * N3) return;
                const Int num12 = (c.adn_ax_b * cn - c.acn_bx * dn) * N2 + c.adn_ax_b * N3 -
                                  c.acn_bx * T23;
                if (!divides(n, num12)) return;
                const Int T12 = num12 / n;
                const Int num13 = (c.acn_bx * cn - b * b) * N2 -
                                  (a * a - c.adn_ax_b * dn - c.acn_bx) * N3 -
                                  (a * b + c.adn_ax_b * cn) * T23;
                if (!divides(n, num13)) return;
                const Int T13 = num13 / n;

                if (!pair_guard(N1, N2, T12)) return;
                if (T12 * T12 > 4 * N1 * N2) return;
                const Int D12 = T12 * T12 - 4 * N1 * N2;
                if (!divides(p, D12)) return;
                if (!ach.contains(N1 + N2 - T12)) return;

                if (!pair_guard(N1, N3, T13)) return;
                if (T13 * T13 > 4 * N1 * N3) return;
                const Int D13 = T13 * T13 - 4 * N1 * N3;
                if (!divides(p, D13)) return;
                if (!ach.contains(N1 + N3 - T13)) return;

                if (!pair_guard(N2, N3, T23)) return;
                const Int D23 = T23 * T23 - 4 * N2 * N3;
                if (!divides(p, D23)) return;
                if (!ach.contains(N2 + N3 - T23)) return;

                const Int disc = disc123_from_profile(N1, N2, N3, T12, T13, T23);
                if (!is_perfect_square(disc) || !divides(p, disc)) return;
                if (D12 == 0 && D13 == 0 && D23 == 0 && !allzero_ok) return;
                NormTraceProfile prof{N1, N2, N3, T12, T13, T23, Mode::imaginary_quadratic};
                if (!profile_relations_hold(s, prof, mf2D))
                    throw internal_error("imaginary profile fails its defining relations");
                out.push_back(std::move(prof));
            };

            if (N2 == 0) {
                // Cauchy-Schwarz forces T23 = 0
                process(Int(0));
                continue;
            }
            // window where the Cauchy-Schwarz bound T23^2 <= 4 N2 N3 can hold,
            // from a T^2 + 4bN2 T - 4N2 K <= 0 (a slack of one is harmless:
            // every condition is re-checked exactly)
            const Int m = b * b * N2 * N2 + a * N2 * K;
            if (m < 0) continue;
            const Int sr = isqrt(m) + 1;
            const Int lo = floor_div(-2 * b * N2 - 2 * sr, a) - 1;
            const Int hi = floor_div(-2 * b * N2 + 2 * sr, a) + 2;
            // a*D23 = a T^2 + 4bN2 T - 4N2K, so p | D23 pre-filters the scan
            // whenever p does not divide a
            if (divides(p, a)) {
                for (Int T = lo; T <= hi; ++T) process(T);
            } else {
                iterate_window(lo, hi, p, a, 4 * b * N2, -4 * N2 * K, process);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormTraceProfile> apply_structural_filters(std::vector<NormTraceProfile> profiles,
                                                       const FieldSpec& spec, const Int& p,
                                                       const Septuple& s) {
    if (spec.mode != Mode::imaginary_quadratic) return profiles;
    std::vector<NormTraceProfile> out;
    if (spec.zeta != ZetaFlag::none) {
        const Int need = (spec.zeta == ZetaFlag::zeta4) ? 2 * s.n : 14 * s.n;
        if (!divides(p, need)) return out;
        for (auto& prof : profiles)
            if (prof.diagonal()) out.push_back(std::move(prof));
        return out;
    }
    const bool drop_diagonal = !divides(p, 2 * spec.f * spec.D * s.n);
    for (auto& prof : profiles) {
        if (drop_diagonal && prof.diagonal()) continue;
        out.push_back(std::move(prof));
    }
    return out;
}

}  // namespace iep

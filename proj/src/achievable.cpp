#include "iep/achievable.hpp"

#include <algorithm>

namespace iep {

namespace {

struct TernaryModP {
    uint64_t p;
    uint64_t d[3];     // diagonal coefficients
    uint64_t e[3][3];  // cross coefficients, r < s
};

TernaryModP reduce_form(const TraceZeroLattice& L, uint64_t p) {
    TernaryModP f{};
    f.p = p;
    for (int r = 0; r < 3; ++r) {
        f.d[r] = residue_u64(L.diag[r], p);
        for (int s = r + 1; s < 3; ++s) f.e[r][s] = residue_u64(L.cross[r][s], p);
    }
    return f;
}

uint64_t eval_form(const TernaryModP& f, uint64_t c1, uint64_t c2, uint64_t c3) {
    const uint64_t p = f.p;
    uint64_t v = mulmod_u64(f.d[0], mulmod_u64(c1, c1, p), p);
    v = (v + mulmod_u64(f.d[1], mulmod_u64(c2, c2, p), p)) % p;
    v = (v + mulmod_u64(f.d[2], mulmod_u64(c3, c3, p), p)) % p;
    v = (v + mulmod_u64(f.e[0][1], mulmod_u64(c1, c2, p), p)) % p;
    v = (v + mulmod_u64(f.e[0][2], mulmod_u64(c1, c3, p), p)) % p;
    v = (v + mulmod_u64(f.e[1][2], mulmod_u64(c2, c3, p), p)) % p;
    return v;
}

std::vector<bool> sweep_p2(const TernaryModP& f) {
    std::vector<bool> res(2, false);
    for (uint64_t c1 = 0; c1 < 2; ++c1)
        for (uint64_t c2 = 0; c2 < 2; ++c2)
            for (uint64_t c3 = 0; c3 < 2; ++c3) res[eval_form(f, c1, c2, c3)] = true;
    return res;
}

// odd p: values over the free variable of a quadratic with unit leading
// coefficient form a coset of alpha * squares, so the full sweep reduces to
// collecting the coset offsets over the two outer variables
std::vector<bool> sweep_odd(const TernaryModP& f) {
    const uint64_t p = f.p;
    int perm[3] = {0, 1, 2};
    int lead = -1;
    for (int r = 0; r < 3; ++r)
        if (f.d[r] != 0) { lead = r; break; }

    std::vector<bool> res(p, false);
    if (lead < 0) {
        // no square terms mod p: a nonzero cross term already gives all residues
        if (f.e[0][1] == 0 && f.e[0][2] == 0 && f.e[1][2] == 0) {
            res[0] = true;
            return res;
        }
        std::fill(res.begin(), res.end(), true);
        return res;
    }
    std::swap(perm[2], perm[lead]);

    auto cross = [&](int a, int b) {
        const int r = std::min(perm[a], perm[b]), s = std::max(perm[a], perm[b]);
        return f.e[r][s];
    };
    const uint64_t alpha = f.d[perm[2]];
    const uint64_t inv4a = powmod_u64(mulmod_u64(4 % p, alpha, p), p - 2, p);

    std::vector<bool> offsets(p, false);
    for (uint64_t c1 = 0; c1 < p; ++c1) {
        const uint64_t q1 = mulmod_u64(f.d[perm[0]], mulmod_u64(c1, c1, p), p);
        const uint64_t b1 = mulmod_u64(cross(0, 2), c1, p);
        for (uint64_t c2 = 0; c2 < p; ++c2) {
            uint64_t g = (q1 + mulmod_u64(f.d[perm[1]], mulmod_u64(c2, c2, p), p)) % p;
            g = (g + mulmod_u64(cross(0, 1), mulmod_u64(c1, c2, p), p)) % p;
            const uint64_t beta = (b1 + mulmod_u64(cross(1, 2), c2, p)) % p;
            const uint64_t off = (g + p - mulmod_u64(mulmod_u64(beta, beta, p), inv4a, p)) % p;
            offsets[off] = true;
        }
    }
    std::vector<uint64_t> sq;
    sq.reserve((p + 1) / 2);
    std::vector<bool> seen(p, false);
    for (uint64_t s = 0; s <= p / 2; ++s) {
        const uint64_t v = mulmod_u64(s, s, p);
        if (!seen[v]) { seen[v] = true; sq.push_back(v); }
    }
    for (uint64_t off = 0; off < p; ++off) {
        if (!offsets[off]) continue;
        for (uint64_t s : sq) res[(off + mulmod_u64(alpha, s, p)) % p] = true;
    }
    return res;
}

// congruence-diagonalize the symmetric matrix of the form over F_p (odd p)
void classify_large(const TernaryModP& f, AchievableSet& out) {
    const uint64_t p = f.p;
    const uint64_t inv2 = powmod_u64(2, p - 2, p);
    uint64_t m[3][3];
    for (int r = 0; r < 3; ++r) m[r][r] = f.d[r];
    for (int r = 0; r < 3; ++r)
        for (int s = r + 1; s < 3; ++s) m[r][s] = m[s][r] = mulmod_u64(f.e[r][s], inv2, p);

    uint64_t diag[3];
    int rank = 0;
    for (int step = 0; step < 3; ++step) {
        int piv = -1;
        for (int r = step; r < 3; ++r)
            if (m[r][r] != 0) { piv = r; break; }
        if (piv < 0) {
            int a = -1, b = -1;
            for (int r = step; r < 3 && a < 0; ++r)
                for (int s = r + 1; s < 3 && a < 0; ++s)
                    if (m[r][s] != 0) { a = r; b = s; }
            if (a < 0) break;  // remaining block is zero
            // row/col addition makes the diagonal entry 2*m[a][b] != 0
            for (int c = 0; c < 3; ++c) m[a][c] = (m[a][c] + m[b][c]) % p;
            for (int r = 0; r < 3; ++r) m[r][a] = (m[r][a] + m[r][b]) % p;
            piv = a;
        }
        if (piv != step) {
            for (int c = 0; c < 3; ++c) std::swap(m[piv][c], m[step][c]);
            for (int r = 0; r < 3; ++r) std::swap(m[r][piv], m[r][step]);
        }
        const uint64_t d = m[step][step];
        const uint64_t dinv = powmod_u64(d, p - 2, p);
        for (int r = step + 1; r < 3; ++r) {
            if (m[r][step] == 0) continue;
            const uint64_t fct = mulmod_u64(m[r][step], dinv, p);
            for (int c = 0; c < 3; ++c)
                m[r][c] = (m[r][c] + p - mulmod_u64(fct, m[step][c], p) % p) % p;
            for (int rr = 0; rr < 3; ++rr)
                m[rr][r] = (m[rr][r] + p - mulmod_u64(fct, m[rr][step], p) % p) % p;
        }
        diag[rank++] = d;
    }

    if (rank >= 2) {
        out.kind = AchievableSet::Kind::all;
    } else if (rank == 1) {
        out.kind = AchievableSet::Kind::scaled_squares;
        out.lambda = diag[0];
    } else {
        out.kind = AchievableSet::Kind::zero_only;
    }
}

}  // namespace

bool AchievableSet::contains_residue(uint64_t r) const {
    if (materialized) return residues[r];
    switch (kind) {
        case Kind::all: return true;
        case Kind::zero_only: return r == 0;
        case Kind::scaled_squares: {
            if (r == 0) return true;
            const uint64_t linv = powmod_u64(lambda, pu - 2, pu);
            return powmod_u64(mulmod_u64(r, linv, pu), (pu - 1) / 2, pu) == 1;
        }
    }
    return false;
}

bool AchievableSet::contains(const Int& N) const { return contains_residue(residue_u64(N, pu)); }

std::vector<uint64_t> AchievableSet::residue_list() const {
    std::vector<uint64_t> out;
    for (uint64_t r = 0; r < pu; ++r)
        if (contains_residue(r)) out.push_back(r);
    return out;
}

AchievableSet achievable_norms(const MaximalOrder& R, const Int& p, uint64_t sweep_limit) {
    if (Int(R.params.p) != p)
        throw internal_error("achievable_norms: order built for a different prime");
    AchievableSet out;
    out.p = p;
    if (!p.fits_ulong_p() || p.get_ui() > (1ull << 31))
        throw config_error("prime too large for the achievable-norm machinery");
    out.pu = p.get_ui();

    const TernaryModP f = reduce_form(R.trace_zero, out.pu);
    if (out.pu == 2) {
        out.materialized = true;
        out.residues = sweep_p2(f);
    } else if (out.pu <= sweep_limit) {
        out.materialized = true;
        out.residues = sweep_odd(f);
    } else {
        classify_large(f, out);
    }
    if (!out.contains_residue(0)) throw internal_error("achievable set must contain 0");
    return out;
}

}  // namespace iep

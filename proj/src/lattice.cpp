#include "iep/lattice.hpp"

#include <algorithm>

namespace iep {

namespace {

std::array<Int, 4> order_coords_of_combo(const TraceZeroLattice& L, const Int& c1, const Int& c2,
                                         const Int& c3) {
    std::array<Int, 4> v{};
    const Int cs[3] = {c1, c2, c3};
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 4; ++j) v[j] += cs[r] * L.order_coords[r][j];
    return v;
}

}  // namespace

std::vector<Quat> elements_with_norm_trace0(const MaximalOrder& R, const Int& N) {
    if (N < 0) throw internal_error("elements_with_norm_trace0: negative norm");
    const TraceZeroLattice& L = R.trace_zero;

    // S = symmetric matrix of the ternary norm form; c_r^2 <= N (S^-1)_rr
    Mat3q S{};
    for (int r = 0; r < 3; ++r) {
        S[r][r] = Rat(L.diag[r]);
        for (int s = r + 1; s < 3; ++s) {
            S[r][s] = make_rat(L.cross[r][s], 2);
            S[s][r] = S[r][s];
        }
    }
    const Rat det = mat3_det(S);
    if (det <= 0) throw internal_error("trace-zero norm form is not positive definite");
    auto adj_rr = [&](int r) {
        const int i = (r + 1) % 3, j = (r + 2) % 3;
        return S[i][i] * S[j][j] - S[i][j] * S[j][i];
    };
    std::array<Int, 3> bound;
    for (int r = 0; r < 3; ++r) {
        const Rat cap = Rat(N) * adj_rr(r) / det;  // >= 0
        bound[r] = isqrt(cap.get_num() / cap.get_den()) + 1;
    }

    struct Entry {
        std::array<Int, 4> coords;
        Quat y;
    };
    std::vector<Entry> found;

    const Int &d1 = L.diag[0], &d2 = L.diag[1], &d3 = L.diag[2];
    const Int &e12 = L.cross[0][1], &e13 = L.cross[0][2], &e23 = L.cross[1][2];
    for (Int c1 = -bound[0]; c1 <= bound[0]; ++c1) {
        for (Int c2 = -bound[1]; c2 <= bound[1]; ++c2) {
            // d3 c3^2 + beta c3 + g0 = N, solved exactly over Z
            const Int beta = e13 * c1 + e23 * c2;
            const Int g0 = d1 * c1 * c1 + d2 * c2 * c2 + e12 * c1 * c2 - N;
            const Int disc = beta * beta - 4 * d3 * g0;
            if (disc < 0 || !is_perfect_square(disc)) continue;
            const Int sq = isqrt(disc);
            for (int sign = 0; sign < (sq == 0 ? 1 : 2); ++sign) {
                const Int num = -beta + (sign == 0 ? sq : -sq);
                if (!divides(2 * d3, num)) continue;
                const Int c3 = num / (2 * d3);
                Quat y = quat_add(
                    quat_add(quat_scale(Rat(c1), L.basis[0]), quat_scale(Rat(c2), L.basis[1])),
                    quat_scale(Rat(c3), L.basis[2]));
                if (quat_norm(y) != N || quat_trace(y) != 0 || !membership(R, y))
                    throw internal_error("norm enumeration produced an invalid element");
                found.push_back({order_coords_of_combo(L, c1, c2, c3), std::move(y)});
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Entry& a, const Entry& b) { return a.coords < b.coords; });
    std::vector<Quat> out;
    out.reserve(found.size());
    for (auto& e : found) out.push_back(std::move(e.y));
    return out;
}

std::vector<std::array<Quat, 3>> assemble_triples(const std::vector<Quat>& l1,
                                                  const std::vector<Quat>& l2,
                                                  const std::vector<Quat>& l3,
                                                  const NormTraceProfile& profile) {
    std::vector<std::array<Quat, 3>> out;
    for (const Quat& y1 : l1) {
        for (const Quat& y2 : l2) {
            if (quat_trace(quat_mul(y1, y2)) != profile.T12) continue;
            for (const Quat& y3 : l3) {
                if (quat_trace(quat_mul(y1, y3)) != profile.T13) continue;
                if (quat_trace(quat_mul(y2, y3)) != profile.T23) continue;
                out.push_back({y1, y2, y3});
            }
        }
    }
    return out;
}

}  // namespace iep

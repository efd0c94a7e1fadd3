#pragma once

#include <array>
#include <tuple>

#include "iep/numeric.hpp"

namespace iep {

// B_{p,oo} = (-q,-p / Q): i^2 = -q, j^2 = -p, k = ij = -ji
struct AlgebraParams {
    Int p;
    Int q;
    bool operator==(const AlgebraParams& o) const { return p == o.p && q == o.q; }
    bool operator!=(const AlgebraParams& o) const { return !(*this == o); }
};

// coordinates over 1, i, j, k
struct Quat {
    AlgebraParams alg;
    Rat u, v, w, t;

    bool is_zero() const { return u == 0 && v == 0 && w == 0 && t == 0; }
    std::array<Rat, 4> coords() const { return {u, v, w, t}; }
};

inline Quat quat_from_coords(const AlgebraParams& alg, Rat u, Rat v, Rat w, Rat t) {
    return Quat{alg, std::move(u), std::move(v), std::move(w), std::move(t)};
}

inline Quat quat_scalar(const AlgebraParams& alg, const Rat& s) {
    return Quat{alg, s, 0, 0, 0};
}

inline void require_same_algebra(const Quat& a, const Quat& b) {
    if (a.alg != b.alg) throw internal_error("quaternions from different algebras");
}

inline Quat quat_add(const Quat& a, const Quat& b) {
    require_same_algebra(a, b);
    return {a.alg, a.u + b.u, a.v + b.v, a.w + b.w, a.t + b.t};
}

inline Quat quat_sub(const Quat& a, const Quat& b) {
    require_same_algebra(a, b);
    return {a.alg, a.u - b.u, a.v - b.v, a.w - b.w, a.t - b.t};
}

inline Quat quat_neg(const Quat& a) { return {a.alg, -a.u, -a.v, -a.w, -a.t}; }

inline Quat quat_scale(const Rat& s, const Quat& a) {
    return {a.alg, s * a.u, s * a.v, s * a.w, s * a.t};
}

Quat quat_mul(const Quat& a, const Quat& b);

inline Quat quat_conj(const Quat& y) { return {y.alg, y.u, -y.v, -y.w, -y.t}; }

inline Rat quat_norm(const Quat& y) {
    const Rat qp = Rat(y.alg.q) * Rat(y.alg.p);
    return y.u * y.u + Rat(y.alg.q) * y.v * y.v + Rat(y.alg.p) * y.w * y.w + qp * y.t * y.t;
}

inline Rat quat_trace(const Quat& y) { return 2 * y.u; }

inline bool quat_eq(const Quat& a, const Quat& b) {
    return a.alg == b.alg && a.u == b.u && a.v == b.v && a.w == b.w && a.t == b.t;
}

// (N, Tr, conj)
std::tuple<Rat, Rat, Quat> norm_trace_conj(const Quat& y);

// D(y) = Tr(y)^2 - 4N(y); requires an integral result (y in an order)
Int elem_disc(const Quat& y);

// disc(R_123) = (2 Tr(y1 y2 y3))^2, cross-checked against the expanded
// norm/trace formula; disc(R_ij) = D(y_i y_j)^2. Inputs must have trace 0.
std::pair<Int, std::array<Int, 3>> suborder_discs(const Quat& y1, const Quat& y2, const Quat& y3);

// expanded form of disc(R_123) from norms and pair traces alone
Int disc123_from_profile(const Int& N1, const Int& N2, const Int& N3,
                         const Int& T12, const Int& T13, const Int& T23);

}  // namespace iep

#include "iep/quat.hpp"

namespace iep {

Quat quat_mul(const Quat& a, const Quat& b) {
    require_same_algebra(a, b);
    const Rat q(a.alg.q), p(a.alg.p);
    const Rat qp = q * p;
    // 1: u1u2 - q v1v2 - p w1w2 - qp t1t2
    // i: u1v2 + v1u2 + p(w1t2 - t1w2)
    // j: u1w2 + w1u2 - q(v1t2 - t1v2)
    // k: u1t2 + t1u2 + v1w2 - w1v2
    return {a.alg,
            a.u * b.u - q * a.v * b.v - p * a.w * b.w - qp * a.t * b.t,
            a.u * b.v + a.v * b.u + p * (a.w * b.t - a.t * b.w),
            a.u * b.w + a.w * b.u - q * (a.v * b.t - a.t * b.v),
            a.u * b.t + a.t * b.u + a.v * b.w - a.w * b.v};
}

std::tuple<Rat, Rat, Quat> norm_trace_conj(const Quat& y) {
    return {quat_norm(y), quat_trace(y), quat_conj(y)};
}

Int elem_disc(const Quat& y) {
    const Rat tr = quat_trace(y);
    const Rat d = tr * tr - 4 * quat_norm(y);
    if (!is_integer(d)) throw internal_error("elem_disc: non-integral discriminant, element not in an order");
    return d.get_num();
}

Int disc123_from_profile(const Int& N1, const Int& N2, const Int& N3,
                         const Int& T12, const Int& T13, const Int& T23) {
    return 4 * (4 * N1 * N2 * N3 - N1 * T23 * T23 - N2 * T13 * T13 - N3 * T12 * T12 -
                T12 * T13 * T23);
}

std::pair<Int, std::array<Int, 3>> suborder_discs(const Quat& y1, const Quat& y2, const Quat& y3) {
    if (quat_trace(y1) != 0 || quat_trace(y2) != 0 || quat_trace(y3) != 0)
        throw internal_error("suborder_discs: inputs must have trace zero");

    auto as_int = [](const Rat& r, const char* what) {
        if (!is_integer(r)) throw internal_error(std::string("suborder_discs: non-integral ") + what);
        return r.get_num();
    };

    const Int N1 = as_int(quat_norm(y1), "norm");
    const Int N2 = as_int(quat_norm(y2), "norm");
    const Int N3 = as_int(quat_norm(y3), "norm");
    const Int T12 = as_int(quat_trace(quat_mul(y1, y2)), "trace");
    const Int T13 = as_int(quat_trace(quat_mul(y1, y3)), "trace");
    const Int T23 = as_int(quat_trace(quat_mul(y2, y3)), "trace");

    const Int expanded = disc123_from_profile(N1, N2, N3, T12, T13, T23);

    const Rat tr123 = quat_trace(quat_mul(quat_mul(y1, y2), y3));
    const Rat prod_form = 4 * tr123 * tr123;
    if (Rat(expanded) != prod_form)
        throw internal_error("suborder_discs: the two disc(R_123) formulas disagree");

    std::array<Int, 3> discij;
    const Int D12 = T12 * T12 - 4 * N1 * N2;
    const Int D13 = T13 * T13 - 4 * N1 * N3;
    const Int D23 = T23 * T23 - 4 * N2 * N3;
    discij[0] = D12 * D12;
    discij[1] = D13 * D13;
    discij[2] = D23 * D23;
    return {expanded, discij};
}

}  // namespace iep

#include "iep/order.hpp"

namespace iep {

namespace {

Mat4q basis_rows_for(const Int& p, const Int& q, Int& c_out) {
    auto row = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
        return std::array<Rat, 4>{a, b, c, d};
    };
    Mat4q m{};
    if (p == 2) {
        // Hurwitz-type: 1, i, j, (1+i+j+k)/2
        m[0] = row(1, 0, 0, 0);
        m[1] = row(0, 1, 0, 0);
        m[2] = row(0, 0, 1, 0);
        m[3] = row(make_rat(1, 2), make_rat(1, 2), make_rat(1, 2), make_rat(1, 2));
        return m;
    }
    if (mod_floor(p, 4) == 3) {
        // 1, i, (1+j)/2, (i+k)/2
        m[0] = row(1, 0, 0, 0);
        m[1] = row(0, 1, 0, 0);
        m[2] = row(make_rat(1, 2), 0, make_rat(1, 2), 0);
        m[3] = row(0, make_rat(1, 2), 0, make_rat(1, 2));
        return m;
    }
    // p = 1 mod 4: 1, (1+i)/2, (j-k)/2, (ci-k)/q with c^2 = -p mod q
    Int c = 0;
    while (c < q && mod_floor(c * c + p, q) != 0) ++c;
    if (c == q) throw internal_error("build_maximal_order: no square root of -p mod q");
    c_out = c;
    m[0] = row(1, 0, 0, 0);
    m[1] = row(make_rat(1, 2), make_rat(1, 2), 0, 0);
    m[2] = row(0, 0, make_rat(1, 2), make_rat(-1, 2));
    m[3] = row(0, make_rat(c, q), 0, make_rat(-1, q));
    return m;
}

TraceZeroLattice build_trace_zero(const MaximalOrder& R) {
    std::array<Int, 4> trace_row;
    for (int r = 0; r < 4; ++r) {
        const Rat tr = quat_trace(R.basis[r]);
        if (!is_integer(tr)) throw internal_error("order basis trace not integral");
        trace_row[r] = tr.get_num();
    }
    auto kernel = int_row_kernel(trace_row);
    if (kernel.size() != 3) throw internal_error("trace-zero lattice rank != 3");

    TraceZeroLattice L;
    for (int r = 0; r < 3; ++r) {
        L.order_coords[r] = kernel[r];
        Quat e = quat_scalar(R.params, 0);
        for (int j = 0; j < 4; ++j)
            e = quat_add(e, quat_scale(Rat(kernel[r][j]), R.basis[j]));
        L.basis[r] = e;
        if (quat_trace(e) != 0) throw internal_error("trace-zero basis element has nonzero trace");
    }
    for (int r = 0; r < 3; ++r) {
        const Rat n = quat_norm(L.basis[r]);
        if (!is_integer(n)) throw internal_error("trace-zero norm form not integral");
        L.diag[r] = n.get_num();
        for (int s = r + 1; s < 3; ++s) {
            // Tr(e_r conj(e_s)) = -Tr(e_r e_s) for trace-zero elements
            const Rat b = -quat_trace(quat_mul(L.basis[r], L.basis[s]));
            if (!is_integer(b)) throw internal_error("trace-zero norm form not integral");
            L.cross[r][s] = b.get_num();
        }
    }
    return L;
}

}  // namespace

Quat quat_from_order_coords(const MaximalOrder& R, const std::array<Int, 4>& c) {
    Quat y = quat_scalar(R.params, 0);
    for (int j = 0; j < 4; ++j) y = quat_add(y, quat_scale(Rat(c[j]), R.basis[j]));
    return y;
}

Int order_disc(const MaximalOrder& R) {
    Mat4q trd{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) trd[i][j] = quat_trace(quat_mul(R.basis[i], R.basis[j]));
    const Rat d = mat4_det(trd);
    if (!is_integer(d)) throw internal_error("order disc not integral");
    return abs(d.get_num());
}

bool membership(const MaximalOrder& R, const Quat& y) {
    if (y.alg != R.params) return false;
    const Vec4q v = mat4_apply(R.coord_solve, y.coords());
    for (const Rat& x : v)
        if (!is_integer(x)) return false;
    return true;
}

std::optional<std::array<Int, 4>> order_coords(const MaximalOrder& R, const Quat& y) {
    if (y.alg != R.params) return std::nullopt;
    const Vec4q v = mat4_apply(R.coord_solve, y.coords());
    std::array<Int, 4> c;
    for (int j = 0; j < 4; ++j) {
        if (!is_integer(v[j])) return std::nullopt;
        c[j] = v[j].get_num();
    }
    return c;
}

MaximalOrder build_maximal_order(const Int& p) {
    if (!is_prime(p)) throw config_error("build_maximal_order: p = " + p.get_str() + " is not prime");

    Int q;
    if (p == 2 || mod_floor(p, 4) == 3) {
        q = 1;
    } else {
        // smallest prime q = 3 mod 4 with (p/q) = -1; makes (-q,-p) ramified
        // exactly at p and oo and admits the explicit basis below
        q = 3;
        constexpr unsigned long kSearchCap = 20000;
        while (q < kSearchCap && !(is_prime(q) && mod_floor(q, 4) == 3 && legendre(p, q) == -1))
            ++q;
        if (q >= kSearchCap) throw internal_error("build_maximal_order: no suitable q below cap");
    }

    MaximalOrder R;
    R.params = AlgebraParams{p, q};
    Int c = 0;
    R.M = basis_rows_for(p, q, c);
    for (int r = 0; r < 4; ++r)
        R.basis[r] = quat_from_coords(R.params, R.M[r][0], R.M[r][1], R.M[r][2], R.M[r][3]);
    R.detM = mat4_det(R.M);

    // membership solves M^T v = coords(y)
    Mat4q mt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mt[i][j] = R.M[j][i];
    auto inv = mat4_inverse(mt);
    if (!inv) throw internal_error("build_maximal_order: basis matrix singular");
    R.coord_solve = *inv;

    // postconditions: 1 in R, ring closure, integral traces and norms, disc = p^2
    if (!membership(R, quat_scalar(R.params, 1)))
        throw internal_error("build_maximal_order: 1 not in the order");
    for (int i = 0; i < 4; ++i) {
        if (!is_integer(quat_trace(R.basis[i])) || !is_integer(quat_norm(R.basis[i])))
            throw internal_error("build_maximal_order: basis norms/traces not integral");
        for (int j = 0; j < 4; ++j)
            if (!membership(R, quat_mul(R.basis[i], R.basis[j])))
                throw internal_error("build_maximal_order: order not closed under multiplication");
    }
    if (order_disc(R) != p * p)
        throw internal_error("build_maximal_order: disc != p^2 for p = " + p.get_str());

    for (int i = 0; i < 4; ++i) {
        const Rat c0 = mat4_minor(R.M, i, 0), c1 = mat4_minor(R.M, i, 1);
        const Rat c2 = mat4_minor(R.M, i, 2), c3 = mat4_minor(R.M, i, 3);
        R.minor_bound_B[i] = (Rat(q) * c0 * c0 + c1 * c1) * Rat(p) + (Rat(q) * c2 * c2 + c3 * c3);
    }

    R.trace_zero = build_trace_zero(R);
    return R;
}

}  // namespace iep

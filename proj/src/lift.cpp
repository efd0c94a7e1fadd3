#include "iep/lift.hpp"

namespace iep {

QuatMat3 qm_from_rational(const AlgebraParams& alg, const Mat3q& a) {
    QuatMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = quat_scalar(alg, a[i][j]);
    return r;
}

QuatMat3 qm_mul(const QuatMat3& a, const QuatMat3& b) {
    QuatMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Quat s = quat_scalar(a.m[0][0].alg, 0);
            for (int k = 0; k < 3; ++k) s = quat_add(s, quat_mul(a.m[i][k], b.m[k][j]));
            r.m[i][j] = s;
        }
    return r;
}

QuatMat3 qm_add(const QuatMat3& a, const QuatMat3& b) {
    QuatMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = quat_add(a.m[i][j], b.m[i][j]);
    return r;
}

QuatMat3 qm_scale(const Rat& s, const QuatMat3& a) {
    QuatMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = quat_scale(s, a.m[i][j]);
    return r;
}

bool qm_eq(const QuatMat3& a, const QuatMat3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!quat_eq(a.m[i][j], b.m[i][j])) return false;
    return true;
}

QuatMat3 build_lambda2or3(const Septuple& s, const std::array<Quat, 3>& triple) {
    for (const Quat& y : triple)
        if (quat_trace(y) != 0) throw internal_error("build_lambda2or3: triple must be trace-zero");
    const auto& alg = triple[0].alg;
    const Rat n(s.n), a(s.a), b(s.b), cn(s.cn), dn(s.dn), gamma(s.gamma), x(s.x);
    const Rat k1 = (a * dn - a * x - b) / n;
    const Rat k2 = (a * cn + b * x) / n;
    const Quat &y1 = triple[0], &y2 = triple[1], &y3 = triple[2];

    auto lin = [&](const Rat& c2, const Rat& c3) {
        return quat_add(quat_scale(c2, y2), quat_scale(c3, y3));
    };

    QuatMat3 L;
    L.m[0][0] = y1;
    L.m[0][1] = y2;
    L.m[0][2] = y3;
    L.m[1][0] = lin(gamma / n, -b / n);
    L.m[1][1] = quat_add(y1, lin(k1 * cn - k2 * dn, k2));
    L.m[1][2] = lin(k2 * cn - b * b / n, a * b / n + k1 * cn);
    L.m[2][0] = lin(-b / n, a / n);
    L.m[2][1] = lin(k2, k1);
    L.m[2][2] = quat_add(y1, lin(a * b / n + k1 * cn, -(a * a / n - k1 * dn - k2)));
    (void)alg;
    return L;
}

bool matrix_entries_admissible(const MaximalOrder& R, const QuatMat3& m, const Int& n) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!membership(R, quat_scale(Rat(n), m.m[i][j]))) return false;
            if (i == 0 && !membership(R, m.m[i][j])) return false;
        }
    return true;
}

bool lifts_to_basis(const std::vector<QuatMat3>& monomials,
                    const std::vector<std::vector<Rat>>& basis_rows, const MaximalOrder& R,
                    const Int& n) {
    for (const auto& row : basis_rows) {
        if (row.size() != monomials.size())
            throw internal_error("lifts_to_basis: basis row length does not match monomials");
        QuatMat3 combined = qm_from_rational(R.params, Mat3q{});
        for (size_t r = 0; r < row.size(); ++r) {
            if (row[r] == 0) continue;
            combined = qm_add(combined, qm_scale(row[r], monomials[r]));
        }
        if (!matrix_entries_admissible(R, combined, n)) return false;
    }
    return true;
}

std::vector<QuatMat3> oplus_monomials(const AlgebraParams& alg, const Septuple& s) {
    const QuatMat3 I = qm_from_rational(alg, mat3_identity());
    const QuatMat3 L1 = qm_from_rational(alg, lambda1(s));
    return {I, L1, qm_mul(L1, L1)};
}

std::vector<QuatMat3> eta_monomials(const AlgebraParams& alg, const Septuple& s,
                                    const std::array<Quat, 3>& triple) {
    const QuatMat3 I = qm_from_rational(alg, mat3_identity());
    const QuatMat3 L1 = qm_from_rational(alg, lambda1(s));
    const QuatMat3 L2 = build_lambda2or3(s, triple);
    const QuatMat3 mL1 = qm_scale(Rat(-1), L1);          // eta^2
    const QuatMat3 L1sq = qm_mul(L1, L1);                // eta^4
    return {I, L2, mL1, qm_mul(mL1, L2), L1sq, qm_mul(L1sq, L2)};
}

std::vector<QuatMat3> quad_monomials(const AlgebraParams& alg, const Septuple& s,
                                     const std::array<Quat, 3>& triple) {
    return {qm_from_rational(alg, mat3_identity()), build_lambda2or3(s, triple)};
}

bool index_is_p_power(const Int& index, const Int& p) {
    Int m = index;
    if (m <= 0) return false;
    while (divides(p, m)) m /= p;
    return m == 1;
}

bool lambda_identities_hold(const FieldSpec& spec, const Septuple& s,
                            const std::array<Quat, 3>& triple) {
    const auto& alg = triple[0].alg;
    const auto cp = mat3_char_poly(lambda1(s));
    if (cp[0] != Rat(spec.A) || cp[1] != Rat(spec.B) || cp[2] != Rat(spec.C)) return false;

    const QuatMat3 L1 = qm_from_rational(alg, lambda1(s));
    const QuatMat3 L = build_lambda2or3(s, triple);
    const QuatMat3 Lsq = qm_mul(L, L);
    if (spec.mode == Mode::generic) {
        if (!qm_eq(Lsq, qm_scale(Rat(-1), L1))) return false;
    } else {
        const Rat f2D = Rat(spec.f * spec.f * spec.D);
        if (!qm_eq(Lsq, qm_from_rational(alg, mat3_scale(f2D, mat3_identity())))) return false;
    }
    return qm_eq(qm_mul(L, L1), qm_mul(L1, L));
}

}  // namespace iep

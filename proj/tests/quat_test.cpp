#include <doctest.h>

#include <random>

#include "iep/order.hpp"
#include "iep/quat.hpp"

using namespace iep;

namespace {

Quat random_trace_zero(const MaximalOrder& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    Quat y = quat_scalar(R.params, 0);
    for (int r = 0; r < 3; ++r)
        y = quat_add(y, quat_scale(Rat(d(rng)), R.trace_zero.basis[r]));
    return y;
}

}  // namespace

TEST_CASE("defining relations of the product") {
    const AlgebraParams alg{7, 1};
    const Quat i = quat_from_coords(alg, 0, 1, 0, 0);
    const Quat j = quat_from_coords(alg, 0, 0, 1, 0);
    const Quat k = quat_from_coords(alg, 0, 0, 0, 1);
    CHECK(quat_eq(quat_mul(i, j), k));
    CHECK(quat_eq(quat_mul(j, i), quat_neg(k)));
    CHECK(quat_eq(quat_mul(i, i), quat_scalar(alg, -1)));
    CHECK(quat_eq(quat_mul(j, j), quat_scalar(alg, -7)));

    // (1+i)(1-i) = 1+q
    const Quat one = quat_scalar(alg, 1);
    const Quat lhs = quat_mul(quat_add(one, i), quat_sub(one, i));
    CHECK(quat_eq(lhs, quat_scalar(alg, 2)));

    const AlgebraParams alg2{5, 3};
    const Quat i2 = quat_from_coords(alg2, 0, 1, 0, 0);
    CHECK(quat_eq(quat_mul(i2, i2), quat_scalar(alg2, -3)));
    CHECK_THROWS_AS(quat_mul(i, i2), internal_error);
}

TEST_CASE("norm, trace, conjugate") {
    const AlgebraParams alg{7, 1};
    const Quat zero = quat_scalar(alg, 0);
    auto [n0, t0, c0] = norm_trace_conj(zero);
    CHECK(n0 == 0);
    CHECK(t0 == 0);
    CHECK(c0.is_zero());

    const Quat i = quat_from_coords(alg, 0, 1, 0, 0);
    auto [ni, ti, ci] = norm_trace_conj(i);
    CHECK(ni == 1);
    CHECK(ti == 0);
    CHECK(quat_eq(ci, quat_neg(i)));

    const Quat y = quat_from_coords(alg, make_rat(1, 2), 0, make_rat(1, 2), 0);  // (1+j)/2
    auto [ny, ty, cy] = norm_trace_conj(y);
    CHECK(ny == 2);
    CHECK(ty == 1);
    CHECK(quat_eq(cy, quat_from_coords(alg, make_rat(1, 2), 0, make_rat(-1, 2), 0)));

    // N(y conj y) = N as scalar, N multiplicative
    CHECK(quat_eq(quat_mul(y, cy), quat_scalar(alg, 2)));
    const Quat z = quat_from_coords(alg, 1, 2, 0, 1);
    CHECK(quat_norm(quat_mul(y, z)) == quat_norm(y) * quat_norm(z));
}

TEST_CASE("element discriminant") {
    const AlgebraParams alg{7, 1};
    CHECK(elem_disc(quat_from_coords(alg, 0, 1, 0, 0)) == -4);
    CHECK(elem_disc(quat_scalar(alg, 1)) == -3);
    CHECK(elem_disc(quat_from_coords(alg, make_rat(1, 2), 0, make_rat(1, 2), 0)) == -7);
    CHECK_THROWS_AS(elem_disc(quat_from_coords(alg, make_rat(1, 3), 0, 0, 0)), internal_error);
}

TEST_CASE("suborder discriminants") {
    const AlgebraParams alg{7, 1};
    const Quat i = quat_from_coords(alg, 0, 1, 0, 0);
    const Quat j = quat_from_coords(alg, 0, 0, 1, 0);
    const Quat k = quat_from_coords(alg, 0, 0, 0, 1);
    const Quat zero = quat_scalar(alg, 0);

    auto [d0, dij0] = suborder_discs(i, zero, zero);
    CHECK(d0 == 0);
    CHECK(dij0[0] == 0);
    CHECK(dij0[1] == 0);
    CHECK(dij0[2] == 0);

    // ijk = k^2 = -qp: disc(R_123) = (2 Tr(ijk))^2 = (2 * -14)^2, and the
    // expanded formula gives 4 * 4 * N(i)N(j)N(k) = 784 as well
    auto [d1, dij1] = suborder_discs(i, j, k);
    CHECK(d1 == 784);
    CHECK(d1 == disc123_from_profile(1, 7, 7, 0, 0, 0));
    CHECK(dij1[0] == Int(28 * 28));  // D(ij)^2 = (0 - 4*7)^2

    // repeated argument collapses the rank
    const Quat y2 = quat_add(j, k);
    auto [d2, dij2] = suborder_discs(i, y2, i);
    CHECK(d2 == 0);

    CHECK_THROWS_AS(suborder_discs(quat_scalar(alg, 1), i, j), internal_error);
}

TEST_CASE("quaternion identities on random order elements") {
    for (const long pv : {2L, 3L, 7L, 11L}) {
        const MaximalOrder R = build_maximal_order(Int(pv));
        std::mt19937_64 rng(0x5eed0000 + static_cast<uint64_t>(pv));
        std::uniform_int_distribution<int> d(-6, 6);
        for (int iter = 0; iter < 1000; ++iter) {
            const Quat y = random_trace_zero(R, rng);
            const Quat z = random_trace_zero(R, rng);
            // parallelogram law
            CHECK(quat_norm(quat_add(y, z)) + quat_norm(quat_sub(y, z)) ==
                  2 * (quat_norm(y) + quat_norm(z)));
            // rs Tr(yz) = N(sy - rz) - s^2 N(y) - r^2 N(z)
            const Rat r(d(rng)), s(d(rng));
            const Quat sy_rz = quat_sub(quat_scale(s, y), quat_scale(r, z));
            CHECK(r * s * quat_trace(quat_mul(y, z)) ==
                  quat_norm(sy_rz) - s * s * quat_norm(y) - r * r * quat_norm(z));
            // Cauchy-Schwarz, squared
            const Rat tyz = quat_trace(quat_mul(y, z));
            CHECK(tyz * tyz <= 4 * quat_norm(y) * quat_norm(z));
        }
    }
}

TEST_CASE("disc(R_123) two-formula agreement on random trace-zero triples") {
    for (const long pv : {2L, 3L, 7L, 11L}) {
        const MaximalOrder R = build_maximal_order(Int(pv));
        std::mt19937_64 rng(0xd15c0000 + static_cast<uint64_t>(pv));
        for (int iter = 0; iter < 1000; ++iter) {
            const Quat y1 = random_trace_zero(R, rng);
            const Quat y2 = random_trace_zero(R, rng);
            const Quat y3 = random_trace_zero(R, rng);
            // suborder_discs throws if the product form and the expanded
            // norm/trace form disagree
            auto [d123, dij] = suborder_discs(y1, y2, y3);
            CHECK(d123 >= 0);
            CHECK(is_perfect_square(d123));
            (void)dij;
        }
    }
}

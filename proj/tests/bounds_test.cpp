#include <doctest.h>

#include "iep/bounds.hpp"

using namespace iep;

namespace {

FieldSpec make_field(long A, long B, long C, long D, ZetaFlag z) {
    FieldSpec f;
    f.A = A;
    f.B = B;
    f.C = C;
    if (D == 0) {
        f.mode = Mode::generic;
    } else {
        f.mode = Mode::imaginary_quadratic;
        f.D = D;
    }
    f.zeta = z;
    f.basis_Oplus = mat3_identity();
    return validate(f);
}

}  // namespace

TEST_CASE("curve (1): candidates from the p | 2n rule, max 11") {
    const FieldSpec spec = make_field(13, 50, 49, -1, ZetaFlag::zeta4);
    const auto septs = enumerate_septuples(spec.A, spec.B, spec.C);
    const PrimeBudget b = prime_budget(spec, septs, /*include_two=*/true);
    CHECK(b.kind == BudgetCase::zeta_root);
    CHECK(b.practical_bound == 11);
    CHECK(b.candidate_primes == std::vector<Int>{2, 7, 11});
    CHECK(b.practical_bound <= b.theoretical_bound);

    const PrimeBudget no2 = prime_budget(spec, septs, /*include_two=*/false);
    CHECK(no2.candidate_primes == std::vector<Int>{7, 11});
}

TEST_CASE("X10: practical bound 160 from 4 a gamma f^4 D^2 with max a*gamma = 10") {
    const FieldSpec spec = make_field(5, 6, 1, -2, ZetaFlag::none);
    const auto septs = enumerate_septuples(spec.A, spec.B, spec.C);
    Int max_agamma = 0;
    for (const auto& s : septs) max_agamma = std::max(max_agamma, Int(s.a * s.gamma));
    CHECK(max_agamma == 10);
    const PrimeBudget b = prime_budget(spec, septs, true);
    CHECK(b.kind == BudgetCase::imaginary);
    CHECK(b.practical_bound == 160);
    CHECK(std::find(b.candidate_primes.begin(), b.candidate_primes.end(), Int(157)) !=
          b.candidate_primes.end());
    CHECK(b.candidate_primes.front() == 2);
    for (const Int& p : b.candidate_primes) CHECK(p <= b.practical_bound);
}

TEST_CASE("zeta7 field (7,14,7) has no odd candidates") {
    const FieldSpec spec = make_field(7, 14, 7, -7, ZetaFlag::zeta7);
    const auto septs = enumerate_septuples(spec.A, spec.B, spec.C);
    REQUIRE_FALSE(septs.empty());
    for (const auto& s : septs) CHECK(s.n == 1);
    const PrimeBudget b = prime_budget(spec, septs, false);
    CHECK(b.candidate_primes.empty());
}

TEST_CASE("empty septuple list gives empty candidates") {
    FieldSpec f;
    f.A = 2;
    f.B = 1;
    f.C = 1;  // t^3-2t^2+t-1 irreducible, box = 2, has no septuples with n > 0
    f.mode = Mode::generic;
    f.basis_Oplus = mat3_identity();
    const FieldSpec spec = validate(f);
    const auto septs = enumerate_septuples(spec.A, spec.B, spec.C);
    const PrimeBudget b = prime_budget(spec, septs, true);
    if (septs.empty()) CHECK(b.candidate_primes.empty());
}

TEST_CASE("pre-excluded primes are removed") {
    FieldSpec f;
    f.A = 5;
    f.B = 6;
    f.C = 1;
    f.mode = Mode::imaginary_quadratic;
    f.D = -2;
    f.basis_Oplus = mat3_identity();
    f.pre_excluded_primes = {Int(3), Int(157)};
    const FieldSpec spec = validate(f);
    const auto septs = enumerate_septuples(5, 6, 1);
    const PrimeBudget b = prime_budget(spec, septs, true);
    for (const Int& p : b.candidate_primes) {
        CHECK(p != 3);
        CHECK(p != 157);
    }
}

TEST_CASE("theoretical bounds are monotone in A^2 - 2B per mode") {
    // synthetic comparison: same mode, growing box
    const FieldSpec small = make_field(5, 6, 1, -2, ZetaFlag::none);
    const FieldSpec big = make_field(8, 15, 7, -2, ZetaFlag::none);
    CHECK(small.A2m2B < big.A2m2B);
    const auto s1 = enumerate_septuples(5, 6, 1);
    const auto s2 = enumerate_septuples(8, 15, 7);
    CHECK(prime_budget(small, s1, true).theoretical_bound <
          prime_budget(big, s2, true).theoretical_bound);

    const FieldSpec g1 = make_field(5, 6, 1, 0, ZetaFlag::none);
    const FieldSpec g2 = make_field(9, 21, 8, 0, ZetaFlag::none);
    CHECK(prime_budget(g1, s1, true).theoretical_bound <
          prime_budget(g2, enumerate_septuples(9, 21, 8), true).theoretical_bound);
}

TEST_CASE("per-septuple feasibility skip") {
    const FieldSpec spec = make_field(13, 50, 49, -1, ZetaFlag::zeta4);
    const Septuple s{5, 8, 2, -12, 5, 16, 7};  // 4 a gamma f^4 D^2 = 128
    CHECK(septuple_feasible_at(spec, s, 7, false));
    CHECK(septuple_feasible_at(spec, s, 127, false));      // within the pair cap
    CHECK(septuple_feasible_at(spec, s, 131, false) == false);  // beyond, and 131 does not divide fDn
    CHECK(septuple_feasible_at(spec, s, 7 * 1, false));    // p | fDn keeps it alive
}

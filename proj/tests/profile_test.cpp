#include <doctest.h>

#include "iep/profile.hpp"
#include "oracles.hpp"

using namespace iep;

namespace {

FieldSpec imaginary_field(long A, long B, long C, long D, ZetaFlag z = ZetaFlag::none) {
    FieldSpec f;
    f.A = A;
    f.B = B;
    f.C = C;
    f.mode = Mode::imaginary_quadratic;
    f.D = D;
    f.basis_Oplus = mat3_identity();
    f.zeta = z;
    return validate(f);
}

void check_oracle_equivalence(const Septuple& s, const Int& p, Mode mode, const Int& target,
                              bool allzero_ok) {
    const MaximalOrder R = build_maximal_order(p);
    const AchievableSet ach = achievable_norms(R, p);
    const auto brute_ach = oracle::achievable_brute(R, p.get_ui());
    const auto got = mode == Mode::generic
                         ? enumerate_profiles_generic(s, p, ach, allzero_ok)
                         : enumerate_profiles_imaginary(s, p, ach, target, allzero_ok);
    const auto want = oracle::profiles_brute(s, p, brute_ach, mode, target, allzero_ok);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
}

}  // namespace

TEST_CASE("generic profiles match the boxed brute force, (5,6,1) at p = 5") {
    const Septuple s{1, 4, 1, -3, 2, 5, 1};
    check_oracle_equivalence(s, 5, Mode::generic, s.x, false);
}

TEST_CASE("worked example: diagonal profile at p = 7") {
    const Septuple s{5, 8, 2, -12, 5, 16, 7};
    const MaximalOrder R = build_maximal_order(7);
    const AchievableSet ach = achievable_norms(R, 7);
    // f D n = -7, so the all-zero-disc escape is active at p = 7
    const auto profs = enumerate_profiles_imaginary(s, 7, ach, 1, /*allzero_ok=*/true);
    const NormTraceProfile diag{1, 0, 0, 0, 0, 0, Mode::imaginary_quadratic};
    CHECK(std::find(profs.begin(), profs.end(), diag) != profs.end());
    // no profile with all norms zero: the first relation forces total 1
    for (const auto& prof : profs) CHECK(!(prof.N1 == 0 && prof.N2 == 0 && prof.N3 == 0));
    // every emitted profile satisfies the relation system exactly
    for (const auto& prof : profs) CHECK(profile_relations_hold(s, prof, 1));
}

TEST_CASE("no emitted generic profile has N1 = x") {
    const Septuple s{1, 4, 1, -3, 2, 5, 1};
    const MaximalOrder R = build_maximal_order(5);
    const AchievableSet ach = achievable_norms(R, 5);
    for (const auto& prof : enumerate_profiles_generic(s, 5, ach, false)) {
        CHECK(prof.N1 != s.x);
        CHECK(prof.T12 * prof.T12 <= 4 * prof.N1 * prof.N2);
        CHECK(prof.T13 * prof.T13 <= 4 * prof.N1 * prof.N3);
        CHECK(prof.T23 * prof.T23 <= 4 * prof.N2 * prof.N3);
    }
}

TEST_CASE("imaginary profiles match the boxed brute force, (5,6,1) D=-2 at p = 3") {
    const Septuple s{1, 4, 1, -3, 2, 5, 1};
    // -f^2 D = 2; f D n = -2 so no all-zero escape at p = 3
    check_oracle_equivalence(s, 3, Mode::imaginary_quadratic, 2, false);
}

TEST_CASE("oracle equivalence across fields with A <= 13 and p <= 11, both modes") {
    struct Job {
        long A, B, C, D;
    };
    const std::vector<Job> fields = {{13, 50, 49, -1}, {5, 6, 1, -2}, {6, 9, 1, -1},
                                     {8, 15, 7, -7},   {12, 27, 15, -7}, {7, 14, 7, -7},
                                     {7, 10, 2, 0},    {9, 21, 8, 0}};
    for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
        const MaximalOrder R = build_maximal_order(p);
        const AchievableSet ach = achievable_norms(R, p);
        const auto brute_ach = oracle::achievable_brute(R, p.get_ui());
        for (const auto& job : fields) {
            const auto septuples = enumerate_septuples(job.A, job.B, job.C);
            for (const auto& s : septuples) {
                const Mode mode = job.D == 0 ? Mode::generic : Mode::imaginary_quadratic;
                const Int target = job.D == 0 ? s.x : -Int(job.D);
                const bool allzero_ok = job.D != 0 && divides(p, Int(job.D) * s.n);
                const auto got = mode == Mode::generic
                                     ? enumerate_profiles_generic(s, p, ach, allzero_ok)
                                     : enumerate_profiles_imaginary(s, p, ach, target, allzero_ok);
                const auto want = oracle::profiles_brute(s, p, brute_ach, mode, target, allzero_ok);
                REQUIRE(got.size() == want.size());
                for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
            }
        }
    }
}

TEST_CASE("structural filters") {
    const FieldSpec zeta4 = imaginary_field(13, 50, 49, -1, ZetaFlag::zeta4);
    const Septuple s7{5, 8, 2, -12, 5, 16, 7};
    const NormTraceProfile diag{1, 0, 0, 0, 0, 0, Mode::imaginary_quadratic};
    NormTraceProfile off = diag;
    off.N2 = 1;
    off.T12 = 2;

    // zeta4 at p = 7 with n = 7: diagonal kept (7 | 14), off-diagonal dropped
    auto kept = apply_structural_filters({diag, off}, zeta4, 7, s7);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].diagonal());

    // p = 5 with 5 not dividing 2n: everything dropped
    CHECK(apply_structural_filters({diag, off}, zeta4, 5, s7).empty());

    // non-zeta field with p not dividing 2fDn: diagonal dropped, rest kept
    const FieldSpec plain = imaginary_field(12, 27, 15, -7);
    const Septuple s1{1, 11, 1, -17, 9, 82, 1};
    auto kept2 = apply_structural_filters({diag, off}, plain, 5, s1);
    REQUIRE(kept2.size() == 1);
    CHECK_FALSE(kept2[0].diagonal());
}

#include <doctest.h>

#include "iep/field_spec.hpp"

using namespace iep;

namespace {

FieldSpec curve1_spec() {
    FieldSpec f;
    f.A = 13;
    f.B = 50;
    f.C = 49;
    f.mode = Mode::imaginary_quadratic;
    f.D = -1;
    f.f = 1;
    f.zeta = ZetaFlag::zeta4;
    f.basis_Oplus = mat3_identity();
    f.automorphisms.push_back({Rat(16), Rat(-8), Rat(1)});
    return f;
}

}  // namespace

TEST_CASE("validate accepts the worked-example field") {
    const FieldSpec v = validate(curve1_spec());
    CHECK(v.validated);
    CHECK(v.A2m2B == 69);
    CHECK(v.mf2D == 1);
    // D = -1 = 3 mod 4, so w = f sqrt(D) itself
    REQUIRE(v.basis_quad.has_value());
    CHECK((*v.basis_quad)[0] == 0);
    CHECK((*v.basis_quad)[1] == 1);
}

TEST_CASE("validate accepts the X10 field and caches A^2-2B") {
    FieldSpec f;
    f.A = 5;
    f.B = 6;
    f.C = 1;
    f.mode = Mode::imaginary_quadratic;
    f.D = -2;
    f.basis_Oplus = mat3_identity();
    const FieldSpec v = validate(f);
    CHECK(v.A2m2B == 13);
    CHECK(v.mf2D == 2);
}

TEST_CASE("validate rejects degenerate cubics") {
    FieldSpec f;
    f.A = 1;
    f.B = 1;  // B > 0 to reach the real-root check with (1,0,1)-like shape
    f.C = 1;
    f.mode = Mode::generic;
    f.basis_Oplus = mat3_identity();
    CHECK_THROWS_AS(validate(f), config_error);

    f.A = 1;
    f.B = 0;
    f.C = 1;
    CHECK_THROWS_AS(validate(f), config_error);  // not totally real / B = 0
}

TEST_CASE("validate checks D, f, zeta consistency") {
    FieldSpec f = curve1_spec();
    f.D = 4;
    CHECK_THROWS_AS(validate(f), config_error);
    f = curve1_spec();
    f.D = -4;
    CHECK_THROWS_AS(validate(f), config_error);  // not square-free
    f = curve1_spec();
    f.zeta = ZetaFlag::zeta7;
    CHECK_THROWS_AS(validate(f), config_error);  // zeta7 needs D = -7
    f = curve1_spec();
    f.basis_Oplus[0][1] = 1;
    CHECK_THROWS_AS(validate(f), config_error);  // first row must be (1,0,0)
}

TEST_CASE("validate is idempotent") {
    const FieldSpec once = validate(curve1_spec());
    const FieldSpec twice = validate(once);
    CHECK(twice.A2m2B == once.A2m2B);
    CHECK(twice.validated);
}

TEST_CASE("conjugate root check") {
    const FieldSpec v = validate(curve1_spec());
    CHECK(conjugate_root_check(v, {Rat(16), Rat(-8), Rat(1)}));
    CHECK(conjugate_root_check(v, {Rat(0), Rat(1), Rat(0)}));
    CHECK_FALSE(conjugate_root_check(v, {Rat(0), Rat(2), Rat(0)}));

    // an invalid stored automorphism fails validation
    FieldSpec bad = curve1_spec();
    bad.automorphisms.push_back({Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(validate(bad), config_error);
}

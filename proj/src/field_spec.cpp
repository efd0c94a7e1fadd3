#include "iep/field_spec.hpp"

namespace iep {

namespace {

// multiply two residues mod t^3 - At^2 + Bt - C
std::array<Rat, 3> polmul_mod(const std::array<Int, 3>& ABC, const std::array<Rat, 3>& f,
                              const std::array<Rat, 3>& g) {
    const Rat A(ABC[0]), B(ABC[1]), C(ABC[2]);
    std::array<Rat, 5> prod{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] += f[i] * g[j];
    // t^3 = A t^2 - B t + C; reduce degree 4 then 3
    for (int d = 4; d >= 3; --d) {
        const Rat c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        prod[d - 1] += c * A;
        prod[d - 2] -= c * B;
        prod[d - 3] += c * C;
    }
    return {prod[0], prod[1], prod[2]};
}

bool has_integer_root(const std::array<Int, 3>& ABC) {
    // monic cubic: any rational root is an integer dividing C
    const Int C = ABC[2];
    auto eval = [&](const Int& r) { return r * r * r - ABC[0] * r * r + ABC[1] * r - C; };
    Int m = abs(C);
    for (Int d = 1; d * d <= m; ++d) {
        if (!divides(d, m)) continue;
        const Int e = m / d;
        const Int roots[4] = {d, Int(-d), e, Int(-e)};
        for (const Int& r : roots)
            if (eval(r) == 0) return true;
    }
    return false;
}

Int cubic_disc(const std::array<Int, 3>& ABC) {
    // disc of t^3 + bt^2 + ct + d with b=-A, c=B, d=-C
    const Int b = -ABC[0], c = ABC[1], d = -ABC[2];
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

bool is_square_free(const Int& n) {
    Int m = abs(n);
    if (m == 0) return false;
    for (Int d = 2; d * d <= m; ++d) {
        if (divides(d * d, m)) return false;
        while (divides(d, m)) m /= d;
    }
    return true;
}

}  // namespace

std::array<Rat, 3> compose_mod_cubic(const std::array<Int, 3>& ABC, const std::array<Rat, 3>& h) {
    // m(h(t)) mod m(t) = h^3 - A h^2 + B h - C mod m
    const std::array<Rat, 3> one{1, 0, 0};
    const auto h2 = polmul_mod(ABC, h, h);
    const auto h3 = polmul_mod(ABC, h2, h);
    std::array<Rat, 3> r{};
    for (int i = 0; i < 3; ++i)
        r[i] = h3[i] - Rat(ABC[0]) * h2[i] + Rat(ABC[1]) * h[i] - Rat(ABC[2]) * one[i];
    return r;
}

bool conjugate_root_check(const FieldSpec& spec, const std::array<Rat, 3>& triple) {
    const auto r = compose_mod_cubic(spec.cubic(), triple);
    return r[0] == 0 && r[1] == 0 && r[2] == 0;
}

FieldSpec validate(FieldSpec spec) {
    if (spec.A <= 0 || spec.B <= 0 || spec.C <= 0)
        throw config_error("A, B, C must all be positive");
    if (has_integer_root(spec.cubic()))
        throw config_error("t^3 - At^2 + Bt - C is reducible over Q");
    if (cubic_disc(spec.cubic()) <= 0)
        throw config_error("cubic is not totally real (discriminant <= 0)");

    if (spec.mode == Mode::imaginary_quadratic) {
        if (spec.D >= 0) throw config_error("D must be negative in imaginary-quadratic mode");
        if (!is_square_free(spec.D)) throw config_error("D must be square-free");
        if (spec.f <= 0) throw config_error("conductor f must be positive");
        if (spec.zeta == ZetaFlag::zeta4 && (spec.D != -1 || spec.f != 1))
            throw config_error("zeta4 requires D = -1, f = 1");
        if (spec.zeta == ZetaFlag::zeta7 && (spec.D != -7 || spec.f != 1))
            throw config_error("zeta7 requires D = -7, f = 1");
        spec.mf2D = -spec.f * spec.f * spec.D;
        if (!spec.basis_quad) {
            // w = f*omega: omega = (1+sqrt(D))/2 for D = 1 mod 4, else sqrt(D)
            if (mod_floor(spec.D, 4) == 1)
                spec.basis_quad = {{make_rat(spec.f, 2), make_rat(1, 2)}};
            else
                spec.basis_quad = {{Rat(0), Rat(1)}};
        }
        if ((*spec.basis_quad)[1] == 0)
            throw config_error("basis_quad must involve sqrt(D)");
    } else {
        if (spec.zeta != ZetaFlag::none)
            throw config_error("zeta flags require imaginary-quadratic mode");
        spec.mf2D = 0;
    }

    if (spec.basis_Oplus[0][0] != 1 || spec.basis_Oplus[0][1] != 0 || spec.basis_Oplus[0][2] != 0)
        throw config_error("first row of basis_Oplus must be (1,0,0)");
    const Rat det = mat3_det(spec.basis_Oplus);
    if (det == 0) throw config_error("basis_Oplus is singular");
    const Rat inv_det = 1 / det;
    if (!is_integer(inv_det) || inv_det.get_num() <= 0)
        throw config_error("det(basis_Oplus) must be 1/I for a positive integer index I");

    for (const auto& t : spec.automorphisms)
        if (!conjugate_root_check(spec, t))
            throw config_error("automorphism triple (" + rat_to_string(t[0]) + "," +
                               rat_to_string(t[1]) + "," + rat_to_string(t[2]) +
                               ") is not a conjugate root");

    if (spec.index_OK_O <= 0) throw config_error("index [O_K:O] must be positive");
    for (const Int& p : spec.pre_excluded_primes)
        if (!is_prime(p)) throw config_error("pre-excluded entry is not prime");

    spec.A2m2B = spec.A * spec.A - 2 * spec.B;
    if (spec.A2m2B <= 0)
        throw internal_error("A^2 - 2B <= 0 for a totally real totally positive cubic");
    spec.validated = true;
    return spec;
}

}  // namespace iep

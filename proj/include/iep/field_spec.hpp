#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iep/linalg.hpp"
#include "iep/numeric.hpp"

namespace iep {

enum class Mode { generic, imaginary_quadratic };
enum class ZetaFlag { none, zeta4, zeta7 };

using Mat6q = std::array<std::array<Rat, 6>, 6>;

// the CM-field job description; order bases and automorphism data are
// inputs, not computed
struct FieldSpec {
    Int A, B, C;
    Mode mode = Mode::imaginary_quadratic;
    Int D = 0;  // negative square-free, imaginary mode only
    Int f = 1;
    Mat3q basis_Oplus;                       // rows over (1, mu, mu^2)
    std::optional<Mat6q> basis_O_eta;        // rows over (1, eta, ..., eta^5)
    std::optional<std::array<Rat, 2>> basis_quad;  // w = c0 + c1 * f*sqrt(D); default Z[f*omega]
    std::vector<std::array<Rat, 3>> automorphisms;
    ZetaFlag zeta = ZetaFlag::none;
    Int index_OK_O = 1;
    std::vector<Int> pre_excluded_primes;
    std::vector<Mat3q> over_orders_plus;
    std::vector<Mat6q> over_orders_full;
    std::vector<std::array<Rat, 2>> over_orders_quad;

    bool validated = false;
    Int A2m2B = 0;   // A^2 - 2B
    Int mf2D = 0;    // -f^2 D (imaginary mode)

    std::array<Int, 3> cubic() const { return {A, B, C}; }  // t^3 - At^2 + Bt - C
};

// checks every FieldSpec invariant and caches derived quantities; throws
// config_error with a description of the failed invariant
FieldSpec validate(FieldSpec spec);

// true iff m(a0 + a1 t + a2 t^2) = 0 mod m(t) for the cubic m
bool conjugate_root_check(const FieldSpec& spec, const std::array<Rat, 3>& triple);

// reduction of g(h(t)) mod the monic cubic t^3 - At^2 + Bt - C, where h is
// given by coefficients (h0, h1, h2)
std::array<Rat, 3> compose_mod_cubic(const std::array<Int, 3>& ABC,
                                     const std::array<Rat, 3>& h);

}  // namespace iep

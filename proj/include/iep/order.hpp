#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iep/linalg.hpp"
#include "iep/quat.hpp"

namespace iep {

// trace-zero sublattice of an order: rank-3, with the norm form as an
// integer ternary quadratic form over the kernel basis
struct TraceZeroLattice {
    std::array<Quat, 3> basis;                       // e_1, e_2, e_3
    std::array<std::array<Int, 4>, 3> order_coords;  // e_r over b_1..b_4
    // Q(c) = sum diag[r] c_r^2 + sum_{r<s} cross[r][s] c_r c_s
    std::array<Int, 3> diag;
    std::array<std::array<Int, 3>, 3> cross;
};

struct MaximalOrder {
    AlgebraParams params;
    Mat4q M;                      // rows = basis b_1..b_4 over 1,i,j,k
    std::array<Quat, 4> basis;
    Mat4q coord_solve;            // y in R iff coord_solve * coords(y) is integral
    Rat detM;
    std::array<Rat, 4> minor_bound_B;  // B_i = (q c_i0^2 + c_i1^2) p + (q c_i2^2 + c_i3^2)
    TraceZeroLattice trace_zero;
};

// deterministic per p; postcondition |disc| = p^2 plus ring closure is
// verified and a failure throws (a bug in the recipe, not a user error)
MaximalOrder build_maximal_order(const Int& p);

bool membership(const MaximalOrder& R, const Quat& y);

// exact coordinates of y over the order basis, when integral
std::optional<std::array<Int, 4>> order_coords(const MaximalOrder& R, const Quat& y);

// |det(Tr(b_i b_j))|, equal to p^2 for a maximal order of B_{p,oo}
Int order_disc(const MaximalOrder& R);

Quat quat_from_order_coords(const MaximalOrder& R, const std::array<Int, 4>& c);

}  // namespace iep

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iep/numeric.hpp"

namespace iep {

using Vec3q = std::array<Rat, 3>;
using Mat3q = std::array<std::array<Rat, 3>, 3>;
using Vec4q = std::array<Rat, 4>;
using Mat4q = std::array<std::array<Rat, 4>, 4>;

inline Mat3q mat3_identity() {
    Mat3q m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

Mat3q mat3_mul(const Mat3q& a, const Mat3q& b);
Mat3q mat3_add(const Mat3q& a, const Mat3q& b);
Mat3q mat3_scale(const Rat& s, const Mat3q& a);
Rat mat3_det(const Mat3q& a);

// coefficients (A, B, C) with char(M) = t^3 - A t^2 + B t - C
std::array<Rat, 3> mat3_char_poly(const Mat3q& m);

Rat mat4_det(const Mat4q& a);
std::optional<Mat4q> mat4_inverse(const Mat4q& a);
Vec4q mat4_apply(const Mat4q& a, const Vec4q& x);

// minor of a deleting row i, column j (3x3 determinant)
Rat mat4_minor(const Mat4q& a, int i, int j);

// basis of the integer kernel of a 1x4 integer row vector (rank of kernel is
// 3 when the row is nonzero; returns 4 vectors when the row is zero)
std::vector<std::array<Int, 4>> int_row_kernel(const std::array<Int, 4>& row);

// nullspace basis of an m x 4 rational matrix, exact Gaussian elimination
std::vector<Vec4q> rational_nullspace4(const std::vector<Vec4q>& rows);

}  // namespace iep

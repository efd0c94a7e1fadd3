#include "iep/linalg.hpp"

#include <algorithm>

namespace iep {

Mat3q mat3_mul(const Mat3q& a, const Mat3q& b) {
    Mat3q c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

Mat3q mat3_add(const Mat3q& a, const Mat3q& b) {
    Mat3q c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = a[i][j] + b[i][j];
    return c;
}

Mat3q mat3_scale(const Rat& s, const Mat3q& a) {
    Mat3q c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = s * a[i][j];
    return c;
}

Rat mat3_det(const Mat3q& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::array<Rat, 3> mat3_char_poly(const Mat3q& m) {
    const Rat tr = m[0][0] + m[1][1] + m[2][2];
    Rat minors = 0;
    minors += m[1][1] * m[2][2] - m[1][2] * m[2][1];
    minors += m[0][0] * m[2][2] - m[0][2] * m[2][0];
    minors += m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {tr, minors, mat3_det(m)};
}

Rat mat4_det(const Mat4q& a) {
    Mat4q m = a;
    Rat det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            if (m[r][col] == 0) continue;
            const Rat f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<Mat4q> mat4_inverse(const Mat4q& a) {
    Mat4q m = a;
    Mat4q inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = (i == j) ? 1 : 0;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat d = m[col][col];
        for (int c = 0; c < 4; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = 0; c < 4; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

Vec4q mat4_apply(const Mat4q& a, const Vec4q& x) {
    Vec4q y{};
    for (int i = 0; i < 4; ++i) {
        Rat s = 0;
        for (int j = 0; j < 4; ++j) s += a[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

Rat mat4_minor(const Mat4q& a, int i, int j) {
    Mat3q m{};
    int r = 0;
    for (int rr = 0; rr < 4; ++rr) {
        if (rr == i) continue;
        int c = 0;
        for (int cc = 0; cc < 4; ++cc) {
            if (cc == j) continue;
            m[r][c] = a[rr][cc];
            ++c;
        }
        ++r;
    }
    return mat3_det(m);
}

std::vector<std::array<Int, 4>> int_row_kernel(const std::array<Int, 4>& row) {
    // column operations on the identity, reducing the row to (g,0,0,0)
    std::array<Int, 4> r = row;
    std::array<std::array<Int, 4>, 4> u{};  // u[c] = current column c as a Z^4 vector
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) u[i][j] = (i == j) ? 1 : 0;

    for (int c = 1; c < 4; ++c) {
        // euclid on (r[0], r[c])
        while (r[c] != 0) {
            if (r[0] == 0) {
                std::swap(r[0], r[c]);
                std::swap(u[0], u[c]);
                break;
            }
            Int q = floor_div(r[c], r[0]);
            r[c] -= q * r[0];
            for (int j = 0; j < 4; ++j) u[c][j] -= q * u[0][j];
            if (r[c] != 0) {
                std::swap(r[0], r[c]);
                std::swap(u[0], u[c]);
            }
        }
    }
    std::vector<std::array<Int, 4>> kernel;
    for (int c = 0; c < 4; ++c)
        if (r[c] == 0) kernel.push_back(u[c]);
    return kernel;
}

std::vector<Vec4q> rational_nullspace4(const std::vector<Vec4q>& rows) {
    std::vector<Vec4q> m = rows;
    const size_t nr = m.size();
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    size_t rank = 0;
    for (int col = 0; col < 4 && rank < nr; ++col) {
        size_t pr = rank;
        while (pr < nr && m[pr][col] == 0) ++pr;
        if (pr == nr) continue;
        std::swap(m[pr], m[rank]);
        const Rat d = m[rank][col];
        for (int c = 0; c < 4; ++c) m[rank][c] /= d;
        for (size_t r = 0; r < nr; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = 0; c < 4; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_row[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<Vec4q> basis;
    for (int col = 0; col < 4; ++col) {
        if (pivot_row[col] >= 0) continue;
        Vec4q v{};
        v[col] = 1;
        for (int pc = 0; pc < 4; ++pc)
            if (pivot_row[pc] >= 0) v[pc] = -m[pivot_row[pc]][col];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace iep

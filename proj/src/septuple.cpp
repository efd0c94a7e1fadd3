#include "iep/septuple.hpp"

namespace iep {

std::vector<Septuple> enumerate_septuples(const Int& A, const Int& B, const Int& C) {
    std::vector<Septuple> out;
    const Int box = A * A - 2 * B;
    if (box <= 0) return out;
    for (Int x = 1; x * x < box; ++x) {
        const Int dn = A - x;
        const Int a_max = floor_div(box - x * x, 2);
        for (Int a = 1; a <= a_max; ++a) {
            const Int cn = dn * x - a - B;
            const Int b = cn * x + dn * a + C;
            const Int gamma = cn * a + dn * b;
            const Int n = a * gamma - b * b;  // gamma > b^2/a iff n > 0
            if (n <= 0) continue;
            out.push_back(Septuple{x, dn, a, cn, b, gamma, n});
        }
    }
    return out;  // loop order is already (x, a) lexicographic
}

Mat3q lambda1(const Septuple& s) {
    Mat3q m{};
    m[0] = {Rat(s.x), Rat(s.a), Rat(s.b)};
    m[1] = {Rat(1), Rat(0), Rat(s.cn)};
    m[2] = {Rat(0), Rat(1), Rat(s.dn)};
    return m;
}

}  // namespace iep

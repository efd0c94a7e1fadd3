#pragma once

#include <vector>

#include "iep/linalg.hpp"
#include "iep/numeric.hpp"

namespace iep {

// [x, d/n, a, c/n, b, gamma, n], all integers
struct Septuple {
    Int x, dn, a, cn, b, gamma, n;

    auto tie() const { return std::tie(x, dn, a, cn, b, gamma, n); }
    bool operator==(const Septuple& o) const { return tie() == o.tie(); }
    bool operator<(const Septuple& o) const { return tie() < o.tie(); }
    std::array<Int, 7> as_array() const { return {x, dn, a, cn, b, gamma, n}; }
};

// every tuple satisfying the defining equations and bounds, ordered
// lexicographically by (x, a)
std::vector<Septuple> enumerate_septuples(const Int& A, const Int& B, const Int& C);

// [[x, a, b], [1, 0, c/n], [0, 1, d/n]]; char poly t^3 - At^2 + Bt - C
Mat3q lambda1(const Septuple& s);

}  // namespace iep

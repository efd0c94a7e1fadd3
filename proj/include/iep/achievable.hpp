#pragma once

#include <vector>

#include "iep/order.hpp"

namespace iep {

// residues mod p attained by the reduced norm on trace-zero elements of R
struct AchievableSet {
    Int p;
    uint64_t pu = 0;
    bool materialized = false;
    std::vector<bool> residues;  // when materialized

    // classification of the ternary trace-zero norm form mod p, used for
    // large p where a full sweep is not materialized; equals the sweep
    enum class Kind { all, scaled_squares, zero_only } kind = Kind::all;
    uint64_t lambda = 1;  // rank-1 scale

    bool contains(const Int& N) const;
    bool contains_residue(uint64_t r) const;
    std::vector<uint64_t> residue_list() const;
};

// exact set {N(y) mod p : y in R, Tr(y) = 0}; sweep-materialized for
// p <= sweep_limit, closed form (form diagonalization over F_p) beyond
AchievableSet achievable_norms(const MaximalOrder& R, const Int& p, uint64_t sweep_limit = 1024);

}  // namespace iep

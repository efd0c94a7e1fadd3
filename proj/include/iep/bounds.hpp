#pragma once

#include <vector>

#include "iep/field_spec.hpp"
#include "iep/septuple.hpp"

namespace iep {

enum class BudgetCase { zeta_root, imaginary, generic_case };  // (i), (ii), (iii)

struct PrimeBudget {
    BudgetCase kind = BudgetCase::generic_case;
    Int theoretical_bound;
    Int practical_bound;
    std::vector<Int> candidate_primes;  // sorted ascending
};

// candidate primes of bad reduction for the field:
//   (i)  zeta flag set: odd primes dividing 2fn over all septuples
//   (ii) imaginary: odd primes <= max over septuples of 4*a*gamma*f^4*D^2
//   (iii) generic: odd primes <= max over septuples of 4*a*gamma*x^2
// p = 2 joins only under include_two; pre-excluded primes are removed
PrimeBudget prime_budget(const FieldSpec& spec, const std::vector<Septuple>& septuples,
                         bool include_two);

// per-(prime, septuple) skip that cannot lose solutions: past the pairwise
// norm-product bound only all-zero-discriminant profiles remain, and those
// need p | fDn (imaginary) / are rejected outright (generic)
bool septuple_feasible_at(const FieldSpec& spec, const Septuple& s, const Int& p,
                          bool allow_zero_disc_generic);

}  // namespace iep

#include "iep/bounds.hpp"

#include <algorithm>
#include <set>

namespace iep {

PrimeBudget prime_budget(const FieldSpec& spec, const std::vector<Septuple>& septuples,
                         bool include_two) {
    PrimeBudget budget;
    const Int box = spec.A2m2B;

    std::set<Int> cands;
    if (spec.zeta != ZetaFlag::none) {
        budget.kind = BudgetCase::zeta_root;
        budget.theoretical_bound = floor_div(box * box * box, 2);
        Int max_cand = 1;
        for (const auto& s : septuples)
            for (const Int& q : prime_divisors(2 * spec.f * s.n)) {
                if (q == 2) continue;
                cands.insert(q);
                max_cand = std::max(max_cand, q);
            }
        budget.practical_bound = max_cand;
    } else if (spec.mode == Mode::imaginary_quadratic) {
        budget.kind = BudgetCase::imaginary;
        const Int f4D2 = spec.f * spec.f * spec.f * spec.f * spec.D * spec.D;
        budget.theoretical_bound = f4D2 * box * box * box;
        Int practical = 0;
        for (const auto& s : septuples)
            practical = std::max(practical, Int(4 * s.a * s.gamma * f4D2));
        budget.practical_bound = practical;
        for (const Int& q : primes_up_to(practical))
            if (q != 2) cands.insert(q);
    } else {
        budget.kind = BudgetCase::generic_case;
        budget.theoretical_bound = box * box * box * box;
        Int practical = 0;
        for (const auto& s : septuples)
            practical = std::max(practical, Int(4 * s.a * s.gamma * s.x * s.x));
        budget.practical_bound = practical;
        for (const Int& q : primes_up_to(practical))
            if (q != 2) cands.insert(q);
    }

    if (include_two && !septuples.empty()) cands.insert(2);
    for (const Int& p : spec.pre_excluded_primes) cands.erase(p);

    budget.candidate_primes.assign(cands.begin(), cands.end());
    return budget;
}

bool septuple_feasible_at(const FieldSpec& spec, const Septuple& s, const Int& p,
                          bool allow_zero_disc_generic) {
    Int pair_cap;  // max of 4 N_i N_j over the norm bounds
    if (spec.mode == Mode::imaginary_quadratic) {
        pair_cap = 4 * s.a * s.gamma * spec.mf2D * spec.mf2D;
        if (p <= pair_cap) return true;
        // beyond the cap every D(d_i d_j) divisible by p is zero, so only
        // all-zero-disc profiles survive and they need p | fDn
        return divides(p, spec.f * spec.D * s.n);
    }
    pair_cap = 4 * s.a * s.gamma * s.x * s.x;
    if (p <= pair_cap) return true;
    return allow_zero_disc_generic;
}

}  // namespace iep

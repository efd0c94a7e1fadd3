#pragma once

#include <vector>

#include "iep/achievable.hpp"
#include "iep/field_spec.hpp"
#include "iep/septuple.hpp"

namespace iep {

struct NormTraceProfile {
    Int N1, N2, N3, T12, T13, T23;
    Mode mode = Mode::generic;

    auto tie() const { return std::tie(N1, N2, N3, T12, T13, T23); }
    bool operator==(const NormTraceProfile& o) const { return tie() == o.tie(); }
    bool operator<(const NormTraceProfile& o) const { return tie() < o.tie(); }
    std::array<Int, 6> as_array() const { return {N1, N2, N3, T12, T13, T23}; }

    bool diagonal() const {
        return N2 == 0 && N3 == 0 && T12 == 0 && T13 == 0 && T23 == 0;
    }
};

// all integer profiles passing the bounds, achievability, divisibility and
// discriminant filters, in deterministic (sorted) order. allzero_ok is the
// step-12 escape for profiles with D(y_i y_j) = 0 for all pairs: p | fDn in
// imaginary mode, a config switch in standalone generic mode.
std::vector<NormTraceProfile> enumerate_profiles_generic(const Septuple& s, const Int& p,
                                                         const AchievableSet& ach,
                                                         bool allzero_ok);

std::vector<NormTraceProfile> enumerate_profiles_imaginary(const Septuple& s, const Int& p,
                                                           const AchievableSet& ach,
                                                           const Int& mf2D, bool allzero_ok);

// primitivity and extra-automorphism rules (imaginary mode)
std::vector<NormTraceProfile> apply_structural_filters(std::vector<NormTraceProfile> profiles,
                                                       const FieldSpec& spec, const Int& p,
                                                       const Septuple& s);

// exact re-verification of the defining relation system for one profile
bool profile_relations_hold(const Septuple& s, const NormTraceProfile& prof, const Int& target);

}  // namespace iep

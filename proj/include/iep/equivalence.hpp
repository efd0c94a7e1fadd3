#pragma once

#include <vector>

#include "iep/lattice.hpp"
#include "iep/lift.hpp"

namespace iep {

struct NormalSolution {
    Septuple s;
    std::array<Quat, 3> triple;
    NormTraceProfile profile;
    Int p;
};

// total order making reports deterministic
bool solution_less(const NormalSolution& a, const NormalSolution& b);

// image of a septuple under the conjugate-root action mu' = a0 + a1 mu + a2 mu^2
Septuple conjugate_septuple(const Septuple& s, const std::array<Rat, 3>& aut, const Int& A,
                            const Int& B, const Int& C);

// true iff some nonzero phi in B conjugates t to t2 componentwise and
// normalizes R (checked on R's basis)
bool triples_conjugate(const std::array<Quat, 3>& t, const std::array<Quat, 3>& t2,
                       const MaximalOrder& R);

struct SolutionClass {
    NormalSolution representative;
    size_t size = 0;
    bool presumed_merge = false;          // merged across conjugate septuples
    std::vector<Septuple> member_septuples;
};

// steps 8-9: conjugate-root orbits across septuples, inner automorphisms
// within a septuple; sorted classes
std::vector<SolutionClass> dedupe(const std::vector<NormalSolution>& solutions,
                                  const FieldSpec& spec, const MaximalOrder& R,
                                  bool strict_equivalence);

}  // namespace iep

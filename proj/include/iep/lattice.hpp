#pragma once

#include <vector>

#include "iep/order.hpp"
#include "iep/profile.hpp"

namespace iep {

// complete list of y in R with Tr(y) = 0 and N(y) = N, including both y and
// -y, sorted lexicographically on order-basis coordinates
std::vector<Quat> elements_with_norm_trace0(const MaximalOrder& R, const Int& N);

// all triples with the profile's pair traces; the T12 filter runs before the
// y3 loop; deterministic order
std::vector<std::array<Quat, 3>> assemble_triples(const std::vector<Quat>& l1,
                                                  const std::vector<Quat>& l2,
                                                  const std::vector<Quat>& l3,
                                                  const NormTraceProfile& profile);

}  // namespace iep

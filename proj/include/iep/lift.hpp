#pragma once

#include <vector>

#include "iep/field_spec.hpp"
#include "iep/order.hpp"
#include "iep/septuple.hpp"

namespace iep {

// 3x3 matrix with quaternion entries; rationals embed as scalar quaternions
struct QuatMat3 {
    std::array<std::array<Quat, 3>, 3> m;
};

QuatMat3 qm_from_rational(const AlgebraParams& alg, const Mat3q& a);
QuatMat3 qm_mul(const QuatMat3& a, const QuatMat3& b);
QuatMat3 qm_add(const QuatMat3& a, const QuatMat3& b);
QuatMat3 qm_scale(const Rat& s, const QuatMat3& a);
bool qm_eq(const QuatMat3& a, const QuatMat3& b);

// the matrix of Lambda_2 (generic) / Lambda_3 (imaginary) determined by the
// septuple and a trace-zero triple
QuatMat3 build_lambda2or3(const Septuple& s, const std::array<Quat, 3>& triple);

// entries in (1/n)R (n * entry in R) with the top-row entries in R itself
bool matrix_entries_admissible(const MaximalOrder& R, const QuatMat3& m, const Int& n);

// rows of T are coordinates over the supplied monomial matrices; true iff
// every combined matrix is admissible in the sense above
bool lifts_to_basis(const std::vector<QuatMat3>& monomials,
                    const std::vector<std::vector<Rat>>& basis_rows, const MaximalOrder& R,
                    const Int& n);

// monompasses I, Lambda1, Lambda1^2 for the O_+ lift
std::vector<QuatMat3> oplus_monomials(const AlgebraParams& alg, const Septuple& s);
// I, L2, -L1, -L1 L2, L1^2, L1^2 L2 realizing 1, eta, ..., eta^5
std::vector<QuatMat3> eta_monomials(const AlgebraParams& alg, const Septuple& s,
                                    const std::array<Quat, 3>& triple);
// I, Lambda3 realizing 1, f*sqrt(D)
std::vector<QuatMat3> quad_monomials(const AlgebraParams& alg, const Septuple& s,
                                     const std::array<Quat, 3>& triple);

bool index_is_p_power(const Int& index, const Int& p);

// exact matrix identities every emitted solution must satisfy
bool lambda_identities_hold(const FieldSpec& spec, const Septuple& s,
                            const std::array<Quat, 3>& triple);

}  // namespace iep

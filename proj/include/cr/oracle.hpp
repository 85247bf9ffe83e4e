#pragma once

#include "cr/surfaces.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cr {

// Independent reference computations used to confirm the main pipeline.

// Per-weight dimensions of aut of v = sum eps_k |z_k|^2 from a dense ansatz
// f_k = sum c z^a w^b, e = sum c z^a w^b, solved over F_p[i] with p = 1000003.
std::map<int, int> quadric_ansatz_profile(const std::vector<int>& signature, int lo, int hi);

// The |zeta|^2 coefficient S forced by the vanishing of the weight-2 part of the complex
// Hessian determinant in (z1, z2, zeta) of <z, zbar> + 2Re(K(z, z) zetabar) + S |zeta|^2.
Poly s_form_from_hessian(const TwoNondegParams& p, const TablePtr& table);

// Number of monomials of total weight mu in variables with the given positive weights.
std::int64_t monomial_count(const std::vector<int>& weights, int mu);

}  // namespace cr

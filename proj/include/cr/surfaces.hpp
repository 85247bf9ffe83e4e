#pragma once

#include "cr/grading.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cr {

// Rigid hypersurface v = F(z, zbar, ...), F real and independent of u and w.
struct ModelSurface {
    std::string name;
    WeightSystem ws;
    Poly F;
    int trunc;           // highest weight of F that is retained
    bool exact = false;  // F is the whole defining function, not a truncated series
    std::vector<std::string> zvars;
    std::string wvar = "w";
    std::string uvar = "u";

    const TablePtr& table() const { return F.table(); }
    // Highest weight at which diagnostics built from second derivatives are trustworthy.
    int reliable_weight() const { return trunc - 2; }
};

// Checks conj-fixedness, absence of w/wbar/u, weights >= 2. Throws std::invalid_argument.
void validate_surface(const ModelSurface& s);
// Terms of bidegree (m,0) or (0,m) in (holomorphic, antiholomorphic) variables.
Poly pluriharmonic_part(const Poly& F);

TablePtr coordinate_table(const std::vector<std::string>& zvars);

ModelSurface quadric(int n, const std::vector<int>& signature);

struct J6Params {
    std::array<GaussRat, 4> r{};
    std::array<GaussRat, 8> s{};
};
ModelSurface three_nondeg_j6(const J6Params& p);

struct TwoNondegParams {
    int pair_id = 9;
    GaussRat k = 1;
    GaussRat m = 0;
    std::array<GaussRat, 3> R{};  // R(z,z) = r1 z1^2 + r2 z1 z2 + r3 z2^2
    // Optional weight-4 extras of the general normal form (cubic P(z,z,zbar), Q(z,z,z), quartic T).
    std::optional<Poly> P, Q, T;
};
// Hermitian form matrix H (<z,zbar> = sum H_ij z_i zbar_j) and K matrix [[k,l],[l,m]] for a pair class.
struct PairForms {
    std::array<std::array<GaussRat, 2>, 2> H;
    std::array<std::array<GaussRat, 2>, 2> K;
};
PairForms pair_forms(const TwoNondegParams& p);
void validate_pair_params(const TwoNondegParams& p);
// The form S of the |zeta|^2 term forced by the pair class, as a polynomial in z, zbar.
Poly forced_s_form(const TwoNondegParams& p, const TablePtr& table);
ModelSurface two_nondeg(const TwoNondegParams& p);

ModelSurface cubic_q();
// v = 2Re(z1 z2bar) + 2Re(z1^2 zetabar): the same surface as Q after renaming coordinates.
ModelSurface cubic_q_permuted();

std::array<Poly, 3> levi_minors(const ModelSurface& s, const std::string& zvar, const std::string& zetavar,
                                const std::string& etavar);
Poly hessian3_det(const ModelSurface& s);

// Surface-spec JSON (compact, sorted keys) and its SHA-256.
std::string surface_json(const ModelSurface& s);
ModelSurface surface_from_json(const std::string& text);
std::string sha256_hex(const std::string& data);

}  // namespace cr

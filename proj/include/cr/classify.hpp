#pragma once

#include "cr/surfaces.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace cr {

using Mat2 = std::array<std::array<GaussRat, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_conj(const Mat2& a);
Mat2 mat_transpose(const Mat2& a);
Mat2 mat_inverse(const Mat2& a);
Mat2 mat_scale(const Mat2& a, const GaussRat& c);
GaussRat mat_det(const Mat2& a);
GaussRat mat_trace(const Mat2& a);
Mat2 mat_identity();

// <z, zbar> = sum H_ij z_i zbar_j with H Hermitian; K(z, z) = z^T K z with K symmetric,
// i.e. K = [[k, l], [l, m]] gives k z1^2 + 2l z1 z2 + m z2^2.
struct FormPair {
    Mat2 H;
    Mat2 K;
};

void validate_form_pair(const FormPair& p);

struct PairClass {
    int id = 0;
    // Exact invariants that fix the class parameters; e.g. "k2", "m2" for classes 1 and 4
    // (the parameters themselves may be irrational), "m" for class 8, "m_re", "m_im2" for class 7.
    std::map<std::string, Rat> params;
    // A transformation C with C^T H conj(C) and C^T K C in normal form, when one was found exactly.
    std::optional<Mat2> witness;
};

// Decides the class from the signature of H, the rank of K and the similarity invariants of
// N = conj(H)^-1 conj(K) H^-1 K (which transforms as N -> C^-1 N C under z -> Cz).
// Throws std::invalid_argument for degenerate H, zero K, or pairs outside the nine classes.
PairClass classify_pair(const FormPair& p);

// Normal form (H, K) of a class with the given parameters.
FormPair normal_form(const TwoNondegParams& p);

// Dimension of the Lie algebra of G0: A in gl(2, C), r real, b complex with
// A^T H + H conj(A) = r H and A^T K + K A = (r - conj(b)) K.
int g0_dim(const FormPair& p);
int g0_dim(int class_id);

struct JetGroupElement {
    Mat2 C;
    Rat rho;
    GaussRat beta;
    std::array<GaussRat, 2> a{};
    std::array<GaussRat, 2> alpha{};
};

// K~ = (rho / conj(beta)) C^-T K C^-1; requires C^T H conj(C) = rho H.
FormPair jet_action(const JetGroupElement& e, const FormPair& p);
JetGroupElement compose(const JetGroupElement& first, const JetGroupElement& second);
// v = <z, zbar> + 2Re(K(z, z) zetabar), truncated at weight 3.
ModelSurface surface_from_pair(const FormPair& p);
ModelSurface jet_action(const JetGroupElement& e, const ModelSurface& s);
FormPair pair_of_surface(const ModelSurface& s);

// Window-kernel dimension of the depth-3 operator on jets of weight 1..4 without constant terms.
int jet13_dim_check(const ModelSurface& s);
// Kernel on jets of weight >= 5 (window 5..hi, projected onto 5..hi-2).
int jet13_uniqueness_slice(const ModelSurface& s, int hi = 9);

}  // namespace cr

#pragma once

#include "cr/linalg.hpp"
#include "cr/tangency.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cr {

// Jets of weight lo..hi; equations at every equation weight lo..hi (shifted by the shape's
// w-offset) of the depth-limited operator. Jets of weight above report_hi (default hi - depth + 1)
// still miss some of their equations, so reported dimensions are those of the projection of the
// kernel onto jet weights lo..report_hi ("window-kernel").
struct Window {
    int lo = 0;
    int hi = 0;
    int depth = 1;
    std::optional<int> report_hi;

    int reported_top() const { return report_hi ? *report_hi : hi - depth + 1; }
};

struct ColumnLabel {
    JetBasisElement el;
    int part;  // 0: real coefficient, 1: imaginary coefficient
};

struct RowLabel {
    Monomial mono;  // representative: mono <= conj(mono)
    int part;       // 0: real part, 1: imaginary part of the coefficient
    auto operator<=>(const RowLabel&) const = default;
};

struct LinearOperatorMatrix {
    std::string surface;
    JetShape shape;
    std::string grading;
    Window window;
    TablePtr table;
    std::vector<ColumnLabel> cols;
    std::vector<RowLabel> rows;
    SparseMatrix M;
};

LinearOperatorMatrix assemble(const LinearizedOperator& op, const Window& w);

// "z1^2*zetabar^1", or "1" for the unit monomial.
std::string monomial_label(const Monomial& m, const VarTable& t);
// Text export: header lines starting with '#', then "row col p/q" triplets (0-based).
std::string export_matrix(const LinearOperatorMatrix& m);

FieldJet jet_from_vector(const LinearOperatorMatrix& m, const std::vector<Rat>& x);
std::vector<Rat> vector_from_jet(const LinearOperatorMatrix& m, const FieldJet& phi);

struct KernelBasis {
    std::vector<std::vector<Rat>> vectors;
    std::vector<FieldJet> jets;
};
KernelBasis kernel_basis(const LinearOperatorMatrix& m);

struct BoundResult {
    int cols = 0;
    int rank = 0;
    int kernel_dim = 0;         // raw kernel on the whole window
    int low_cols = 0;           // columns of jet weight <= reported top
    int rank_high = 0;          // rank of the columns above the reported top
    int window_kernel_dim = 0;  // dimension of the projection onto the reported weights
};
BoundResult window_kernel(const LinearOperatorMatrix& m);
BoundResult param_bound(const LinearizedOperator& op, const Window& w);

// Per-weight kernel dimensions of a strictly graded operator (F weighted homogeneous of weight [w]).
struct GradedProfile {
    std::map<int, int> dims;
    int lo = 0;
    int hi = 0;
    bool stabilized = false;  // the top two weights have empty kernel
    int total() const;
};
GradedProfile graded_profile(const LinearizedOperator& op, int lo, int hi);
// Same, with the kernel basis of each weight block.
std::map<int, std::vector<FieldJet>> graded_kernel_bases(const LinearizedOperator& op, int lo, int hi);

// Residual of the depth-limited operator at equation weights lo..hi of the window,
// using the jet components of weight lo..hi only.
Poly window_residual(const LinearizedOperator& op, const FieldJet& phi, const Window& w);
bool verify_solution(const LinearizedOperator& op, const FieldJet& phi, const Window& w);

}  // namespace cr

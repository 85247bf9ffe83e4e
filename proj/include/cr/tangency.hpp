#pragma once

#include "cr/surfaces.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cr {

// Component layouts used throughout.
JetShape shape_quadric(int n);     // f_k along z_k at jet weight + 1, e along w at jet weight + 2
JetShape shape_j6();               // (f, g, h, e) = (f_{mu-1}, g_{mu-2}, h_{mu-3}, e_mu)
JetShape shape_two_nondeg_w1();    // (f1, f2, g, h) = (f_{mu-1}, g_{mu-2}, h_mu)
JetShape shape_two_nondeg_w2();    // (f1, f2, g, h) = (f_{mu-2}, g_{mu-4}, h_mu)
JetShape shape_q();                // field of weight mu: (f, g, h, e) of weights mu+2, mu+1, mu+1, mu+3

// Holomorphic polynomial components of a vector field or of a map perturbation.
struct FieldJet {
    JetShape shape;
    std::map<std::string, Poly> comps;

    FieldJet(JetShape shape, TablePtr table);
    Poly& operator[](const std::string& name);
    const Poly& at(const std::string& name) const;
    const TablePtr& table() const { return table_; }
    // Splits every component by jet weight (component weight minus offset).
    std::map<int, FieldJet> by_jet_weight(const WeightSystem& ws) const;

private:
    TablePtr table_;
};

void validate_jet(const FieldJet& phi);

// Im(e) - sum_j 2Re(f_j dF/dz_j) with w = u + iF, truncated above max_weight when given.
// It vanishes identically exactly when 2Re(sum f_j d/dz_j + e d/dw) is tangent to v = F.
Poly tangency_residual(const ModelSurface& s, const FieldJet& phi, std::optional<int> max_weight = std::nullopt);

// The linear operator used everywhere below is normalized as
//   L(phi) = 2Re(i e + 2 sum_j f_j dF/dz_j)|_{w = u + iF} = -2 * tangency_residual.
// A jet of weight mu contributes at equation weights mu, mu+1, ...; the depth-k operator keeps
// the first k of these (equation weight = output weight minus the shape's w-offset).
class LinearizedOperator {
public:
    LinearizedOperator(const ModelSurface& s, const JetShape& shape, const WeightSystem& ws);

    const ModelSurface& surface() const { return s_; }
    const JetShape& shape() const { return shape_; }
    const WeightSystem& ws() const { return ws_; }
    int equation_offset() const { return eoff_; }

    // Image of the single-term component c * mono in slot comp, keeping output weights in [lo, hi].
    Poly column(int comp, const Monomial& mono, const GaussRat& c, int lo, int hi) const;
    // Depth-truncated image of a jet, restricted to output weights <= max_out when given.
    Poly apply(const FieldJet& phi, int depth, std::optional<int> max_out = std::nullopt) const;
    // Full linearization through output weight max_out.
    Poly apply_full(const FieldJet& phi, int max_out) const;
    // Throws when the surface's truncation does not determine the depth-k operator.
    void check_depth(int depth) const;

private:
    Poly substitute_w(const Poly& p, int max_out) const;
    const Poly& w_power(int k, int max_out) const;

    ModelSurface s_;
    JetShape shape_;
    WeightSystem ws_;
    int eoff_;
    int wvar_;
    Poly W_;  // u + iF
    std::vector<std::optional<Poly>> dF_;  // dF/d(target) per component, empty for the w slot
    mutable std::map<std::pair<int, int>, Poly> wpow_;
};

// i * Fj * dpsi/du; psi must depend on u only.
Poly delta_operator(const Poly& Fj, const Poly& psi, const std::string& uvar = "u");

// Hand-written closed forms of the operators (conventions in the README).
// explicit_L_j6 returns L1 + L2 + L3 for the J6 normal form with the given parameters.
Poly explicit_L_j6(const FieldJet& phi, const J6Params& p);
// explicit_L_2nd_w1: L1 + L2 of the depth-2 operator under W1 (P and Q terms included).
Poly explicit_L_2nd_w1(const FieldJet& phi, const TwoNondegParams& p);
// explicit_calL: the reweighted operator under W2.
Poly explicit_calL(const FieldJet& phi, const TwoNondegParams& p);

}  // namespace cr

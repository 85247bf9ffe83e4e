#pragma once

#include "cr/tangency.hpp"

#include <map>
#include <string>
#include <utility>

namespace cr {

// Holomorphic map given by numerator/denominator pairs per target coordinate; coordinates
// without an entry are left unchanged. Denominators must have a nonzero constant term.
struct RationalMap {
    TablePtr table;
    std::map<std::string, std::pair<Poly, Poly>> comps;

    explicit RationalMap(TablePtr table);
    void set(const std::string& target, Poly num);
    void set(const std::string& target, Poly num, Poly den);
    std::pair<Poly, Poly> component(const std::string& target) const;
};

void validate_map(const RationalMap& m);

// Im(W) - F(Z, Zbar) at w = u + iF with denominators cleared. Zero exactly when the map sends
// the surface into itself.
Poly automorphism_defect(const ModelSurface& s, const RationalMap& m);
bool verify_exact_automorphism(const ModelSurface& s, const RationalMap& m);
// second o first
RationalMap compose(const RationalMap& first, const RationalMap& second);

// Translations of v = 2Re(z1 z2bar) + 2Re(z1^2 zetabar) moving the origin to (a, b, c, d),
// with d = d_re + i F(a, b, c) so that the point lies on the surface.
RationalMap q_translation(const ModelSurface& permuted, const GaussRat& a, const GaussRat& b, const GaussRat& c,
                          const Rat& d_re);
// Shears of v = 2Re(z1 zetabar + z2 zetabar^2): z1 -> z1 + i t zeta and z2 -> z2 + i t zeta^2.
RationalMap shear_z1(const ModelSurface& q, const Rat& t);
RationalMap shear_z2(const ModelSurface& q, const Rat& t);
// Flow of the weight-1 field with parameter N (and n = 0) at time t.
RationalMap g1_flow(const ModelSurface& q, const GaussRat& N, const Rat& t);
// The same flow with the w-terms of the z1 and z2 components omitted.
RationalMap g1_flow_without_w_terms(const ModelSurface& q, const GaussRat& N, const Rat& t);

// Graded fields of aut Q as (f, g, h, e) along (z1, z2, zeta, w).
FieldJet q_field_m3(const ModelSurface& q, const Rat& d);
FieldJet q_field_m2(const ModelSurface& q, const GaussRat& a);
FieldJet q_field_m1(const ModelSurface& q, const GaussRat& b, const GaussRat& c, const Rat& k);
FieldJet q_field_0(const ModelSurface& q, const GaussRat& M, const GaussRat& m, const Rat& l);
FieldJet q_field_1(const ModelSurface& q, const GaussRat& N, const Rat& n);

// Formal flows: components are polynomials in the coordinates and a real time variable t,
// truncated at t^order.
struct FormalFlow {
    TablePtr table;  // coordinates, u and t
    int order;
    std::map<std::string, Poly> comps;
};

TablePtr flow_table(const ModelSurface& s);
// Taylor polynomial of exp(c t) through t^order.
Poly exp_series(const TablePtr& table, const GaussRat& c, int order);
// The closed-form flow of the weight-0 field with M = 2l - mu/3 (mu real), expanded in t.
FormalFlow g0_flow_series(const ModelSurface& q, const Rat& l, const Rat& mu, const GaussRat& m, int order);

// Lie series sum_k t^k/k! X^k(x) of a polynomial field, through t^order.
FormalFlow lie_series_flow(const ModelSurface& s, const FieldJet& field, int order);
// Im(W) - F(Z, Zbar) along a formal flow at w = u + iF, truncated at t^order. Zero when the
// flow preserves the surface through that order.
Poly formal_flow_defect(const ModelSurface& s, const FormalFlow& flow);

// Checks that the field lies in aut of the exact surface (throws otherwise), that the flow is the
// identity at t = 0, and that d/dt flow = field(flow) through t^(order-1).
bool exponentiate_check(const ModelSurface& s, const FieldJet& field, const FormalFlow& flow);

}  // namespace cr

#pragma once

#include "cr/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace cr {

class WeightSystem {
public:
    WeightSystem(TablePtr table, const std::map<std::string, int>& weights);

    // Built-in gradings:
    //   W1: every holomorphic coordinate except w has weight 1, [w]=[u]=2
    //   W2: [z1]=[z2]=2, [zeta]=1, [w]=[u]=4
    //   W3: [z1]=2, [z2]=[zeta]=1, [w]=[u]=3
    static WeightSystem preset(const std::string& name, TablePtr table);

    const TablePtr& table() const { return table_; }
    const std::string& label() const { return label_; }
    int weight(int var) const { return weights_.at(var); }
    int weight(const std::string& var) const { return weights_.at(table_->index(var)); }
    const std::vector<int>& weights() const { return weights_; }
    TruncationSpec truncation(std::optional<int> max_weight) const { return {weights_, max_weight}; }
    std::map<std::string, int> as_map() const;

private:
    TablePtr table_;
    std::vector<int> weights_;
    std::string label_;
};

int weight_of(const Monomial& m, const WeightSystem& ws);
Poly graded_component(const Poly& p, const WeightSystem& ws, int mu);
std::map<int, Poly> graded_components(const Poly& p, const WeightSystem& ws);
// Lowest and highest weights occurring in p; p must be nonzero.
std::pair<int, int> weight_range(const Poly& p, const WeightSystem& ws);
bool is_weighted_homogeneous(const Poly& p, const WeightSystem& ws, int mu);

// All monomials in vars of weight exactly mu, in descending lexicographic exponent order
// (first listed variable varies slowest, highest power first).
std::vector<Monomial> monomial_basis(const std::vector<std::string>& vars, const WeightSystem& ws, int mu);

struct JetComponent {
    std::string name;               // f, g, h, e, f1, ...
    std::string target;             // coordinate it perturbs, e.g. "z" or "w"
    std::vector<std::string> vars;  // holomorphic variables it may depend on
    int offset = 0;                 // component weight = jet weight + offset
    int min_weight = 0;             // components of lower weight are excluded
};

// Component layout of a jet. The component targeting `wvar` sets the equation weight:
// a jet of weight mu produces equations of weight mu + w-offset and above.
struct JetShape {
    std::string name;
    std::vector<JetComponent> components;
    std::string wvar = "w";

    const JetComponent& component(const std::string& name) const;
    int equation_offset() const;
};

struct JetBasisElement {
    int mu;
    int comp;  // index into shape.components
    Monomial mono;
    auto operator<=>(const JetBasisElement&) const = default;
};

std::vector<JetBasisElement> jet_basis(const JetShape& shape, const WeightSystem& ws, int mu);

}  // namespace cr

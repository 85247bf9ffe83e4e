#include "cr/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cr {

std::string monomial_label(const Monomial& m, const VarTable& t) {
    std::string s;
    for (int i = 0; i < t.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += t.name(i) + '^' + std::to_string(int(m.e[i]));
    }
    return s.empty() ? "1" : s;
}

namespace {

void check_window(const Window& w) {
    if (w.hi < w.lo) throw std::invalid_argument("empty window");
    if (w.depth < 1) throw std::invalid_argument("depth must be at least 1");
}

}  // namespace

LinearOperatorMatrix assemble(const LinearizedOperator& op, const Window& w) {
    check_window(w);
    op.check_depth(w.depth);
    LinearOperatorMatrix out{op.surface().name, op.shape(), op.ws().label(), w, op.surface().table(), {}, {}, {}};
    const VarTable& t = *out.table;
    const int eoff = op.equation_offset();
    std::vector<Poly> images;
    for (int mu = w.lo; mu <= w.hi; ++mu) {
        for (const auto& el : jet_basis(op.shape(), op.ws(), mu)) {
            int lo = mu + eoff;
            int hi = std::min(lo + w.depth - 1, w.hi + eoff);
            for (int part = 0; part < 2; ++part) {
                out.cols.push_back({el, part});
                images.push_back(op.column(el.comp, el.mono, part == 0 ? GaussRat(1) : GaussRat::i(), lo, hi));
            }
        }
    }
    std::map<RowLabel, int> index;
    for (const auto& img : images)
        for (const auto& [m, v] : img.terms()) {
            Monomial cm = mono_conj(m, t);
            if (cm < m) continue;
            index.emplace(RowLabel{m, 0}, 0);
            if (cm != m) index.emplace(RowLabel{m, 1}, 0);
        }
    int k = 0;
    for (auto& [label, i] : index) {
        i = k++;
        out.rows.push_back(label);
    }
    out.M = SparseMatrix(static_cast<int>(out.rows.size()), static_cast<int>(out.cols.size()));
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, v] : images[j].terms()) {
            Monomial cm = mono_conj(m, t);
            if (cm < m) continue;
            if (cm == m && !v.is_real()) throw std::logic_error("operator image is not real");
            out.M.push(index.at({m, 0}), static_cast<int>(j), v.re());
            if (cm != m) out.M.push(index.at({m, 1}), static_cast<int>(j), v.im());
        }
    return out;
}

std::string export_matrix(const LinearOperatorMatrix& m) {
    std::ostringstream os;
    const VarTable& t = *m.table;
    os << "# surface " << m.surface << "\n";
    os << "# shape " << m.shape.name << " grading " << m.grading << "\n";
    os << "# window " << m.window.lo << ' ' << m.window.hi << " depth " << m.window.depth << " reported "
       << m.window.reported_top() << "\n";
    os << "# size " << m.M.rows << ' ' << m.M.cols << ' ' << m.M.nnz() << "\n";
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        const auto& c = m.cols[j];
        os << "# col " << j << ' ' << c.el.mu << ' ' << m.shape.components[c.el.comp].name << ' '
           << monomial_label(c.el.mono, t) << ' ' << (c.part ? "im" : "re") << "\n";
    }
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        os << "# row " << i << ' ' << monomial_label(m.rows[i].mono, t) << ' ' << (m.rows[i].part ? "im" : "re") << "\n";
    for (int i = 0; i < m.M.rows; ++i)
        for (const auto& [j, v] : m.M.row[i]) os << i << ' ' << j << ' ' << rat_str(v) << "\n";
    return os.str();
}

FieldJet jet_from_vector(const LinearOperatorMatrix& m, const std::vector<Rat>& x) {
    if (x.size() != m.cols.size()) throw std::invalid_argument("vector length mismatch");
    FieldJet phi(m.shape, m.table);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (sgn(x[j]) == 0) continue;
        const auto& c = m.cols[j];
        GaussRat coef = c.part == 0 ? GaussRat(x[j]) : GaussRat(0, x[j]);
        phi.comps.at(m.shape.components[c.el.comp].name).add_term(c.el.mono, coef);
    }
    return phi;
}

std::vector<Rat> vector_from_jet(const LinearOperatorMatrix& m, const FieldJet& phi) {
    std::map<std::pair<int, Monomial>, std::size_t> where;
    for (std::size_t j = 0; j < m.cols.size(); ++j)
        if (m.cols[j].part == 0) where.emplace(std::make_pair(m.cols[j].el.comp, m.cols[j].el.mono), j);
    std::vector<Rat> x(m.cols.size());
    for (std::size_t k = 0; k < m.shape.components.size(); ++k)
        for (const auto& [mono, c] : phi.at(m.shape.components[k].name).terms()) {
            auto it = where.find({static_cast<int>(k), mono});
            if (it == where.end()) throw std::invalid_argument("jet term outside the window");
            x[it->second] = c.re();
            x[it->second + 1] = c.im();
        }
    return x;
}

KernelBasis kernel_basis(const LinearOperatorMatrix& m) {
    KernelBasis kb;
    kb.vectors = echelon(m.M).kernel();
    for (const auto& v : kb.vectors) kb.jets.push_back(jet_from_vector(m, v));
    return kb;
}

BoundResult window_kernel(const LinearOperatorMatrix& m) {
    BoundResult r;
    r.cols = m.M.cols;
    r.rank = rank(m.M);
    r.kernel_dim = r.cols - r.rank;
    int top = m.window.reported_top();
    std::vector<bool> high(m.cols.size());
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        high[j] = m.cols[j].el.mu > top;
        if (!high[j]) ++r.low_cols;
    }
    r.rank_high = r.low_cols == r.cols ? 0 : rank(m.M, &high);
    r.window_kernel_dim = r.low_cols - r.rank + r.rank_high;
    return r;
}

BoundResult param_bound(const LinearizedOperator& op, const Window& w) { return window_kernel(assemble(op, w)); }

int GradedProfile::total() const {
    int t = 0;
    for (const auto& [mu, d] : dims) t += d;
    return t;
}

namespace {

void require_strict(const LinearizedOperator& op) {
    const ModelSurface& s = op.surface();
    int ww = op.ws().weight(op.shape().wvar);
    if (!s.exact || !is_weighted_homogeneous(s.F, op.ws(), ww))
        throw std::invalid_argument("graded profile needs an exact surface homogeneous of the weight of " +
                                    op.shape().wvar);
}

}  // namespace

GradedProfile graded_profile(const LinearizedOperator& op, int lo, int hi) {
    require_strict(op);
    if (hi < lo) throw std::invalid_argument("empty weight range");
    GradedProfile p{{}, lo, hi, false};
    for (int mu = lo; mu <= hi; ++mu) {
        LinearOperatorMatrix m = assemble(op, {mu, mu, 1, std::nullopt});
        p.dims[mu] = m.M.cols - rank(m.M);
    }
    p.stabilized = hi - lo >= 1 && p.dims[hi] == 0 && p.dims[hi - 1] == 0;
    return p;
}

std::map<int, std::vector<FieldJet>> graded_kernel_bases(const LinearizedOperator& op, int lo, int hi) {
    require_strict(op);
    std::map<int, std::vector<FieldJet>> out;
    for (int mu = lo; mu <= hi; ++mu) out[mu] = kernel_basis(assemble(op, {mu, mu, 1, std::nullopt})).jets;
    return out;
}

Poly window_residual(const LinearizedOperator& op, const FieldJet& phi, const Window& w) {
    check_window(w);
    FieldJet inside(phi.shape, phi.table());
    for (const auto& [mu, part] : phi.by_jet_weight(op.ws())) {
        if (mu < w.lo || mu > w.hi) continue;
        for (auto& [name, p] : inside.comps) p += part.at(name);
    }
    int eoff = op.equation_offset();
    Poly img = op.apply(inside, w.depth, w.hi + eoff);
    Poly out(img.table());
    for (const auto& [m, c] : img.terms()) {
        int wt = weight_of(m, op.ws());
        if (wt >= w.lo + eoff && wt <= w.hi + eoff) out.add_term(m, c);
    }
    return out;
}

bool verify_solution(const LinearizedOperator& op, const FieldJet& phi, const Window& w) {
    return window_residual(op, phi, w).is_zero();
}

}  // namespace cr

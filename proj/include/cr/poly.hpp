#pragma once

#include "cr/gauss_rat.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cr {

constexpr int kMaxVars = 16;

enum class VarKind { holo, anti, real };

// Variables are laid out as [holo..., anti..., real...]; anti[k] is the conjugate of holo[k].
class VarTable {
public:
    static std::shared_ptr<const VarTable> make(std::vector<std::string> holo, std::vector<std::string> real,
                                                std::vector<std::string> anti = {});

    int size() const { return static_cast<int>(names_.size()); }
    int holo_count() const { return nholo_; }
    const std::string& name(int i) const { return names_.at(i); }
    VarKind kind(int i) const;
    int conj_index(int i) const { return conj_.at(i); }
    int index(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;
    std::vector<std::string> holo() const;
    std::vector<std::string> anti() const;
    std::vector<std::string> real() const;

    bool operator==(const VarTable& o) const { return names_ == o.names_ && nholo_ == o.nholo_; }

private:
    std::vector<std::string> names_;
    std::vector<int> conj_;
    int nholo_ = 0;
};

using TablePtr = std::shared_ptr<const VarTable>;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int operator[](int i) const { return e[i]; }
    int degree() const;
    bool is_one() const { return degree() == 0; }
    auto operator<=>(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_conj(const Monomial& m, const VarTable& t);

// Weight-based truncation: monomials of weight above max_weight are dropped.
// Weights may be zero here (e.g. for a formal flow parameter).
struct TruncationSpec {
    std::vector<int> weights;
    std::optional<int> max_weight;

    static TruncationSpec none() { return {}; }
    int weight(const Monomial& m) const;
    bool keeps(const Monomial& m) const { return !max_weight || weight(m) <= *max_weight; }
};

class Poly {
public:
    using Terms = std::map<Monomial, GaussRat>;

    explicit Poly(TablePtr table);
    static Poly constant(TablePtr table, const GaussRat& c);
    static Poly var(TablePtr table, const std::string& name);
    static Poly term(TablePtr table, const Monomial& m, const GaussRat& c);

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    GaussRat coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const GaussRat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussRat& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical text: "(re,im)*x^k*y^l + ..." in monomial order, "0" for the zero polynomial.
    std::string str() const;

private:
    TablePtr table_;
    Terms terms_;
};

void check_same_table(const Poly& a, const Poly& b);

Poly mul(const Poly& a, const Poly& b, const TruncationSpec& trunc = TruncationSpec::none());
Poly power(const Poly& p, int k, const TruncationSpec& trunc = TruncationSpec::none());
Poly conj(const Poly& p);
Poly re2(const Poly& p);  // p + conj(p)
Poly im_part(const Poly& p);  // (p - conj(p)) / 2i
Poly diff(const Poly& p, const std::string& var);
Poly diff(const Poly& p, int var);
Poly substitute(const Poly& p, const std::string& var, const Poly& q,
                const TruncationSpec& trunc = TruncationSpec::none());
Poly truncate(const Poly& p, const TruncationSpec& trunc);
// Simultaneous substitution of the listed variables (all others kept).
Poly substitute_all(const Poly& p, const std::map<int, Poly>& images,
                    const TruncationSpec& trunc = TruncationSpec::none());
// The same polynomial over another table, matching variables by name.
Poly retable(const Poly& p, const TablePtr& table);
// Power-series inverse of a polynomial with nonzero constant term, through the truncation
// weight; every non-constant term must have positive weight.
Poly series_inverse(const Poly& den, const TruncationSpec& trunc);
// Terms whose monomial contains var with exponent exactly k, with var removed.
Poly coefficient_of(const Poly& p, int var, int k);
int max_degree(const Poly& p, int var);
bool contains_var(const Poly& p, int var);
bool is_conj_fixed(const Poly& p);

// Convenience constructor: c * prod var^exp.
Poly make_term(const TablePtr& table, const GaussRat& c, const std::vector<std::pair<std::string, int>>& exps);

using Point = std::map<std::string, GaussRat>;
// Exact evaluation. With real_locus, assigned conjugate pairs must carry conjugate values
// and real variables must be real.
GaussRat eval(const Poly& p, const Point& point, bool real_locus = false);

}  // namespace cr

#pragma once

#include "shufalg/ring.hpp"

#include <json.hpp>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shufalg {

enum class Family : unsigned char { X = 0, W = 1, Z = 2, U = 3 };

struct VarId {
    Family family = Family::X;
    int color = 1;
    int slot = 1;

    friend auto operator<=>(const VarId&, const VarId&) = default;
    friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId xvar(int i, int r) { return {Family::X, i, r}; }
inline VarId wvar(int b, int s) { return {Family::W, b, s}; }
inline VarId zvar(int b, int r) { return {Family::Z, b, r}; }
// spectral parameter of the R-matrix layer
inline VarId uvar() { return {Family::U, 0, 1}; }

// renders / resolves the color field ("1" for x, "[1,2,2]" for roots)
using ColorNamer = std::function<std::string(const VarId&)>;
using ColorResolver = std::function<int(Family, const std::string&)>;

std::string default_var_key(const VarId& v);
std::string var_key(const VarId& v, const ColorNamer& namer);
VarId parse_var_key(const std::string& key, const ColorResolver& resolver = {});

// multiplicative substitution x -> coeff * target (target empty: the constant 1)
struct Subst {
    VRatFunc coeff = 1;
    std::optional<VarId> target;
};

// additive substitution x -> target + shift (target empty: the constant shift)
struct AffineSubst {
    std::optional<VarId> target;
    VRatFunc shift;
};

class MultiLaurent {
public:
    using Exps = std::vector<int>;
    struct GrlexLess {
        bool operator()(const Exps& a, const Exps& b) const;
    };
    using TermMap = std::map<Exps, VRatFunc, GrlexLess>;

    MultiLaurent() = default;
    MultiLaurent(const VRatFunc& c);
    MultiLaurent(long c) : MultiLaurent(VRatFunc(c)) {}

    static MultiLaurent variable(const VarId& x, int e = 1);
    static MultiLaurent monomial(const VRatFunc& c, const std::vector<std::pair<VarId, int>>& m);
    // x - c*y
    static MultiLaurent binomial(const VarId& x, const VRatFunc& c, const VarId& y);
    static MultiLaurent from_terms(std::vector<VarId> vars, TermMap terms);

    const std::vector<VarId>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool is_constant() const { return vars_.empty(); }
    VRatFunc constant_term() const;
    // coefficient of the monomial given as (var, exp) pairs
    VRatFunc coeff(const std::vector<std::pair<VarId, int>>& m) const;
    int min_exp(const VarId& x) const;
    int max_exp(const VarId& x) const;
    bool is_polynomial() const;
    bool has_integral_coefficients() const;

    // same polynomial over a superset of variables (exponent columns padded with 0)
    MultiLaurent with_vars(const std::vector<VarId>& vars) const;

    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    MultiLaurent& operator*=(const MultiLaurent& o);
    MultiLaurent& operator*=(const VRatFunc& c);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator*(MultiLaurent a, const VRatFunc& c) { return a *= c; }
    friend MultiLaurent operator*(const VRatFunc& c, MultiLaurent a) { return a *= c; }
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    MultiLaurent pow(unsigned k) const;

    // multiply by the monomial prod x^e
    MultiLaurent shifted(const std::vector<std::pair<VarId, int>>& m) const;
    // apply f to every coefficient (zeros dropped)
    MultiLaurent map_coefficients(const std::function<VRatFunc(const VRatFunc&)>& f) const;
    // every coefficient divided exactly by c in Q[v,v^-1]; nullopt if some quotient is not Laurent
    std::optional<MultiLaurent> divide_coefficients(const ULaurent& c) const;

    std::string str(std::string_view coef_var = "v", const ColorNamer& namer = {}) const;
    nlohmann::json to_json(std::string_view coef_var = "v", const ColorNamer& namer = {}) const;
    static MultiLaurent from_json(const nlohmann::json& j, std::string_view coef_var = "v",
                                  const ColorResolver& resolver = {});

private:
    void compact();
    friend class MultiLaurentBuilder;

    std::vector<VarId> vars_;
    TermMap terms_;
};

std::vector<VarId> merge_vars(const std::vector<VarId>& a, const std::vector<VarId>& b);

// least power of the coefficient variable across all coefficients (INT_MAX for 0)
int coefficient_valuation(const MultiLaurent& p);

MultiLaurent add(const MultiLaurent& p, const MultiLaurent& q);
MultiLaurent mul(const MultiLaurent& p, const MultiLaurent& q);
MultiLaurent scale(const MultiLaurent& p, const VRatFunc& c);

// simultaneous substitution; sigma must cover vars(p)
MultiLaurent substitute(const MultiLaurent& p, const std::map<VarId, Subst>& sigma);
// additive variant; affected variables must appear with nonnegative exponents
MultiLaurent substitute_affine(const MultiLaurent& p, const std::map<VarId, AffineSubst>& sigma);
// bijective renaming of a subset of variables
MultiLaurent rename(const MultiLaurent& p, const std::map<VarId, VarId>& sigma);

// sum over the product of the symmetric groups on each group
MultiLaurent symmetrize(const MultiLaurent& p, const std::vector<std::vector<VarId>>& groups);

// r with p = q*r: both operands are shifted by one common monomial into polynomial range and
// divided there; nullopt when that division leaves a remainder
std::optional<MultiLaurent> exact_divide(const MultiLaurent& p, const MultiLaurent& q);
// divisibility in the Laurent ring (monomials are units)
std::optional<MultiLaurent> laurent_divide(const MultiLaurent& p, const MultiLaurent& q);

VRatFunc evaluate(const MultiLaurent& p, const std::map<VarId, Rational>& point);
// evaluate at a rational value of the coefficient variable too
Rational evaluate(const MultiLaurent& p, const std::map<VarId, Rational>& point, const Rational& vval);

// accumulates terms over a fixed variable layout
class MultiLaurentBuilder {
public:
    explicit MultiLaurentBuilder(std::vector<VarId> vars);
    const std::vector<VarId>& vars() const { return vars_; }
    void add(const MultiLaurent::Exps& e, const VRatFunc& c);
    void add(const MultiLaurent& p);  // p's vars must be a subset
    MultiLaurent finish();

private:
    std::vector<VarId> vars_;
    MultiLaurent::TermMap acc_;
};

}  // namespace shufalg

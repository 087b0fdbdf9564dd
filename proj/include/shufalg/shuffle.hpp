#pragma once

#include "shufalg/mpoly.hpp"
#include "shufalg/rootsys.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shufalg {

enum class Flavor { Trig, Rational };

class ShuffleContext {
public:
    ShuffleContext() : ShuffleContext(RootSystem::A(1), Flavor::Trig) {}
    ShuffleContext(RootSystem rs, Flavor flavor)
        : rs_(std::make_shared<const RootSystem>(std::move(rs))), flavor_(flavor) {}

    const RootSystem& rs() const { return *rs_; }
    Flavor flavor() const { return flavor_; }
    bool rational() const { return flavor_ == Flavor::Rational; }
    // name of the coefficient variable: v or hbar
    std::string_view coef_var() const { return rational() ? "hbar" : "v"; }
    int rank() const { return rs_->rank(); }

    // numerator of zeta_{ij}(x/y) times (x - y): x - v^{-(a_i,a_j)} y, or x - y + (a_i,a_j) hbar/2
    MultiLaurent zeta_numerator(int i, int j, const VarId& x, const VarId& y) const;
    // x_{i,s_m} and x_{j,r} along a wheel, as coefficient/shift relative to the base point
    VRatFunc wheel_offset_same(int i, int m) const;
    VRatFunc wheel_offset_other(int i, int j) const;

    friend bool operator==(const ShuffleContext& a, const ShuffleContext& b) {
        return a.flavor_ == b.flavor_ && a.rs() == b.rs();
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    Flavor flavor_;
};

std::vector<VarId> x_variables(const Grading& k);
// prod over i<j adjacent of prod_{r,s} (x_{i,r} - x_{j,s})
MultiLaurent canonical_denominator(const ShuffleContext& ctx, const Grading& k);

class ShuffleElement {
public:
    ShuffleElement() = default;
    ShuffleElement(ShuffleContext ctx, Grading k, MultiLaurent f);

    static ShuffleElement unit(const ShuffleContext& ctx);
    static ShuffleElement zero(const ShuffleContext& ctx, const Grading& k);
    static ShuffleElement generator(const ShuffleContext& ctx, int i, int r);

    const ShuffleContext& ctx() const { return ctx_; }
    const Grading& grading() const { return k_; }
    const MultiLaurent& numerator() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }
    int degree() const;  // total number of variables

    ShuffleElement operator-() const;
    ShuffleElement& operator+=(const ShuffleElement& o);
    ShuffleElement& operator-=(const ShuffleElement& o);
    ShuffleElement& operator*=(const VRatFunc& c);
    friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
    friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
    friend ShuffleElement operator*(ShuffleElement a, const VRatFunc& c) { return a *= c; }
    friend ShuffleElement operator*(const VRatFunc& c, ShuffleElement a) { return a *= c; }
    friend bool operator==(const ShuffleElement& a, const ShuffleElement& b);

    bool wheel_checked() const { return wheel_checked_; }
    void set_wheel_checked(bool b) { wheel_checked_ = b; }

    std::string str() const;  // "f / (denominator)"
    nlohmann::json to_json() const;
    static ShuffleElement from_json(const nlohmann::json& j);

private:
    ShuffleContext ctx_;
    Grading k_;
    MultiLaurent f_;
    bool wheel_checked_ = false;
};

struct ProductOptions {
    bool full_symmetrization = false;  // differential-testing path
    unsigned threads = 0;             // 0: thread_budget()
};

ShuffleElement shuffle_product(const ShuffleElement& a, const ShuffleElement& b,
                               const ProductOptions& opt = {});
ShuffleElement shuffle_power(const ShuffleElement& a, int k);

// hom applied to the numerator of a * b, where hom is a ring homomorphism on numerators that keeps the
// Vandermonde factor nonzero; each shuffle term is mapped factor by factor before summing
using NumeratorMap = std::function<MultiLaurent(const MultiLaurent&)>;
MultiLaurent mapped_product_numerator(const ShuffleElement& a, const ShuffleElement& b, const NumeratorMap& hom,
                                      unsigned threads = 0);

// free algebra on letters e_{i,r} (x_{i,r} in the rational flavor)
struct Letter {
    int i = 1;
    int r = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
using FreeWord = std::vector<Letter>;

class FreeElement {
public:
    using TermMap = std::map<FreeWord, VRatFunc>;

    FreeElement() = default;
    explicit FreeElement(ShuffleContext ctx) : ctx_(std::move(ctx)) {}
    FreeElement(ShuffleContext ctx, TermMap terms);

    static FreeElement one(const ShuffleContext& ctx);
    static FreeElement letter(const ShuffleContext& ctx, int i, int r);
    static FreeElement scalar(const ShuffleContext& ctx, const VRatFunc& c);

    const ShuffleContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // common grading of all words; nullopt when inhomogeneous or zero
    std::optional<Grading> grading() const;

    FreeElement operator-() const;
    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    FreeElement& operator*=(const VRatFunc& c);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(FreeElement a, const VRatFunc& c) { return a *= c; }
    friend FreeElement operator*(const VRatFunc& c, FreeElement a) { return a *= c; }
    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.terms_ == b.terms_;
    }
    FreeElement pow(int k) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static FreeElement from_json(const nlohmann::json& j);

private:
    ShuffleContext ctx_;
    TermMap terms_;
};

// [a, b]_u = ab - u ba
FreeElement vcomm(const FreeElement& a, const FreeElement& b, const VRatFunc& u = 1);

ShuffleElement psi(const FreeElement& w, const Grading* k_if_zero = nullptr);

struct WheelOptions {
    bool exhaustive = false;  // every ordered choice of variables instead of one per orbit
};
bool check_wheel(const ShuffleElement& F, const WheelOptions& opt = {});

struct UnitFactor {
    Rational c;
    int z = 0;
};
// F = c v^z G (z = 0 in the rational flavor)
std::optional<UnitFactor> proportional_up_to_unit(const ShuffleElement& F, const ShuffleElement& G);
std::optional<UnitFactor> proportional_up_to_unit(const MultiLaurent& f, const MultiLaurent& g,
                                                  bool allow_power);

size_t rank_over_field(const std::vector<ShuffleElement>& elems);
size_t rank_over_field(const std::vector<MultiLaurent>& polys);

}  // namespace shufalg

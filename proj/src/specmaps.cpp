#include "shufalg/specmaps.hpp"

#include "shufalg/parallel.hpp"

#include <numeric>
#include <stdexcept>

namespace shufalg {

namespace {

const Word kLong = {1, 2, 1, 2, 2};

VRatFunc hbar_times(const Rational& c) { return VRatFunc(ULaurent::monomial(c, 1)); }

// specialized image of x^{(beta,s)}_{i,t}
MultiLaurent group_value(const ShuffleContext& ctx, int beta, int s, int i, int t) {
    int e = spec_exponent(ctx.rs(), beta, i, t);
    MultiLaurent w = MultiLaurent::variable(w_variable(beta, s));
    if (ctx.rational())
        return w + MultiLaurent(hbar_times(Rational(e, 2)));
    return w * VRatFunc::v(e);
}

// prod over s in [1,d1], r in [1,d2] (or s != r when same) of (w_{b1,s} - v^e w_{b2,r})^m
MultiLaurent linear_factors(int b1, int b2, int d1, int d2, const std::vector<std::pair<int, int>>& em) {
    MultiLaurent r(1);
    for (int s = 1; s <= d1; ++s)
        for (int q = 1; q <= d2; ++q) {
            if (b1 == b2 && s == q)
                continue;
            for (auto [e, m] : em)
                r *= MultiLaurent::binomial(w_variable(b1, s), VRatFunc::v(e), w_variable(b2, q)).pow(m);
        }
    return r;
}

MultiLaurent w_power(int beta, int d, int e) {
    MultiLaurent r(1);
    for (int s = 1; s <= d; ++s)
        r *= MultiLaurent::variable(w_variable(beta, s), e);
    return r;
}

using Factors = std::vector<std::pair<int, int>>;

struct G2Pair {
    Word a, b;
    Factors f;
};

const std::vector<G2Pair>& g2_pairs() {
    static const std::vector<G2Pair> t = {
        {{1}, {1, 2}, {{-6, 1}}},
        {{1}, kLong, {{-6, 1}, {-4, 1}, {4, 1}}},
        {{1}, {1, 2, 2}, {{-6, 1}, {2, 1}}},
        {{1}, {1, 2, 2, 2}, {{-6, 1}, {2, 1}, {4, 1}}},
        {{1}, {2}, {{0, 1}}},
        {{1, 2}, kLong, {{8, 1}, {-6, 1}, {6, 1}, {-4, 1}, {-2, 1}}},
        {{1, 2}, {1, 2, 2}, {{-6, 1}, {6, 1}, {-2, 1}}},
        {{1, 2}, {1, 2, 2, 2}, {{-6, 1}, {6, 1}, {-2, 1}, {2, 1}}},
        {{1, 2}, {2}, {{-2, 1}}},
        {kLong, {1, 2, 2}, {{-8, 1}, {-6, 2}, {6, 1}, {-4, 1}, {4, 1}, {2, 1}}},
        {kLong, {1, 2, 2, 2}, {{-8, 1}, {-6, 2}, {6, 1}, {-4, 1}, {4, 1}, {2, 2}, {-2, 1}}},
        {kLong, {2}, {{-6, 1}, {-2, 1}}},
        {{1, 2, 2}, {1, 2, 2, 2}, {{-6, 1}, {6, 1}, {-4, 1}, {4, 1}, {-2, 1}}},
        {{1, 2, 2}, {2}, {{-4, 1}}},
        {{1, 2, 2, 2}, {2}, {{-6, 1}}},
    };
    return t;
}

int kp_height(const RootSystem& rs, const KostantPartition& d) {
    Grading k = grading_of(rs, d);
    return std::accumulate(k.begin(), k.end(), 0);
}

MultiLaurent hbar_dilate(const MultiLaurent& p, int c) {
    return p.map_coefficients([c](const VRatFunc& x) {
        std::vector<ULaurent::Term> t;
        for (auto [e, q] : x.num().terms()) {
            Rational f = q;
            for (int k = 0; k < std::abs(e); ++k)
                f = e > 0 ? Rational(f * c) : Rational(f / c);
            t.emplace_back(e, f);
        }
        return VRatFunc(ULaurent::from_terms(t));
    });
}

void partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::string with_kp(const RootSystem& rs, const KostantPartition& d, const std::string& what) {
    return what + " at d = " + kp_str(rs, d);
}

// runs check on every Kostant partition of F's grading, reporting the first failure in order
Verdict over_partitions(const ShuffleElement& F,
                        const std::function<std::string(const KostantPartition&)>& check) {
    const RootSystem& rs = F.ctx().rs();
    auto kps = kostant_partitions(rs, F.grading());
    std::vector<std::string> fail(kps.size());
    parallel_for(kps.size(), [&](size_t i) { fail[i] = check(kps[i]); });
    for (size_t i = 0; i < kps.size(); ++i)
        if (!fail[i].empty())
            return {false, with_kp(rs, kps[i], fail[i])};
    return {};
}

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

}  // namespace

std::vector<VarId> w_variables(const KostantPartition& d) {
    std::vector<VarId> r;
    for (int b = 0; b < int(d.d.size()); ++b)
        for (int s = 1; s <= d.d[b]; ++s)
            r.push_back(w_variable(b, s));
    return r;
}

ColorNamer root_namer(const RootSystem& rs) {
    return [rs](const VarId& v) {
        if (v.family == Family::W || v.family == Family::Z)
            return rs.root_name(v.color - 1);
        return std::to_string(v.color);
    };
}

ColorResolver root_resolver(const RootSystem& rs) {
    return [rs](Family f, const std::string& c) {
        if (f == Family::W || f == Family::Z)
            return rs.parse_root(c) + 1;
        return std::stoi(c);
    };
}

nlohmann::json SpecResult::to_json(const ShuffleContext& ctx) const {
    return {{"type", ctx.rs().name()},
            {"flavor", ctx.rational() ? "rational" : "trig"},
            {"partition", nlohmann::ordered_json::parse(kp_str(ctx.rs(), d))},
            {"poly", poly.to_json(ctx.coef_var(), root_namer(ctx.rs()))}};
}

SpecResult SpecResult::from_json(const ShuffleContext& ctx, const nlohmann::json& j) {
    return {parse_kp(ctx.rs(), j.at("partition").dump()),
            MultiLaurent::from_json(j.at("poly"), ctx.coef_var(), root_resolver(ctx.rs()))};
}

VariableSplit canonical_split(const RootSystem& rs, const KostantPartition& d) {
    VariableSplit split;
    std::vector<int> next(rs.rank(), 1);
    for (int b = 0; b < rs.num_roots(); ++b)
        for (int s = 1; s <= d.d[b]; ++s)
            for (int i = 1; i <= rs.rank(); ++i)
                for (int t = 1; t <= rs.root(b).nu[i - 1]; ++t)
                    split[xvar(i, next[i - 1]++)] = {b, s, t};
    return split;
}

VariableSplit permuted_split(const RootSystem& rs, const KostantPartition& d,
                             const std::vector<std::vector<int>>& perms) {
    Grading k = grading_of(rs, d);
    require(int(perms.size()) == rs.rank(), "one permutation per color is needed");
    VariableSplit base = canonical_split(rs, d), out;
    for (auto& [x, slot] : base) {
        const auto& p = perms[x.color - 1];
        require(int(p.size()) == k[x.color - 1], "permutation has the wrong size");
        out[xvar(x.color, p[x.slot - 1])] = slot;
    }
    require(out.size() == base.size(), "not a permutation");
    return out;
}

int spec_exponent(const RootSystem& rs, int, int i, int t) {
    switch (rs.kind()) {
    case RootType::A:
        return -i;
    case RootType::G:
        return i == 1 ? 2 * t : -3 + 2 * t;
    case RootType::B:
        return t == 1 ? -2 * i : -4 * rs.rank() + 2 * i + 2;
    }
    return 0;
}

MultiLaurent phi(const ShuffleContext& ctx, const MultiLaurent& f, const VariableSplit& split) {
    const RootSystem& rs = ctx.rs();
    if (ctx.rational()) {
        std::map<VarId, AffineSubst> sigma;
        for (auto& [x, g] : split)
            sigma[x] = {w_variable(g.beta, g.s), hbar_times(Rational(spec_exponent(rs, g.beta, x.color, g.t), 2))};
        return substitute_affine(f, sigma);
    }
    std::map<VarId, Subst> sigma;
    for (auto& [x, g] : split)
        sigma[x] = {VRatFunc::v(spec_exponent(rs, g.beta, x.color, g.t)), w_variable(g.beta, g.s)};
    return substitute(f, sigma);
}

SpecResult phi(const KostantPartition& d, const ShuffleElement& F, const VariableSplit& split) {
    const RootSystem& rs = F.ctx().rs();
    if (grading_of(rs, d) != F.grading())
        return {d, MultiLaurent()};
    return {d, phi(F.ctx(), F.numerator(), split)};
}

SpecResult phi(const KostantPartition& d, const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    if (grading_of(rs, d) != F.grading())
        return {d, MultiLaurent()};
    return phi(d, F, canonical_split(rs, d));
}

SpecResult phi_of_product(const KostantPartition& d, const std::vector<ShuffleElement>& factors) {
    if (factors.empty())
        throw std::invalid_argument("empty product");
    const ShuffleContext& ctx = factors[0].ctx();
    if (factors.size() == 1)
        return phi(d, factors[0]);
    ShuffleElement head = factors[0];
    for (size_t i = 1; i + 1 < factors.size(); ++i)
        head = shuffle_product(head, factors[i]);
    const ShuffleElement& last = factors.back();
    Grading k = head.grading();
    for (size_t i = 0; i < k.size(); ++i)
        k[i] += last.grading()[i];
    if (grading_of(ctx.rs(), d) != k)
        return {d, MultiLaurent()};
    VariableSplit split = canonical_split(ctx.rs(), d);
    return {d, mapped_product_numerator(head, last, [&](const MultiLaurent& f) { return phi(ctx, f, split); })};
}

MultiLaurent g_beta_pair_generic(const ShuffleContext& ctx, int beta, int beta2, int d1, int d2) {
    const RootSystem& rs = ctx.rs();
    const auto& nu1 = rs.root(beta).nu;
    const auto& nu2 = rs.root(beta2).nu;
    MultiLaurent num(1), den(1);
    for (int s = 1; s <= d1; ++s)
        for (int r = 1; r <= d2; ++r)
            for (int i = 1; i <= rs.rank(); ++i)
                for (int j = 1; j <= rs.rank(); ++j) {
                    int p = rs.pairing(i, j);
                    if (p == 0)
                        continue;
                    for (int l = 1; l <= nu1[i - 1]; ++l)
                        for (int t = 1; t <= nu2[j - 1]; ++t) {
                            MultiLaurent x = group_value(ctx, beta, s, i, l);
                            MultiLaurent y = group_value(ctx, beta2, r, j, t);
                            if (ctx.rational())
                                num *= x - y + MultiLaurent(hbar_times(Rational(p, 2)));
                            else
                                num *= x - y * VRatFunc::v(-p);
                            // cross-color poles belong to the canonical denominator
                            if (i == j)
                                den *= x - y;
                        }
                }
    auto q = laurent_divide(num, den);
    if (!q)
        throw std::domain_error("cross factor of " + rs.root_name(beta) + " and " + rs.root_name(beta2) +
                                " is not a Laurent polynomial");
    return *q;
}

MultiLaurent g_beta_pair(const RootSystem& rs, int beta, int beta2, int d1, int d2) {
    require(beta < beta2, "g_beta_pair needs beta < beta' in the convex order");
    if (rs.kind() != RootType::G)
        return g_beta_pair_generic({rs, Flavor::Trig}, beta, beta2, d1, d2);
    const Word& a = rs.root(beta).word;
    const Word& b = rs.root(beta2).word;
    for (auto& e : g2_pairs())
        if (e.a == a && e.b == b)
            return linear_factors(beta, beta2, d1, d2, e.f);
    throw std::invalid_argument("no tabulated factor for " + rs.root_name(beta) + ", " + rs.root_name(beta2));
}

MultiLaurent g_beta(const RootSystem& rs, int beta, int d) {
    if (d == 0)
        return 1;
    const Word& w = rs.root(beta).word;
    switch (rs.kind()) {
    case RootType::G:
        if (w.size() == 1)
            return 1;
        if (w == Word{1, 2})
            return linear_factors(beta, beta, d, d, {{6, 1}}) * w_power(beta, d, 1);
        if (w == Word{1, 2, 2})
            return linear_factors(beta, beta, d, d, {{6, 1}, {4, 1}}) * w_power(beta, d, 2);
        if (w == Word{1, 2, 2, 2})
            return linear_factors(beta, beta, d, d, {{6, 1}, {4, 1}, {2, 1}}) * w_power(beta, d, 3);
        return linear_factors(beta, beta, d, d, {{8, 1}, {6, 2}, {4, 2}, {2, 1}}) * w_power(beta, d, 6);
    case RootType::B: {
        BShape sh = b_shape(rs, beta);
        int n = rs.rank(), i = sh.i, j = sh.j;
        if (!sh.doubled)
            return w_power(beta, d, j - i) * linear_factors(beta, beta, d, d, {{4, j - i}});
        Factors f = {{4, 2 * n - i - j}, {2, 1}};
        for (int l = j; l <= n - 1; ++l) {
            f.push_back({4 * n - 4 * l + 2, 1});
            f.push_back({4 * n - 4 * l - 6, 1});
        }
        return w_power(beta, d, 4 * n - i - 3 * j + 1) * linear_factors(beta, beta, d, d, f);
    }
    case RootType::A:
        break;
    }
    throw std::invalid_argument("G_beta is not available for type " + rs.name());
}

MultiLaurent p_lambda(const ShuffleContext& ctx, int beta, const std::vector<int>& lambda) {
    ShuffleContext a1(RootSystem::A(1), ctx.flavor());
    ShuffleElement F = ShuffleElement::unit(a1);
    for (int l : lambda)
        F = shuffle_product(F, ShuffleElement::generator(a1, 1, l));
    int hn = ctx.rs().half_norm(beta);
    MultiLaurent f = ctx.rational()
                         ? hbar_dilate(F.numerator(), hn)
                         : F.numerator().map_coefficients([hn](const VRatFunc& c) { return c.dilate(hn); });
    std::map<VarId, VarId> ren;
    for (int s = 1; s <= int(lambda.size()); ++s)
        ren[xvar(1, s)] = w_variable(beta, s);
    return rename(f, ren);
}

ULaurent rtt_extra_constant(const RootSystem& rs, const KostantPartition& d) {
    ULaurent c = 1;
    if (rs.kind() != RootType::B)
        return c;
    int n = rs.rank();
    for (int b = 0; b < rs.num_roots(); ++b) {
        if (!d.d[b])
            continue;
        BShape sh = b_shape(rs, b);
        if (!sh.doubled)
            continue;
        for (int l = sh.j; l <= n - 1; ++l)
            c *= ((ULaurent::var(-4 * n + 4 * l - 2) - 1) * (ULaurent::var(-4 * n + 4 * l + 6) - 1)).pow(d.d[b]);
    }
    return c;
}

MultiLaurent factorized_spec(const ShuffleContext& ctx, const PBWDIndex& h) {
    const RootSystem& rs = ctx.rs();
    KostantPartition d = h.degree(rs);
    MultiLaurent r(1);
    for (int b = 0; b < rs.num_roots(); ++b)
        for (int b2 = b + 1; b2 < rs.num_roots(); ++b2)
            if (d.d[b] && d.d[b2])
                r *= g_beta_pair(rs, b, b2, d.d[b], d.d[b2]);
    for (int b = 0; b < rs.num_roots(); ++b) {
        if (!d.d[b])
            continue;
        r *= VRatFunc(c_beta(rs, b).pow(d.d[b]));
        r *= g_beta(rs, b, d.d[b]);
        r *= p_lambda(ctx, b, h.lambda(b));
    }
    return r;
}

ULaurent rtt_constant(const RootSystem& rs, const KostantPartition& d) {
    return angle(2).pow(kp_height(rs, d)) * rtt_extra_constant(rs, d);
}

MultiLaurent b_factor(const RootSystem& rs, const KostantPartition& d) {
    MultiLaurent r(1);
    for (int b = 0; b < rs.num_roots(); ++b)
        r *= g_beta(rs, b, d.d[b]);
    return r;
}

std::optional<MultiLaurent> reduced_spec(const KostantPartition& d, const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    require(rs.kind() == RootType::B && !F.ctx().rational(), "reduced specialization is defined for trigonometric B");
    MultiLaurent p = phi(d, F).poly;
    auto q = p.divide_coefficients(rtt_constant(rs, d));
    if (!q)
        return std::nullopt;
    auto r = laurent_divide(*q, b_factor(rs, d));
    if (!r || !r->has_integral_coefficients())
        return std::nullopt;
    return r;
}

bool is_vertical_split(const KostantPartition& d, const VerticalSplit& t) {
    for (int b = 0; b < int(d.d.size()); ++b) {
        auto it = t.find(b);
        int sum = 0;
        if (it != t.end())
            for (int x : it->second) {
                if (x <= 0)
                    return false;
                sum += x;
            }
        if (sum != d.d[b])
            return false;
    }
    for (auto& [b, parts] : t)
        if (b < 0 || b >= int(d.d.size()))
            return false;
    return true;
}

std::vector<VerticalSplit> vertical_splits(const KostantPartition& d) {
    std::vector<VerticalSplit> out = {{}};
    for (int b = 0; b < int(d.d.size()); ++b) {
        if (!d.d[b])
            continue;
        std::vector<std::vector<int>> ps;
        std::vector<int> cur;
        partitions(d.d[b], d.d[b], cur, ps);
        std::vector<VerticalSplit> next;
        for (auto& t : out)
            for (auto& p : ps) {
                auto u = t;
                u[b] = p;
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

MultiLaurent vertical_spec(const RootSystem& rs, const KostantPartition& d, const VerticalSplit& t,
                           const MultiLaurent& g) {
    require(is_vertical_split(d, t), "vertical split does not match the partition");
    std::map<VarId, Subst> sigma;
    for (auto& [b, parts] : t) {
        int hn = rs.half_norm(b), s = 1;
        for (int r = 1; r <= int(parts.size()); ++r)
            for (int m = 1; m <= parts[r - 1]; ++m)
                sigma[w_variable(b, s++)] = {VRatFunc::v(-2 * hn * m), z_variable(b, r)};
    }
    return substitute(g, sigma);
}

ULaurent vertical_factorial(const RootSystem& rs, const VerticalSplit& t) {
    ULaurent c = 1;
    for (auto& [b, parts] : t)
        for (int x : parts)
            c *= qfact(x, ULaurent::var(rs.half_norm(b)));
    return c;
}

std::optional<MultiLaurent> cross_spec(const KostantPartition& d, const VerticalSplit& t,
                                       const ShuffleElement& F) {
    auto xi = reduced_spec(d, F);
    if (!xi)
        return std::nullopt;
    return vertical_spec(F.ctx().rs(), d, t, *xi);
}

bool hbar_divisible(const MultiLaurent& p, int m) {
    for (auto& [e, c] : p.terms())
        if (!c.is_laurent() || c.num().valuation() < m)
            return false;
    return true;
}

Verdict in_bold_S(const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    if (F.ctx().rational())
        return {false, "integral forms of the trigonometric algebra need the trig flavor"};
    if (!F.numerator().has_integral_coefficients())
        return {false, "numerator has non-integral coefficients"};
    return over_partitions(F, [&](const KostantPartition& d) -> std::string {
        ULaurent c = 1;
        for (int b = 0; b < rs.num_roots(); ++b)
            c *= c_tilde_beta(rs, b).pow(d.d[b]);
        auto q = phi(d, F).poly.divide_coefficients(c);
        if (!q || !q->has_integral_coefficients())
            return "specialization not divisible by prod c~^d";
        return {};
    });
}

Verdict in_cal_S(const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    if (rs.kind() != RootType::B || F.ctx().rational())
        return {false, "the RTT form is defined for trigonometric B only"};
    int k = std::accumulate(F.grading().begin(), F.grading().end(), 0);
    auto f = F.numerator().divide_coefficients(angle(2).pow(k));
    if (!f || !f->has_integral_coefficients())
        return {false, "numerator not in <2>^{|k|} Z[v,v^-1][x]"};
    return over_partitions(F, [&](const KostantPartition& d) -> std::string {
        auto xi = reduced_spec(d, F);
        if (!xi)
            return "specialization not integrally divisible by A_d B_d";
        for (auto& t : vertical_splits(d)) {
            auto u = vertical_spec(rs, d, t, *xi).divide_coefficients(vertical_factorial(rs, t));
            if (!u || !u->has_integral_coefficients())
                return "cross specialization not divisible by prod [t]!";
        }
        return {};
    });
}

Verdict is_good(const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    if (!F.ctx().rational())
        return {false, "goodness is defined for the rational flavor"};
    if (!hbar_divisible(F.numerator(), 0))
        return {false, "numerator is not over Q[hbar]"};
    return over_partitions(F, [&](const KostantPartition& d) -> std::string {
        int m = 0;
        for (int b = 0; b < rs.num_roots(); ++b)
            m += d.d[b] * kappa(rs, b);
        if (!hbar_divisible(phi(d, F).poly, m))
            return "specialization not divisible by hbar^" + std::to_string(m);
        return {};
    });
}

Verdict is_integral_rational(const ShuffleElement& F) {
    const RootSystem& rs = F.ctx().rs();
    if (!F.ctx().rational())
        return {false, "integrality in hbar is defined for the rational flavor"};
    int k = std::accumulate(F.grading().begin(), F.grading().end(), 0);
    if (!hbar_divisible(F.numerator(), k))
        return {false, "numerator not divisible by hbar^" + std::to_string(k)};
    return over_partitions(F, [&](const KostantPartition& d) -> std::string {
        int m = 0;
        for (int b = 0; b < rs.num_roots(); ++b)
            m += d.d[b] * (kappa(rs, b) + 1);
        if (!hbar_divisible(phi(d, F).poly, m))
            return "specialization not divisible by hbar^" + std::to_string(m);
        return {};
    });
}

}  // namespace shufalg

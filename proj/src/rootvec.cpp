#include "shufalg/rootvec.hpp"

#include <stdexcept>

namespace shufalg {

namespace {

const Word kLong = {1, 2, 1, 2, 2};

bool is_long_g2(const RootSystem& rs, int beta) {
    return rs.kind() == RootType::G && rs.root(beta).word == kLong;
}

void check_lambda(const ShuffleContext& ctx, const VRatFunc& l) {
    bool ok = l.is_monomial() && abs(l.num().lead()) == 1;
    if (ctx.rational())
        ok = ok && l.is_constant();
    if (!ok)
        throw std::invalid_argument("bracket parameter must be a unit +-v^z: " + l.str(ctx.coef_var()));
}

VRatFunc vpow(int sign, int e) { return VRatFunc::v(sign * e); }

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

VRatFunc hbar() { return VRatFunc(ULaurent::var(1)); }

}  // namespace

FreeElement root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps,
                        const std::vector<VRatFunc>& lambdas) {
    const RootSystem& rs = ctx.rs();
    const Word& w = rs.root(beta).word;
    if (exps.size() != w.size())
        throw std::invalid_argument("decomposition length does not match the root word " +
                                    rs.root_name(beta));
    if (lambdas.size() + 1 != w.size())
        throw std::invalid_argument("need one bracket parameter per bracket");
    for (auto& l : lambdas)
        check_lambda(ctx, l);
    auto e = [&](size_t k) { return FreeElement::letter(ctx, w[k], exps[k]); };
    if (is_long_g2(rs, beta)) {
        FreeElement left = vcomm(e(0), e(1), lambdas[0]);
        FreeElement right = vcomm(vcomm(e(2), e(3), lambdas[1]), e(4), lambdas[2]);
        return vcomm(left, right, lambdas[3]);
    }
    FreeElement r = e(0);
    for (size_t k = 1; k < w.size(); ++k)
        r = vcomm(r, e(k), lambdas[k - 1]);
    return r;
}

std::vector<int> default_tilde_decomposition(const RootSystem& rs, int beta, int s) {
    const Word& w = rs.root(beta).word;
    switch (rs.kind()) {
    case RootType::A: {
        std::vector<int> d(w.size(), 0);
        d[0] = s;
        return d;
    }
    case RootType::B: {
        BShape sh = b_shape(rs, beta);
        int len = sh.doubled ? rs.rank() - sh.i + 1 : sh.j - sh.i + 1;
        std::vector<int> d(len, 0);
        d[0] = s;
        return d;
    }
    case RootType::G:
        if (w.size() == 1)
            return {s};
        if (w == kLong) {
            int s2 = floor_mod(s, 2);
            return {(s - 3 * s2) / 2, s2};
        }
        return {s, 0};
    }
    return {};
}

std::vector<int> tilde_letter_exps(const RootSystem& rs, int beta, int s, const std::vector<int>& dec) {
    const Word& w = rs.root(beta).word;
    auto bad = [&] {
        return std::invalid_argument("malformed decomposition of s = " + std::to_string(s) + " for " +
                                     rs.root_name(beta));
    };
    switch (rs.kind()) {
    case RootType::A: {
        if (dec.size() != w.size())
            throw bad();
        int t = 0;
        for (int x : dec)
            t += x;
        if (t != s)
            throw bad();
        return dec;
    }
    case RootType::B: {
        BShape sh = b_shape(rs, beta);
        int n = rs.rank();
        if (!sh.doubled) {
            if (int(dec.size()) != sh.j - sh.i + 1)
                throw bad();
            int t = 0;
            for (int x : dec)
                t += x;
            if (t != s)
                throw bad();
            return dec;
        }
        if (int(dec.size()) != n - sh.i + 1)
            throw bad();
        int t = 0;
        std::vector<int> out;
        for (int l = sh.i; l <= n; ++l) {
            t += (l < sh.j ? 1 : 2) * dec[l - sh.i];
            out.push_back(dec[l - sh.i]);
        }
        for (int l = n; l >= sh.j; --l)
            out.push_back(dec[l - sh.i]);
        if (t != s)
            throw bad();
        return out;
    }
    case RootType::G: {
        if (w.size() == 1) {
            if (!(dec.size() == 1 && dec[0] == s))
                throw bad();
            return dec;
        }
        if (dec.size() != 2)
            throw bad();
        int s1 = dec[0], s2 = dec[1];
        if (w == kLong) {
            if (2 * s1 + 3 * s2 != s)
                throw bad();
            return {s1, s2, s1, s2, s2};
        }
        int twos = int(w.size()) - 1;
        if (s1 + twos * s2 != s)
            throw bad();
        std::vector<int> out{s1};
        out.insert(out.end(), twos, s2);
        return out;
    }
    }
    return {};
}

FreeElement tilde_root_vector(const ShuffleContext& ctx, int beta, int s, int sign,
                              const std::vector<int>& dec) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    const RootSystem& rs = ctx.rs();
    auto exps = tilde_letter_exps(rs, beta, s, dec.empty() ? default_tilde_decomposition(rs, beta, s) : dec);
    const Word& w = rs.root(beta).word;
    std::vector<VRatFunc> lam;
    switch (rs.kind()) {
    case RootType::A:
        lam.assign(w.size() - 1, vpow(sign, 1));
        break;
    case RootType::B: {
        lam.assign(w.size() - 1, vpow(sign, 2));
        BShape sh = b_shape(rs, beta);
        // the bracket that attaches the second e_n is plain
        if (sh.doubled)
            lam[rs.rank() - sh.i] = 1;
        break;
    }
    case RootType::G:
        if (w.size() == 2)
            lam = {vpow(sign, 3)};
        else if (w.size() == 3)
            lam = {vpow(sign, 3), vpow(sign, 1)};
        else if (w == kLong)
            lam = {vpow(sign, 3), vpow(sign, 3), vpow(sign, 1), vpow(-sign, 1)};
        else if (w.size() == 4)
            lam = {vpow(sign, 3), vpow(sign, 1), vpow(-sign, 1)};
        break;
    }
    return root_vector(ctx, beta, exps, lam);
}

FreeElement rtt_root_vector(const ShuffleContext& ctx, int beta, int s, int sign,
                            const std::vector<int>& dec) {
    if (ctx.rs().kind() != RootType::B)
        throw std::invalid_argument("RTT root vectors are defined for type B only");
    return tilde_root_vector(ctx, beta, s, sign, dec) * VRatFunc(angle(2));
}

ULaurent divided_power_denominator(const RootSystem& rs, int beta, int k) {
    ULaurent norm = 1;
    const Word& w = rs.root(beta).word;
    if (rs.kind() == RootType::G) {
        if (w == Word{1, 2, 2})
            norm = qfact(2);
        else if (w == Word{1, 2, 2, 2} || w == kLong)
            norm = qfact(3);
    } else if (rs.kind() == RootType::B && b_shape(rs, beta).doubled) {
        norm = qfact(2);
    }
    return norm.pow(k) * qfact(k, ULaurent::var(rs.half_norm(beta)));
}

FreeElement divided_power(const ShuffleContext& ctx, int beta, int s, int k, int sign,
                          const std::vector<int>& dec) {
    if (k < 0)
        throw std::invalid_argument("negative divided power");
    FreeElement p = tilde_root_vector(ctx, beta, s, sign, dec).pow(k);
    return p * VRatFunc(1, divided_power_denominator(ctx.rs(), beta, k));
}

FreeElement yangian_root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps) {
    if (!ctx.rational())
        throw std::invalid_argument("Yangian root vectors need the rational flavor");
    for (int x : exps)
        if (x < 0)
            throw std::invalid_argument("Yangian exponents are nonnegative");
    size_t len = ctx.rs().root(beta).word.size();
    return root_vector(ctx, beta, exps, std::vector<VRatFunc>(len - 1, VRatFunc(1)));
}

std::vector<int> yangian_tilde_exps(const RootSystem& rs, int beta, int s) {
    std::vector<int> exps(rs.root(beta).word.size(), 0);
    exps[0] = s;
    return exps;
}

FreeElement yangian_tilde_root_vector(const ShuffleContext& ctx, int beta, int s) {
    return yangian_root_vector(ctx, beta, yangian_tilde_exps(ctx.rs(), beta, s));
}

FreeElement yangian_bar_root_vector(const ShuffleContext& ctx, int beta, const std::vector<int>& exps) {
    return yangian_root_vector(ctx, beta, exps) * hbar();
}

PowerFn powers_of(const ShuffleContext&, VectorFn vec) {
    return [vec](int beta, int s, int mult) { return vec(beta, s).pow(mult); };
}

VectorFn tilde_choice(const ShuffleContext& ctx, int sign) {
    return [ctx, sign](int beta, int s) { return tilde_root_vector(ctx, beta, s, sign); };
}

VectorFn rtt_choice(const ShuffleContext& ctx, int sign) {
    return [ctx, sign](int beta, int s) { return rtt_root_vector(ctx, beta, s, sign); };
}

VectorFn yangian_tilde_choice(const ShuffleContext& ctx) {
    return [ctx](int beta, int s) { return yangian_tilde_root_vector(ctx, beta, s); };
}

VectorFn yangian_bar_choice(const ShuffleContext& ctx) {
    return [ctx](int beta, int s) {
        return yangian_bar_root_vector(ctx, beta, yangian_tilde_exps(ctx.rs(), beta, s));
    };
}

PowerFn divided_power_choice(const ShuffleContext& ctx, int sign) {
    return [ctx, sign](int beta, int s, int mult) { return divided_power(ctx, beta, s, mult, sign); };
}

FreeElement pbwd_monomial(const ShuffleContext& ctx, const PBWDIndex& h, const PowerFn& factor) {
    FreeElement r = FreeElement::one(ctx);
    for (auto& [key, m] : h.h)
        r = r * factor(key.first, key.second, m);
    return r;
}

ShuffleElement pbwd_image(const ShuffleContext& ctx, const PBWDIndex& h, const PowerFn& factor) {
    ShuffleElement r = ShuffleElement::unit(ctx);
    for (auto& [key, m] : h.h)
        r = shuffle_product(r, psi(factor(key.first, key.second, m)));
    return r;
}

std::vector<ShuffleElement> pbwd_factor_images(const ShuffleContext& ctx, const PBWDIndex& h, const VectorFn& vec) {
    std::vector<ShuffleElement> out;
    for (auto& [key, m] : h.h) {
        ShuffleElement F = psi(vec(key.first, key.second));
        out.insert(out.end(), m, F);
    }
    if (out.empty())
        out.push_back(ShuffleElement::unit(ctx));
    return out;
}

ShuffleElement pbwd_image(const ShuffleContext& ctx, const PBWDIndex& h, const VectorFn& vec) {
    ShuffleElement r = ShuffleElement::unit(ctx);
    for (auto& [key, m] : h.h)
        r = shuffle_product(r, shuffle_power(psi(vec(key.first, key.second)), m));
    return r;
}

}  // namespace shufalg

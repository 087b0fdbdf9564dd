#include "shufalg/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace shufalg {

namespace {

char family_letter(Family f) {
    switch (f) {
    case Family::X:
        return 'x';
    case Family::W:
        return 'w';
    case Family::Z:
        return 'z';
    case Family::U:
        return 'u';
    }
    return '?';
}

Family family_from_letter(char c) {
    switch (c) {
    case 'x':
        return Family::X;
    case 'w':
        return Family::W;
    case 'z':
        return Family::Z;
    case 'u':
        return Family::U;
    }
    throw std::invalid_argument(std::string("unknown variable family '") + c + "'");
}

std::string color_name(const VarId& v, const ColorNamer& namer) {
    return namer ? namer(v) : std::to_string(v.color);
}

struct ExpsHash {
    size_t operator()(const MultiLaurent::Exps& e) const {
        size_t h = 1469598103934665603ull;
        for (int x : e)
            h = (h ^ size_t(uint32_t(x))) * 1099511628211ull;
        return h;
    }
};

// index of each var of src inside dst
std::vector<int> positions(const std::vector<VarId>& src, const std::vector<VarId>& dst) {
    std::vector<int> pos(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        auto it = std::lower_bound(dst.begin(), dst.end(), src[i]);
        if (it == dst.end() || *it != src[i])
            throw std::logic_error("variable layout is not a superset");
        pos[i] = int(it - dst.begin());
    }
    return pos;
}

int total_degree(const MultiLaurent::Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

std::string default_var_key(const VarId& v) {
    return var_key(v, {});
}

std::string var_key(const VarId& v, const ColorNamer& namer) {
    return std::string(1, family_letter(v.family)) + ":" + color_name(v, namer) + ":" +
           std::to_string(v.slot);
}

VarId parse_var_key(const std::string& key, const ColorResolver& resolver) {
    auto a = key.find(':');
    auto b = key.rfind(':');
    if (a == std::string::npos || a == b || a != 1)
        throw std::invalid_argument("bad variable key: " + key);
    VarId v;
    v.family = family_from_letter(key[0]);
    std::string color = key.substr(a + 1, b - a - 1);
    v.color = resolver ? resolver(v.family, color) : std::stoi(color);
    v.slot = std::stoi(key.substr(b + 1));
    if (v.slot < 1)
        throw std::invalid_argument("variable slot must be positive: " + key);
    return v;
}

std::vector<VarId> merge_vars(const std::vector<VarId>& a, const std::vector<VarId>& b) {
    std::vector<VarId> r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool MultiLaurent::GrlexLess::operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

// ---- builder ----

MultiLaurentBuilder::MultiLaurentBuilder(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

void MultiLaurentBuilder::add(const MultiLaurent::Exps& e, const VRatFunc& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = acc_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            acc_.erase(it);
    }
}

void MultiLaurentBuilder::add(const MultiLaurent& p) {
    if (p.vars() == vars_) {
        for (auto& [e, c] : p.terms())
            add(e, c);
        return;
    }
    auto pos = positions(p.vars(), vars_);
    MultiLaurent::Exps e(vars_.size());
    for (auto& [pe, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (size_t i = 0; i < pe.size(); ++i)
            e[pos[i]] = pe[i];
        add(e, c);
    }
}

MultiLaurent MultiLaurentBuilder::finish() {
    return MultiLaurent::from_terms(std::move(vars_), std::move(acc_));
}

// ---- MultiLaurent ----

MultiLaurent::MultiLaurent(const VRatFunc& c) {
    if (!c.is_zero())
        terms_.emplace(Exps{}, c);
}

MultiLaurent MultiLaurent::variable(const VarId& x, int e) {
    return monomial(1, {{x, e}});
}

MultiLaurent MultiLaurent::monomial(const VRatFunc& c, const std::vector<std::pair<VarId, int>>& m) {
    std::vector<VarId> vs;
    for (auto& [x, e] : m)
        vs.push_back(x);
    MultiLaurentBuilder b(vs);
    Exps e(b.vars().size());
    auto pos = positions(vs, b.vars());
    for (size_t i = 0; i < m.size(); ++i)
        e[pos[i]] += m[i].second;
    b.add(e, c);
    return b.finish();
}

MultiLaurent MultiLaurent::binomial(const VarId& x, const VRatFunc& c, const VarId& y) {
    return variable(x) - monomial(c, {{y, 1}});
}

MultiLaurent MultiLaurent::from_terms(std::vector<VarId> vars, TermMap terms) {
    MultiLaurent p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        if (it->second.is_zero())
            it = p.terms_.erase(it);
        else
            ++it;
    }
    p.compact();
    return p;
}

void MultiLaurent::compact() {
    if (vars_.empty())
        return;
    std::vector<char> used(vars_.size(), 0);
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                used[i] = 1;
    if (std::all_of(used.begin(), used.end(), [](char u) { return u; }))
        return;
    std::vector<VarId> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            nv.push_back(vars_[i]);
    TermMap nt;
    for (auto& [e, c] : terms_) {
        Exps ne;
        ne.reserve(nv.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i])
                ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

VRatFunc MultiLaurent::constant_term() const {
    Exps z(vars_.size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? VRatFunc() : it->second;
}

VRatFunc MultiLaurent::coeff(const std::vector<std::pair<VarId, int>>& m) const {
    Exps e(vars_.size(), 0);
    for (auto& [x, k] : m) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), x);
        if (it == vars_.end() || *it != x) {
            if (k != 0)
                return VRatFunc();
            continue;
        }
        e[it - vars_.begin()] += k;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? VRatFunc() : it->second;
}

int MultiLaurent::min_exp(const VarId& x) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), x);
    if (it == vars_.end() || *it != x)
        return 0;
    size_t k = it - vars_.begin();
    int m = INT32_MAX;
    for (auto& [e, c] : terms_)
        m = std::min(m, e[k]);
    return terms_.empty() ? 0 : m;
}

int MultiLaurent::max_exp(const VarId& x) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), x);
    if (it == vars_.end() || *it != x)
        return 0;
    size_t k = it - vars_.begin();
    int m = INT32_MIN;
    for (auto& [e, c] : terms_)
        m = std::max(m, e[k]);
    return terms_.empty() ? 0 : m;
}

bool MultiLaurent::is_polynomial() const {
    for (auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0)
                return false;
    return true;
}

bool MultiLaurent::has_integral_coefficients() const {
    for (auto& [e, c] : terms_)
        if (!is_integral_laurent(c))
            return false;
    return true;
}

MultiLaurent MultiLaurent::with_vars(const std::vector<VarId>& vars) const {
    MultiLaurent r;
    r.vars_ = vars;
    if (vars == vars_) {
        r.terms_ = terms_;
        return r;
    }
    auto pos = positions(vars_, vars);
    for (auto& [pe, c] : terms_) {
        Exps e(vars.size(), 0);
        for (size_t i = 0; i < pe.size(); ++i)
            e[pos[i]] = pe[i];
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (vars_ != o.vars_) {
        auto vs = merge_vars(vars_, o.vars_);
        *this = with_vars(vs);
        MultiLaurent oo = o.with_vars(vs);
        return *this += oo;
    }
    for (auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    compact();
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    return *this += -o;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.is_zero() || b.is_zero())
        return MultiLaurent();
    if (a.is_constant())
        return b * a.constant_term();
    if (b.is_constant())
        return a * b.constant_term();
    auto vs = a.vars_ == b.vars_ ? a.vars_ : merge_vars(a.vars_, b.vars_);
    MultiLaurent aa = a.vars_ == vs ? MultiLaurent() : a.with_vars(vs);
    MultiLaurent bb = b.vars_ == vs ? MultiLaurent() : b.with_vars(vs);
    const MultiLaurent& x = a.vars_ == vs ? a : aa;
    const MultiLaurent& y = b.vars_ == vs ? b : bb;
    std::unordered_map<MultiLaurent::Exps, VRatFunc, ExpsHash> acc;
    acc.reserve(x.size() * y.size());
    MultiLaurent::Exps e(vs.size());
    for (auto& [ex, cx] : x.terms_)
        for (auto& [ey, cy] : y.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ex[i] + ey[i];
            auto [it, fresh] = acc.try_emplace(e, cx);
            if (fresh)
                it->second *= cy;
            else
                it->second += cx * cy;
        }
    MultiLaurent::TermMap tm;
    for (auto& [ee, c] : acc)
        if (!c.is_zero())
            tm.emplace(ee, std::move(c));
    return MultiLaurent::from_terms(std::move(vs), std::move(tm));
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) {
    return *this = *this * o;
}

MultiLaurent& MultiLaurent::operator*=(const VRatFunc& c) {
    if (c.is_zero()) {
        *this = MultiLaurent();
        return *this;
    }
    if (c.is_one())
        return *this;
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

MultiLaurent MultiLaurent::pow(unsigned k) const {
    MultiLaurent r(1), b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

MultiLaurent MultiLaurent::shifted(const std::vector<std::pair<VarId, int>>& m) const {
    return *this * monomial(1, m);
}

MultiLaurent MultiLaurent::map_coefficients(const std::function<VRatFunc(const VRatFunc&)>& f) const {
    MultiLaurent r;
    r.vars_ = vars_;
    for (auto& [e, c] : terms_) {
        VRatFunc d = f(c);
        if (!d.is_zero())
            r.terms_.emplace(e, std::move(d));
    }
    r.compact();
    return r;
}

std::optional<MultiLaurent> MultiLaurent::divide_coefficients(const ULaurent& c) const {
    MultiLaurent r;
    r.vars_ = vars_;
    for (auto& [e, x] : terms_) {
        if (!x.is_laurent())
            return std::nullopt;
        ULaurent q;
        if (!ULaurent::exact_div(x.num(), c, q))
            return std::nullopt;
        r.terms_.emplace(e, VRatFunc(q));
    }
    return r;
}

std::string MultiLaurent::str(std::string_view coef_var, const ColorNamer& namer) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::vector<std::string> factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            std::string f = std::string(1, family_letter(vars_[i].family)) + "[" +
                            color_name(vars_[i], namer) + "," + std::to_string(vars_[i].slot) + "]";
            if (e[i] != 1)
                f += "^" + std::to_string(e[i]);
            factors.push_back(f);
        }
        bool unit = c.is_one();
        if (!unit || factors.empty())
            os << "(" << c.str(coef_var) << ")";
        for (size_t k = 0; k < factors.size(); ++k)
            os << ((k == 0 && unit) ? "" : "*") << factors[k];
    }
    return os.str();
}

nlohmann::json MultiLaurent::to_json(std::string_view coef_var, const ColorNamer& namer) const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : terms_) {
        nlohmann::json ex = nlohmann::json::object();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                ex[var_key(vars_[i], namer)] = e[i];
        terms.push_back({{"exps", ex}, {"coef", c.str(coef_var)}});
    }
    return {{"terms", terms}};
}

MultiLaurent MultiLaurent::from_json(const nlohmann::json& j, std::string_view coef_var,
                                     const ColorResolver& resolver) {
    MultiLaurent r;
    for (auto& t : j.at("terms")) {
        std::vector<std::pair<VarId, int>> m;
        for (auto& [k, e] : t.at("exps").items())
            m.emplace_back(parse_var_key(k, resolver), e.get<int>());
        r += monomial(VRatFunc::parse(t.at("coef").get<std::string>(), coef_var), m);
    }
    return r;
}

MultiLaurent add(const MultiLaurent& p, const MultiLaurent& q) {
    return p + q;
}

MultiLaurent mul(const MultiLaurent& p, const MultiLaurent& q) {
    return p * q;
}

MultiLaurent scale(const MultiLaurent& p, const VRatFunc& c) {
    return p * c;
}

MultiLaurent substitute(const MultiLaurent& p, const std::map<VarId, Subst>& sigma) {
    const auto& vs = p.vars();
    std::vector<const Subst*> img(vs.size());
    std::vector<VarId> targets;
    for (size_t i = 0; i < vs.size(); ++i) {
        auto it = sigma.find(vs[i]);
        if (it == sigma.end())
            throw std::domain_error("substitution is not defined on " + default_var_key(vs[i]));
        img[i] = &it->second;
        if (it->second.target)
            targets.push_back(*it->second.target);
    }
    MultiLaurentBuilder b(targets);
    std::vector<int> tpos(vs.size(), -1);
    for (size_t i = 0; i < vs.size(); ++i)
        if (img[i]->target)
            tpos[i] = int(std::lower_bound(b.vars().begin(), b.vars().end(), *img[i]->target) -
                          b.vars().begin());
    std::vector<std::map<int, VRatFunc>> powcache(vs.size());
    auto power = [&](size_t i, int e) -> const VRatFunc& {
        auto it = powcache[i].find(e);
        if (it != powcache[i].end())
            return it->second;
        return powcache[i].emplace(e, img[i]->coeff.pow(e)).first->second;
    };
    MultiLaurent::Exps ne(b.vars().size());
    for (auto& [e, c] : p.terms()) {
        std::fill(ne.begin(), ne.end(), 0);
        VRatFunc k = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!img[i]->coeff.is_one())
                k *= power(i, e[i]);
            if (tpos[i] >= 0)
                ne[tpos[i]] += e[i];
        }
        b.add(ne, k);
    }
    return b.finish();
}

MultiLaurent substitute_affine(const MultiLaurent& p, const std::map<VarId, AffineSubst>& sigma) {
    const auto& vs = p.vars();
    std::vector<MultiLaurent> img(vs.size());
    std::vector<bool> shifted(vs.size(), false);
    std::vector<VarId> targets;
    for (size_t i = 0; i < vs.size(); ++i) {
        auto it = sigma.find(vs[i]);
        if (it == sigma.end())
            throw std::domain_error("substitution is not defined on " + default_var_key(vs[i]));
        const AffineSubst& s = it->second;
        MultiLaurent m = s.shift;
        if (s.target) {
            m += MultiLaurent::variable(*s.target);
            targets.push_back(*s.target);
        }
        shifted[i] = !s.shift.is_zero() || !s.target;
        if (shifted[i] && p.min_exp(vs[i]) < 0)
            throw std::domain_error("affine substitution of a negative power of " +
                                    default_var_key(vs[i]));
        img[i] = std::move(m);
    }
    std::vector<std::map<int, MultiLaurent>> powcache(vs.size());
    auto power = [&](size_t i, int e) -> const MultiLaurent& {
        auto it = powcache[i].find(e);
        if (it != powcache[i].end())
            return it->second;
        MultiLaurent r = e >= 0 ? img[i].pow(e) : MultiLaurent::variable(*sigma.at(vs[i]).target, e);
        return powcache[i].emplace(e, std::move(r)).first->second;
    };
    MultiLaurentBuilder b(targets);
    for (auto& [e, c] : p.terms()) {
        MultiLaurent t(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                t *= power(i, e[i]);
        b.add(t);
    }
    return b.finish();
}

MultiLaurent rename(const MultiLaurent& p, const std::map<VarId, VarId>& sigma) {
    std::map<VarId, Subst> s;
    for (auto& x : p.vars()) {
        auto it = sigma.find(x);
        s[x] = Subst{1, it == sigma.end() ? x : it->second};
    }
    return substitute(p, s);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

MultiLaurent symmetrize(const MultiLaurent& p, const std::vector<std::vector<VarId>>& groups) {
    std::vector<VarId> all = p.vars();
    for (auto& g : groups)
        all = merge_vars(all, [&] {
            auto s = g;
            std::sort(s.begin(), s.end());
            return s;
        }());
    MultiLaurent q = p.with_vars(all);
    std::vector<std::vector<int>> gpos;
    std::vector<std::vector<std::vector<int>>> perms;
    for (auto& g : groups) {
        gpos.push_back(positions(g, all));
        perms.push_back(all_permutations(int(g.size())));
    }
    MultiLaurentBuilder b(all);
    std::vector<size_t> idx(groups.size(), 0);
    for (;;) {
        for (auto& [e, c] : q.terms()) {
            MultiLaurent::Exps ne = e;
            for (size_t k = 0; k < groups.size(); ++k) {
                const auto& pi = perms[k][idx[k]];
                for (size_t a = 0; a < pi.size(); ++a)
                    ne[gpos[k][pi[a]]] = e[gpos[k][a]];
            }
            b.add(ne, c);
        }
        size_t k = 0;
        while (k < groups.size() && ++idx[k] == perms[k].size())
            idx[k++] = 0;
        if (k == groups.size())
            break;
    }
    return b.finish();
}

namespace {

// polynomial division with separate monomial shifts; common = true uses one shift for both
std::optional<MultiLaurent> divide_impl(const MultiLaurent& p, const MultiLaurent& q, bool common) {
    if (q.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (p.is_zero())
        return MultiLaurent();
    auto vs = merge_vars(p.vars(), q.vars());
    MultiLaurent a = p.with_vars(vs), b = q.with_vars(vs);
    size_t n = vs.size();
    auto min_exps = [n](const MultiLaurent& x) {
        MultiLaurent::Exps m(n, INT32_MAX);
        for (auto& [e, c] : x.terms())
            for (size_t i = 0; i < n; ++i)
                m[i] = std::min(m[i], e[i]);
        return m;
    };
    auto ma = min_exps(a), mb = min_exps(b);
    if (common) {
        for (size_t i = 0; i < n; ++i)
            ma[i] = mb[i] = std::min({ma[i], mb[i], 0});
    }
    auto shift = [n](const MultiLaurent& x, const MultiLaurent::Exps& m) {
        MultiLaurent::TermMap t;
        for (auto& [e, c] : x.terms()) {
            MultiLaurent::Exps ne(n);
            for (size_t i = 0; i < n; ++i)
                ne[i] = e[i] - m[i];
            t.emplace(std::move(ne), c);
        }
        return t;
    };
    MultiLaurent::TermMap rem = shift(a, ma);
    MultiLaurent::TermMap den = shift(b, mb);
    const auto& [lde, ldc] = *den.rbegin();
    VRatFunc inv = ldc.inverse();
    MultiLaurent::TermMap quo;
    MultiLaurent::Exps qe(n);
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        for (size_t i = 0; i < n; ++i) {
            qe[i] = top->first[i] - lde[i];
            if (qe[i] < 0)
                return std::nullopt;
        }
        VRatFunc qc = top->second * inv;
        for (auto& [de, dc] : den) {
            MultiLaurent::Exps e(n);
            for (size_t i = 0; i < n; ++i)
                e[i] = qe[i] + de[i];
            VRatFunc c = -(qc * dc);
            auto [it, fresh] = rem.try_emplace(std::move(e), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero())
                    rem.erase(it);
            }
        }
        quo.emplace(qe, std::move(qc));
    }
    MultiLaurent::TermMap out;
    for (auto& [e, c] : quo) {
        MultiLaurent::Exps ne(n);
        for (size_t i = 0; i < n; ++i)
            ne[i] = e[i] + ma[i] - mb[i];
        out.emplace(std::move(ne), std::move(c));
    }
    return MultiLaurent::from_terms(std::move(vs), std::move(out));
}

}  // namespace

std::optional<MultiLaurent> exact_divide(const MultiLaurent& p, const MultiLaurent& q) {
    return divide_impl(p, q, true);
}

std::optional<MultiLaurent> laurent_divide(const MultiLaurent& p, const MultiLaurent& q) {
    return divide_impl(p, q, false);
}

namespace {

Rational rpow(const Rational& x, int e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1 / x);
    for (int k = 0; k < std::abs(e); ++k)
        r *= b;
    return r;
}

}  // namespace

int coefficient_valuation(const MultiLaurent& p) {
    int v = INT32_MAX;
    for (auto& [e, c] : p.terms())
        v = std::min(v, c.num().valuation());
    return v;
}

VRatFunc evaluate(const MultiLaurent& p, const std::map<VarId, Rational>& point) {
    std::vector<Rational> val;
    for (auto& x : p.vars()) {
        auto it = point.find(x);
        if (it == point.end())
            throw std::domain_error("evaluation point misses " + default_var_key(x));
        val.push_back(it->second);
    }
    // group by denominator to keep additions cheap
    std::map<ULaurent, ULaurent> by_den;
    for (auto& [e, c] : p.terms()) {
        Rational m = 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (val[i] == 0 && e[i] < 0)
                throw std::domain_error("negative power evaluated at zero");
            m *= rpow(val[i], e[i]);
        }
        by_den[c.den()] += c.num() * m;
    }
    VRatFunc r;
    for (auto& [d, n] : by_den)
        r += VRatFunc(n, d);
    return r;
}

Rational evaluate(const MultiLaurent& p, const std::map<VarId, Rational>& point, const Rational& vval) {
    return evaluate(p, point).eval(vval);
}

}  // namespace shufalg

#include "shufalg/shuffle.hpp"
#include "shufalg/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace shufalg {

namespace {

VRatFunc hbar_multiple(const Rational& c) { return VRatFunc(ULaurent::monomial(c, 1)); }

MultiLaurent X(const VarId& x) { return MultiLaurent::variable(x); }

void require_same(const ShuffleContext& a, const ShuffleContext& b) {
    if (!(a == b))
        throw std::invalid_argument("shuffle elements live in different algebras");
}

// all increasing k-subsets of {1..m}
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int a = from; a <= m - (k - int(cur.size())) + 1; ++a) {
            cur.push_back(a);
            rec(a + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

MultiLaurent vandermonde(int color, const std::vector<int>& slots, const NumeratorMap* hom = nullptr) {
    MultiLaurent p(1);
    for (size_t a = 0; a < slots.size(); ++a)
        for (size_t b = a + 1; b < slots.size(); ++b) {
            MultiLaurent d = X(xvar(color, slots[a])) - X(xvar(color, slots[b]));
            p *= hom ? (*hom)(d) : d;
        }
    return p;
}

// per color: positions taken by the left factor and by the right factor
struct Placement {
    std::vector<std::vector<int>> left, right;
};

MultiLaurent placed_term(const ShuffleContext& ctx, const MultiLaurent& f, const MultiLaurent& g,
                         const Placement& pl, const NumeratorMap* hom = nullptr) {
    const RootSystem& rs = ctx.rs();
    int n = rs.rank();
    std::map<VarId, VarId> mf, mg;
    for (int i = 1; i <= n; ++i) {
        for (size_t r = 0; r < pl.left[i - 1].size(); ++r)
            mf[xvar(i, int(r) + 1)] = xvar(i, pl.left[i - 1][r]);
        for (size_t r = 0; r < pl.right[i - 1].size(); ++r)
            mg[xvar(i, int(r) + 1)] = xvar(i, pl.right[i - 1][r]);
    }
    MultiLaurent cross(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i != j && !rs.adjacent(i, j))
                continue;
            for (int a : pl.left[i - 1])
                for (int b : pl.right[j - 1]) {
                    MultiLaurent z = ctx.zeta_numerator(i, j, xvar(i, a), xvar(j, b));
                    if (hom)
                        z = (*hom)(z);
                    cross *= (i > j) ? -z : z;
                }
        }
    for (int i = 1; i <= n; ++i)
        cross *= vandermonde(i, pl.left[i - 1], hom) * vandermonde(i, pl.right[i - 1], hom);
    if (hom)
        return (*hom)(rename(f, mf)) * (*hom)(rename(g, mg)) * cross;
    return rename(f, mf) * rename(g, mg) * cross;
}

int inversions(const std::vector<int>& left, const std::vector<int>& right) {
    int c = 0;
    for (int a : left)
        for (int b : right)
            if (a > b)
                ++c;
    return c;
}

MultiLaurent sum_parallel(size_t n, const std::function<MultiLaurent(size_t)>& term, unsigned threads) {
    std::vector<MultiLaurent> parts(n);
    parallel_for(n, [&](size_t i) { parts[i] = term(i); }, threads);
    // pairwise tree sum in index order
    while (parts.size() > 1) {
        std::vector<MultiLaurent> next((parts.size() + 1) / 2);
        parallel_for(next.size(), [&](size_t i) {
            next[i] = 2 * i + 1 < parts.size() ? parts[2 * i] + parts[2 * i + 1] : parts[2 * i];
        }, threads);
        parts.swap(next);
    }
    return parts.empty() ? MultiLaurent() : parts[0];
}

MultiLaurent full_vandermonde(const Grading& m, const NumeratorMap* hom = nullptr) {
    MultiLaurent p(1);
    for (int i = 1; i <= int(m.size()); ++i) {
        std::vector<int> all(m[i - 1]);
        std::iota(all.begin(), all.end(), 1);
        p *= vandermonde(i, all, hom);
    }
    return p;
}

}  // namespace

MultiLaurent ShuffleContext::zeta_numerator(int i, int j, const VarId& x, const VarId& y) const {
    int p = rs().pairing(i, j);
    if (rational())
        return X(x) - X(y) + MultiLaurent(hbar_multiple(Rational(p, 2)));
    return MultiLaurent::binomial(x, VRatFunc::v(-p), y);
}

VRatFunc ShuffleContext::wheel_offset_same(int i, int m) const {
    if (rational())
        return hbar_multiple(Rational(-(m - 1) * rs().d(i)));
    return VRatFunc::v(-2 * rs().d(i) * (m - 1));
}

VRatFunc ShuffleContext::wheel_offset_other(int i, int j) const {
    int p = rs().pairing(i, j);
    if (rational())
        return hbar_multiple(Rational(p, 2));
    return VRatFunc::v(p);
}

std::vector<VarId> x_variables(const Grading& k) {
    std::vector<VarId> out;
    for (int i = 1; i <= int(k.size()); ++i)
        for (int r = 1; r <= k[i - 1]; ++r)
            out.push_back(xvar(i, r));
    return out;
}

MultiLaurent canonical_denominator(const ShuffleContext& ctx, const Grading& k) {
    MultiLaurent p(1);
    int n = ctx.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!ctx.rs().adjacent(i, j))
                continue;
            for (int r = 1; r <= k[i - 1]; ++r)
                for (int s = 1; s <= k[j - 1]; ++s)
                    p *= X(xvar(i, r)) - X(xvar(j, s));
        }
    return p;
}

// ---- ShuffleElement ----

ShuffleElement::ShuffleElement(ShuffleContext ctx, Grading k, MultiLaurent f)
    : ctx_(std::move(ctx)), k_(std::move(k)), f_(std::move(f)) {
    if (int(k_.size()) != ctx_.rank())
        throw std::invalid_argument("grading has wrong length");
    for (int x : k_)
        if (x < 0)
            throw std::invalid_argument("grading must be nonnegative");
    for (auto& x : f_.vars())
        if (x.family != Family::X || x.color < 1 || x.color > ctx_.rank() || x.slot < 1 ||
            x.slot > k_[x.color - 1])
            throw std::invalid_argument("numerator uses a variable outside its grading: " +
                                        default_var_key(x));
    if (ctx_.rational() && !f_.is_polynomial())
        throw std::invalid_argument("rational shuffle numerators are polynomials");
}

ShuffleElement ShuffleElement::unit(const ShuffleContext& ctx) {
    return {ctx, Grading(ctx.rank(), 0), MultiLaurent(1)};
}

ShuffleElement ShuffleElement::zero(const ShuffleContext& ctx, const Grading& k) {
    return {ctx, k, MultiLaurent()};
}

ShuffleElement ShuffleElement::generator(const ShuffleContext& ctx, int i, int r) {
    if (i < 1 || i > ctx.rank())
        throw std::invalid_argument("color out of range");
    if (ctx.rational() && r < 0)
        throw std::invalid_argument("negative exponent in the rational flavor");
    Grading k(ctx.rank(), 0);
    k[i - 1] = 1;
    return {ctx, k, MultiLaurent::variable(xvar(i, 1), r)};
}

int ShuffleElement::degree() const { return std::accumulate(k_.begin(), k_.end(), 0); }

ShuffleElement ShuffleElement::operator-() const {
    ShuffleElement r = *this;
    r.f_ = -f_;
    return r;
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
    require_same(ctx_, o.ctx_);
    if (o.f_.is_zero())
        return *this;
    if (f_.is_zero()) {
        k_ = o.k_;
    } else if (k_ != o.k_) {
        throw std::invalid_argument("adding shuffle elements of different gradings");
    }
    f_ += o.f_;
    wheel_checked_ = false;
    return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) { return *this += -o; }

ShuffleElement& ShuffleElement::operator*=(const VRatFunc& c) {
    f_ *= c;
    if (c.is_zero())
        wheel_checked_ = false;
    return *this;
}

bool operator==(const ShuffleElement& a, const ShuffleElement& b) {
    if (!(a.ctx_ == b.ctx_))
        return false;
    if (a.f_.is_zero() && b.f_.is_zero())
        return true;
    return a.k_ == b.k_ && a.f_ == b.f_;
}

std::string ShuffleElement::str() const {
    std::string den;
    int n = ctx_.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!ctx_.rs().adjacent(i, j))
                continue;
            for (int r = 1; r <= k_[i - 1]; ++r)
                for (int s = 1; s <= k_[j - 1]; ++s) {
                    if (!den.empty())
                        den += "*";
                    den += "(x[" + std::to_string(i) + "," + std::to_string(r) + "] - x[" +
                           std::to_string(j) + "," + std::to_string(s) + "])";
                }
        }
    std::string num = f_.str(ctx_.coef_var());
    if (den.empty())
        return num;
    return "(" + num + ") / (" + den + ")";
}

nlohmann::json ShuffleElement::to_json() const {
    return {{"type", ctx_.rs().name()},
            {"flavor", ctx_.rational() ? "rational" : "trig"},
            {"k", k_},
            {"numerator", f_.to_json(ctx_.coef_var())}};
}

ShuffleElement ShuffleElement::from_json(const nlohmann::json& j) {
    RootSystem rs = RootSystem::parse(j.at("type").get<std::string>());
    std::string fl = j.value("flavor", "trig");
    if (fl != "trig" && fl != "rational")
        throw std::invalid_argument("unknown flavor " + fl);
    ShuffleContext ctx(rs, fl == "rational" ? Flavor::Rational : Flavor::Trig);
    return {ctx, j.at("k").get<Grading>(), MultiLaurent::from_json(j.at("numerator"), ctx.coef_var())};
}

// ---- product ----

namespace {

// sum over shuffles of the placed terms, signed by the placement parity
MultiLaurent placement_sum(const ShuffleElement& a, const ShuffleElement& b, const Grading& m,
                           const NumeratorMap* hom, unsigned threads) {
    const ShuffleContext& ctx = a.ctx();
    int n = ctx.rank();
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int i = 0; i < n; ++i)
        choices[i] = subsets(m[i], a.grading()[i]);
    size_t total = 1;
    for (auto& c : choices)
        total *= c.size();
    return sum_parallel(total, [&](size_t idx) {
        Placement pl;
        pl.left.resize(n);
        pl.right.resize(n);
        int inv = 0;
        size_t rest = idx;
        for (int i = 0; i < n; ++i) {
            const auto& s = choices[i][rest % choices[i].size()];
            rest /= choices[i].size();
            std::vector<bool> in(m[i] + 1, false);
            for (int x : s)
                in[x] = true;
            pl.left[i] = s;
            for (int x = 1; x <= m[i]; ++x)
                if (!in[x])
                    pl.right[i].push_back(x);
            inv += inversions(pl.left[i], pl.right[i]);
        }
        MultiLaurent t = placed_term(ctx, a.numerator(), b.numerator(), pl, hom);
        return inv % 2 ? -t : t;
    }, threads);
}

}  // namespace

MultiLaurent mapped_product_numerator(const ShuffleElement& a, const ShuffleElement& b, const NumeratorMap& hom,
                                      unsigned threads) {
    require_same(a.ctx(), b.ctx());
    int n = a.ctx().rank();
    Grading m(n);
    for (int i = 0; i < n; ++i)
        m[i] = a.grading()[i] + b.grading()[i];
    if (a.is_zero() || b.is_zero())
        return MultiLaurent();
    if (a.degree() == 0 || b.degree() == 0)
        return hom(shuffle_product(a, b).numerator());
    MultiLaurent den = full_vandermonde(m, &hom);
    if (den.is_zero())
        throw std::invalid_argument("the map kills the Vandermonde factor");
    auto f = laurent_divide(placement_sum(a, b, m, &hom, threads), den);
    if (!f)
        throw std::logic_error("mapped product numerator is not divisible by the mapped Vandermonde factor");
    return std::move(*f);
}

ShuffleElement shuffle_product(const ShuffleElement& a, const ShuffleElement& b,
                               const ProductOptions& opt) {
    require_same(a.ctx(), b.ctx());
    const ShuffleContext& ctx = a.ctx();
    int n = ctx.rank();
    Grading m(n);
    for (int i = 0; i < n; ++i)
        m[i] = a.grading()[i] + b.grading()[i];
    if (a.is_zero() || b.is_zero())
        return ShuffleElement::zero(ctx, m);
    if (a.degree() == 0)
        return b * a.numerator().constant_term();
    if (b.degree() == 0)
        return a * b.numerator().constant_term();

    MultiLaurent num;
    if (!opt.full_symmetrization) {
        num = placement_sum(a, b, m, nullptr, opt.threads);
    } else {
        Placement id;
        id.left.resize(n);
        id.right.resize(n);
        Rational norm = 1;
        for (int i = 0; i < n; ++i) {
            for (int x = 1; x <= m[i]; ++x)
                (x <= a.grading()[i] ? id.left[i] : id.right[i]).push_back(x);
            for (int x = 2; x <= a.grading()[i]; ++x)
                norm *= x;
            for (int x = 2; x <= b.grading()[i]; ++x)
                norm *= x;
        }
        MultiLaurent t0 = placed_term(ctx, a.numerator(), b.numerator(), id);
        // sum over sigma of sgn(sigma) sigma(t0)
        std::vector<std::vector<std::vector<int>>> perms(n);
        size_t total = 1;
        for (int i = 0; i < n; ++i) {
            std::vector<int> p(m[i]);
            std::iota(p.begin(), p.end(), 1);
            do
                perms[i].push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            total *= perms[i].size();
        }
        num = sum_parallel(total, [&](size_t idx) {
            std::map<VarId, VarId> sigma;
            size_t rest = idx;
            int sign = 0;
            for (int i = 0; i < n; ++i) {
                const auto& p = perms[i][rest % perms[i].size()];
                rest /= perms[i].size();
                for (int x = 0; x < m[i]; ++x) {
                    sigma[xvar(i + 1, x + 1)] = xvar(i + 1, p[x]);
                    for (int y = x + 1; y < m[i]; ++y)
                        sign += p[x] > p[y];
                }
            }
            MultiLaurent t = rename(t0, sigma);
            return sign % 2 ? -t : t;
        }, opt.threads);
        num *= VRatFunc(Rational(1 / norm));
    }
    auto f = laurent_divide(num, full_vandermonde(m));
    if (!f)
        throw std::logic_error("shuffle product numerator is not divisible by the Vandermonde factor");
    return ShuffleElement(ctx, m, std::move(*f));
}

ShuffleElement shuffle_power(const ShuffleElement& a, int k) {
    if (k < 0)
        throw std::invalid_argument("negative shuffle power");
    ShuffleElement r = ShuffleElement::unit(a.ctx());
    for (int t = 0; t < k; ++t)
        r = shuffle_product(r, a);
    return r;
}

// ---- free algebra ----

FreeElement::FreeElement(ShuffleContext ctx, TermMap terms) : ctx_(std::move(ctx)) {
    for (auto& [w, c] : terms) {
        for (auto& l : w) {
            if (l.i < 1 || l.i > ctx_.rank())
                throw std::invalid_argument("letter color out of range");
            if (ctx_.rational() && l.r < 0)
                throw std::invalid_argument("negative exponent in the rational flavor");
        }
        if (!c.is_zero())
            terms_.emplace(w, c);
    }
}

FreeElement FreeElement::one(const ShuffleContext& ctx) { return scalar(ctx, 1); }

FreeElement FreeElement::letter(const ShuffleContext& ctx, int i, int r) {
    return FreeElement(ctx, TermMap{{FreeWord{{i, r}}, VRatFunc(1)}});
}

FreeElement FreeElement::scalar(const ShuffleContext& ctx, const VRatFunc& c) {
    return FreeElement(ctx, TermMap{{FreeWord{}, c}});
}

std::optional<Grading> FreeElement::grading() const {
    std::optional<Grading> k;
    for (auto& [w, c] : terms_) {
        Grading g(ctx_.rank(), 0);
        for (auto& l : w)
            ++g[l.i - 1];
        if (k && *k != g)
            return std::nullopt;
        k = g;
    }
    return k;
}

FreeElement FreeElement::operator-() const {
    FreeElement r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    require_same(ctx_, o.ctx_);
    for (auto& [w, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) { return *this += -o; }

FreeElement& FreeElement::operator*=(const VRatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_)
        x *= c;
    return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    require_same(a.ctx_, b.ctx_);
    FreeElement r(a.ctx_);
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) {
            FreeWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            VRatFunc c = ca * cb;
            auto [it, fresh] = r.terms_.try_emplace(std::move(w), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero())
                    r.terms_.erase(it);
            }
        }
    return r;
}

FreeElement FreeElement::pow(int k) const {
    if (k < 0)
        throw std::invalid_argument("negative power");
    FreeElement r = one(ctx_);
    for (int t = 0; t < k; ++t)
        r = r * *this;
    return r;
}

std::string FreeElement::str() const {
    if (terms_.empty())
        return "0";
    const char* e = ctx_.rational() ? "x" : "e";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (!c.is_one() || w.empty())
            os << "(" << c.str(ctx_.coef_var()) << ")";
        for (size_t k = 0; k < w.size(); ++k)
            os << ((k == 0 && c.is_one()) ? "" : "*") << e << "[" << w[k].i << "," << w[k].r << "]";
    }
    return os.str();
}

nlohmann::json FreeElement::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [w, c] : terms_) {
        nlohmann::json word = nlohmann::json::array();
        for (auto& l : w)
            word.push_back({l.i, l.r});
        terms.push_back({{"word", word}, {"coef", c.str(ctx_.coef_var())}});
    }
    return {{"type", ctx_.rs().name()}, {"flavor", ctx_.rational() ? "rational" : "trig"}, {"terms", terms}};
}

FreeElement FreeElement::from_json(const nlohmann::json& j) {
    RootSystem rs = RootSystem::parse(j.at("type").get<std::string>());
    std::string fl = j.value("flavor", "trig");
    if (fl != "trig" && fl != "rational")
        throw std::invalid_argument("unknown flavor " + fl);
    ShuffleContext ctx(rs, fl == "rational" ? Flavor::Rational : Flavor::Trig);
    FreeElement out(ctx);
    for (auto& t : j.at("terms")) {
        FreeWord w;
        for (auto& l : t.at("word"))
            w.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
        out += FreeElement(ctx, {{w, VRatFunc::parse(t.at("coef").get<std::string>(), ctx.coef_var())}});
    }
    return out;
}

FreeElement vcomm(const FreeElement& a, const FreeElement& b, const VRatFunc& u) {
    return a * b - u * (b * a);
}

ShuffleElement psi(const FreeElement& w, const Grading* k_if_zero) {
    const ShuffleContext& ctx = w.ctx();
    if (w.is_zero())
        return ShuffleElement::zero(ctx, k_if_zero ? *k_if_zero : Grading(ctx.rank(), 0));
    if (!w.grading())
        throw std::invalid_argument("psi needs a homogeneous element");
    std::map<FreeWord, ShuffleElement> memo;
    memo.emplace(FreeWord{}, ShuffleElement::unit(ctx));
    std::function<const ShuffleElement&(const FreeWord&)> image =
        [&](const FreeWord& word) -> const ShuffleElement& {
        auto it = memo.find(word);
        if (it != memo.end())
            return it->second;
        FreeWord prefix(word.begin(), word.end() - 1);
        const ShuffleElement& p = image(prefix);
        auto gen = ShuffleElement::generator(ctx, word.back().i, word.back().r);
        return memo.emplace(word, shuffle_product(p, gen)).first->second;
    };
    ShuffleElement out = ShuffleElement::zero(ctx, *w.grading());
    for (auto& [word, c] : w.terms())
        out += image(word) * c;
    return out;
}

// ---- wheels ----

namespace {

bool wheel_vanishes(const ShuffleElement& F, int i, int j, const std::vector<int>& s, int r) {
    const ShuffleContext& ctx = F.ctx();
    const MultiLaurent& f = F.numerator();
    VarId t = wvar(0, 1);
    if (ctx.rational()) {
        std::map<VarId, AffineSubst> sigma;
        for (auto& x : f.vars())
            sigma[x] = AffineSubst{x, VRatFunc()};
        for (size_t m = 0; m < s.size(); ++m)
            sigma[xvar(i, s[m])] = AffineSubst{t, ctx.wheel_offset_same(i, int(m) + 1)};
        sigma[xvar(j, r)] = AffineSubst{t, ctx.wheel_offset_other(i, j)};
        return substitute_affine(f, sigma).is_zero();
    }
    std::map<VarId, Subst> sigma;
    for (auto& x : f.vars())
        sigma[x] = Subst{1, x};
    for (size_t m = 0; m < s.size(); ++m)
        sigma[xvar(i, s[m])] = Subst{ctx.wheel_offset_same(i, int(m) + 1), t};
    sigma[xvar(j, r)] = Subst{ctx.wheel_offset_other(i, j), t};
    return substitute(f, sigma).is_zero();
}

}  // namespace

bool check_wheel(const ShuffleElement& F, const WheelOptions& opt) {
    const RootSystem& rs = F.ctx().rs();
    const Grading& k = F.grading();
    int n = rs.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!rs.adjacent(i, j))
                continue;
            int len = 1 - rs.a(i, j);
            if (k[i - 1] < len || k[j - 1] < 1)
                continue;
            if (!opt.exhaustive) {
                std::vector<int> s(len);
                std::iota(s.begin(), s.end(), 1);
                if (!wheel_vanishes(F, i, j, s, 1))
                    return false;
                continue;
            }
            for (auto& sub : subsets(k[i - 1], len)) {
                std::vector<int> s = sub;
                do {
                    for (int r = 1; r <= k[j - 1]; ++r)
                        if (!wheel_vanishes(F, i, j, s, r))
                            return false;
                } while (std::next_permutation(s.begin(), s.end()));
            }
        }
    return true;
}

// ---- proportionality and rank ----

std::optional<UnitFactor> proportional_up_to_unit(const MultiLaurent& f, const MultiLaurent& g,
                                                  bool allow_power) {
    if (g.is_zero()) {
        if (!f.is_zero())
            throw std::domain_error("comparing a nonzero element with zero");
        return UnitFactor{1, 0};
    }
    if (f.is_zero() || f.size() != g.size() || f.vars() != g.vars())
        return std::nullopt;
    auto [ef, cf] = *f.terms().rbegin();
    auto [eg, cg] = *g.terms().rbegin();
    if (ef != eg)
        return std::nullopt;
    VRatFunc r = cf / cg;
    if (!r.is_monomial())
        return std::nullopt;
    int z = r.num().valuation();
    if (!allow_power && z != 0)
        return std::nullopt;
    if (!(f - g * r).is_zero())
        return std::nullopt;
    return UnitFactor{r.num().lead(), z};
}

std::optional<UnitFactor> proportional_up_to_unit(const ShuffleElement& F, const ShuffleElement& G) {
    require_same(F.ctx(), G.ctx());
    if (!F.is_zero() && !G.is_zero() && F.grading() != G.grading())
        return std::nullopt;
    return proportional_up_to_unit(F.numerator(), G.numerator(), !F.ctx().rational());
}

namespace {

template <class T, class IsZero, class Div>
size_t eliminate(std::vector<std::vector<T>> a, IsZero is_zero, Div div) {
    size_t rows = a.size(), rank = 0;
    if (!rows)
        return 0;
    size_t cols = a[0].size();
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && is_zero(a[p][c]))
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (is_zero(a[r][c]))
                continue;
            T factor = div(a[r][c], a[rank][c]);
            for (size_t k = c; k < cols; ++k)
                a[r][k] -= factor * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

size_t rank_over_field(const std::vector<MultiLaurent>& polys) {
    if (polys.empty())
        return 0;
    std::vector<VarId> vs;
    for (auto& p : polys)
        vs = merge_vars(vs, p.vars());
    std::map<MultiLaurent::Exps, size_t> col;
    std::vector<MultiLaurent> aligned;
    for (auto& p : polys) {
        aligned.push_back(p.with_vars(vs));
        for (auto& [e, c] : aligned.back().terms())
            col.emplace(e, 0);
    }
    size_t idx = 0;
    for (auto& [e, i] : col)
        i = idx++;
    std::vector<std::vector<VRatFunc>> exact(polys.size(), std::vector<VRatFunc>(col.size()));
    for (size_t r = 0; r < aligned.size(); ++r)
        for (auto& [e, c] : aligned[r].terms())
            exact[r][col[e]] = c;

    // a generic numeric point gives a lower bound that is usually already full
    std::mt19937 gen(20240613);
    std::uniform_int_distribution<int> num(2, 97), den(1, 13);
    size_t best = 0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Rational v0(num(gen), den(gen));
        v0.canonicalize();
        std::vector<std::vector<Rational>> m(exact.size(), std::vector<Rational>(col.size()));
        bool ok = true;
        for (size_t r = 0; r < exact.size() && ok; ++r)
            for (size_t c = 0; c < col.size() && ok; ++c) {
                if (exact[r][c].is_zero())
                    continue;
                if (exact[r][c].den().eval(v0) == 0)
                    ok = false;
                else
                    m[r][c] = exact[r][c].eval(v0);
            }
        if (!ok)
            continue;
        best = std::max(best, eliminate(
                                  std::move(m), [](const Rational& x) { return x == 0; },
                                  [](const Rational& x, const Rational& y) { return Rational(x / y); }));
        if (best == polys.size())
            return best;
    }
    return eliminate(
        std::move(exact), [](const VRatFunc& x) { return x.is_zero(); },
        [](const VRatFunc& x, const VRatFunc& y) { return x / y; });
}

size_t rank_over_field(const std::vector<ShuffleElement>& elems) {
    std::vector<MultiLaurent> p;
    for (auto& e : elems)
        p.push_back(e.numerator());
    return rank_over_field(p);
}

}  // namespace shufalg

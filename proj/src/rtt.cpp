#include "shufalg/rtt.hpp"

#include "shufalg/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace shufalg {

namespace {

using RatRows = std::vector<std::vector<std::pair<int, Rational>>>;

void add_entry(ConstMatrix& m, int r, int c, const VRatFunc& x) {
    auto& e = m.entries[{r, c}];
    e += x;
    if (e.is_zero())
        m.entries.erase({r, c});
}

MultiLaurent u_poly() { return MultiLaurent::variable(uvar()); }

// R(u) on factors (a, b) of V^{(x)3}, a < b, as sparse rows
RatRows embed(const std::map<MatrixKey, Rational>& m, int N, int a, int b) {
    int dim = N * N * N;
    std::vector<std::vector<std::pair<int, Rational>>> by_pair(N * N);
    for (auto& [k, x] : m)
        by_pair[k.first].push_back({k.second, x});
    RatRows rows(dim);
    int c = 3 - a - b;
    int stride[3] = {N * N, N, 1};
    for (int r = 0; r < dim; ++r) {
        int idx[3] = {r / (N * N), (r / N) % N, r % N};
        for (auto& [col, x] : by_pair[idx[a] * N + idx[b]]) {
            int j = idx[c] * stride[c] + (col / N) * stride[a] + (col % N) * stride[b];
            rows[r].push_back({j, x});
        }
    }
    return rows;
}

RatRows multiply(const RatRows& A, const RatRows& B) {
    size_t dim = A.size();
    RatRows C(dim);
    std::vector<Rational> acc(dim);
    std::vector<char> touched(dim, 0);
    std::vector<int> list;
    for (size_t r = 0; r < dim; ++r) {
        list.clear();
        for (auto& [k, a] : A[r])
            for (auto& [j, b] : B[k]) {
                if (!touched[j]) {
                    touched[j] = 1;
                    acc[j] = 0;
                    list.push_back(j);
                }
                acc[j] += a * b;
            }
        std::sort(list.begin(), list.end());
        for (int j : list) {
            if (acc[j] != 0)
                C[r].push_back({j, acc[j]});
            touched[j] = 0;
        }
    }
    return C;
}

Rational random_rational(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 23);
    Rational r(num(gen), den(gen));
    r.canonicalize();
    return r;
}

}  // namespace

RMatrixContext::RMatrixContext(int n) : n_(n) {
    if (n < 2)
        throw std::invalid_argument("R-matrix needs n >= 2");
}

VRatFunc ConstMatrix::at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? VRatFunc() : it->second;
}

ConstMatrix ConstMatrix::operator*(const ConstMatrix& o) const {
    if (dim != o.dim)
        throw std::invalid_argument("matrix size mismatch");
    std::vector<std::vector<std::pair<int, const VRatFunc*>>> rows(dim);
    for (auto& [k, x] : o.entries)
        rows[k.first].push_back({k.second, &x});
    ConstMatrix r{dim, {}};
    for (auto& [k, x] : entries)
        for (auto& [c, y] : rows[k.second])
            add_entry(r, k.first, c, x * *y);
    return r;
}

ConstMatrix identity_matrix(int dim) {
    ConstMatrix m{dim, {}};
    for (int i = 0; i < dim; ++i)
        m.entries[{i, i}] = VRatFunc(1);
    return m;
}

PQR build_PQR(const RMatrixContext& ctx) {
    int N = ctx.N(), mid = ctx.n() + 1;
    int dim = N * N;
    PQR m{{dim, {}}, {dim, {}}, {dim, {}}};
    auto e = [&](ConstMatrix& M, int i, int j, int k, int l, const VRatFunc& x) {
        // e_ij (x) e_kl
        add_entry(M, ctx.pair_index(i, k), ctx.pair_index(j, l), x);
    };
    VRatFunc q = ctx.q(), qi = ctx.q().inverse(), dq = q - qi;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            e(m.P, i, j, j, i, 1);
            e(m.Q, ctx.prime(i), ctx.prime(j), i, j, ctx.q_bar(i, j));
        }
    for (int i = 1; i <= N; ++i) {
        e(m.R, i, i, i, i, i == mid ? VRatFunc(1) : q);
        if (i != mid)
            e(m.R, i, i, ctx.prime(i), ctx.prime(i), qi);
        for (int j = 1; j <= N; ++j) {
            if (j != i && j != ctx.prime(i))
                e(m.R, i, i, j, j, 1);
            if (i < j)
                e(m.R, i, j, j, i, dq);
            if (i > j)
                e(m.R, ctx.prime(i), ctx.prime(j), i, j, -dq * ctx.q_bar(i, j));
        }
    }
    return m;
}

SpectralMatrix build_Rtrig(const RMatrixContext& ctx) { return build_Rtrig(ctx, build_PQR(ctx)); }

SpectralMatrix build_Rtrig(const RMatrixContext& ctx, const PQR& pqr) {
    VRatFunc q = ctx.q(), qi = q.inverse(), dq = q - qi, xi = ctx.xi();
    MultiLaurent u = u_poly();
    MultiLaurent cR = (u - MultiLaurent(1)) * (u - MultiLaurent(xi));
    MultiLaurent cP = MultiLaurent(dq) * (u - MultiLaurent(xi));
    MultiLaurent cQ = MultiLaurent(-dq * xi) * (u - MultiLaurent(1));
    SpectralMatrix s;
    s.dim = pqr.P.dim;
    s.den = (u * q - MultiLaurent(qi)) * (u - MultiLaurent(xi));
    auto add = [&](const ConstMatrix& M, const MultiLaurent& c) {
        for (auto& [k, x] : M.entries) {
            auto& e = s.num[k];
            e += c * x;
            if (e.is_zero())
                s.num.erase(k);
        }
    };
    add(pqr.R, cR);
    add(pqr.P, cP);
    add(pqr.Q, cQ);
    return s;
}

ConstMatrix SpectralMatrix::at(const Rational& u) const {
    std::map<VarId, Rational> pt{{uvar(), u}};
    VRatFunc d = evaluate(den, pt);
    if (d.is_zero())
        throw std::domain_error("R(u) has a pole at u = " + u.get_str());
    ConstMatrix m{dim, {}};
    for (auto& [k, x] : num) {
        VRatFunc y = evaluate(x, pt) / d;
        if (!y.is_zero())
            m.entries[k] = y;
    }
    return m;
}

std::optional<std::map<MatrixKey, Rational>> SpectralMatrix::eval(const Rational& u, const Rational& v) const {
    std::map<VarId, Rational> pt{{uvar(), u}};
    Rational d = evaluate(den, pt, v);
    if (d == 0)
        return std::nullopt;
    std::map<MatrixKey, Rational> m;
    for (auto& [k, x] : num) {
        Rational y = evaluate(x, pt, v) / d;
        if (y != 0)
            m[k] = y;
    }
    return m;
}

bool YbeReport::ok() const {
    for (auto& t : samples)
        if (t.residual_nonzeros != 0)
            return false;
    return !samples.empty();
}

nlohmann::json YbeReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["mutated"] = mutated;
    j["ok"] = ok();
    j["elapsed"] = elapsed;
    auto& arr = j["samples"] = nlohmann::json::array();
    for (auto& t : samples)
        arr.push_back({{"u", t.u.get_str()},
                       {"w1", t.w1.get_str()},
                       {"w2", t.w2.get_str()},
                       {"v", t.v.get_str()},
                       {"resamples", t.resamples},
                       {"residual_nonzeros", t.residual_nonzeros},
                       {"residual_max", t.residual_max.get_str()}});
    return j;
}

YbeReport check_ybe(const RMatrixContext& ctx, int trials, uint64_t seed, std::optional<RMutation> mutation) {
    if (trials < 1)
        throw std::invalid_argument("trials must be positive");
    auto start = std::chrono::steady_clock::now();
    PQR pqr = build_PQR(ctx);
    if (mutation) {
        int dim = pqr.R.dim;
        if (mutation->row < 0 || mutation->row >= dim || mutation->col < 0 || mutation->col >= dim)
            throw std::invalid_argument("mutation entry out of range");
        add_entry(pqr.R, mutation->row, mutation->col, 1);
    }
    SpectralMatrix R = build_Rtrig(ctx, pqr);
    int N = ctx.N();
    YbeReport rep;
    rep.n = ctx.n();
    rep.trials = trials;
    rep.seed = seed;
    rep.mutated = mutation.has_value();
    rep.samples.resize(trials);
    parallel_for(trials, [&](size_t t) {
        std::seed_seq ss{seed, uint64_t(t)};
        std::mt19937_64 gen(ss);
        YbeTrial& tr = rep.samples[t];
        std::optional<std::map<MatrixKey, Rational>> a, b, c;
        for (int attempt = 0;; ++attempt) {
            tr.u = random_rational(gen);
            tr.w1 = random_rational(gen);
            tr.w2 = random_rational(gen);
            tr.v = random_rational(gen);
            tr.resamples = attempt;
            if (tr.u == 0 || tr.w1 == 0 || tr.w2 == 0 || tr.u == tr.w1 || tr.u == tr.w2 || tr.w1 == tr.w2 ||
                tr.v == 0 || tr.v * tr.v == 1)
                continue;
            a = R.eval(tr.u / tr.w1, tr.v);
            b = R.eval(tr.u / tr.w2, tr.v);
            c = R.eval(tr.w1 / tr.w2, tr.v);
            if (a && b && c)
                break;
        }
        RatRows r12 = embed(*a, N, 0, 1), r13 = embed(*b, N, 0, 2), r23 = embed(*c, N, 1, 2);
        RatRows lhs = multiply(multiply(r12, r13), r23);
        RatRows rhs = multiply(multiply(r23, r13), r12);
        tr.residual_nonzeros = 0;
        tr.residual_max = 0;
        for (size_t r = 0; r < lhs.size(); ++r) {
            std::map<int, Rational> diff;
            for (auto& [j, x] : lhs[r])
                diff[j] += x;
            for (auto& [j, x] : rhs[r])
                diff[j] -= x;
            for (auto& [j, x] : diff)
                if (x != 0) {
                    ++tr.residual_nonzeros;
                    if (abs(x) > tr.residual_max)
                        tr.residual_max = abs(x);
                }
        }
    });
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace shufalg

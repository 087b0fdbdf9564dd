#include "shufalg/rootsys.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace shufalg {

namespace {

Word range_word(int a, int b) {
    Word w;
    if (a <= b)
        for (int i = a; i <= b; ++i)
            w.push_back(i);
    else
        for (int i = a; i >= b; --i)
            w.push_back(i);
    return w;
}

std::vector<Word> lyndon_words(RootType kind, int n) {
    std::vector<Word> out;
    switch (kind) {
    case RootType::A:
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                out.push_back(range_word(i, j));
        break;
    case RootType::B:
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                out.push_back(range_word(i, j));
                if (i < j) {
                    Word w = range_word(i, n);
                    Word tail = range_word(n, j);
                    w.insert(w.end(), tail.begin(), tail.end());
                    out.push_back(w);
                }
            }
        break;
    case RootType::G:
        out = {{1}, {1, 2}, {1, 2, 1, 2, 2}, {1, 2, 2}, {1, 2, 2, 2}, {2}};
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ULaurent divide(const ULaurent& a, const ULaurent& b) {
    ULaurent q;
    if (!ULaurent::exact_div(a, b, q))
        throw std::logic_error("constant is not divisible");
    return q;
}

}  // namespace

RootSystem::RootSystem(RootType kind, int n) : kind_(kind), n_(n) {
    if (kind == RootType::G && n != 2)
        throw std::invalid_argument("G2 has rank 2");
    if (kind == RootType::B && n < 2)
        throw std::invalid_argument("B_n needs n >= 2");
    if (n < 1)
        throw std::invalid_argument("rank must be positive");
    cartan_.assign(n, std::vector<int>(n, 0));
    d_.assign(n, 1);
    for (int i = 0; i < n; ++i) {
        cartan_[i][i] = 2;
        if (i + 1 < n)
            cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    }
    if (kind == RootType::B) {
        for (int i = 0; i + 1 < n; ++i)
            d_[i] = 2;
        cartan_[n - 1][n - 2] = -2;
    } else if (kind == RootType::G) {
        d_ = {3, 1};
        cartan_[1][0] = -3;
    }
    for (auto& w : lyndon_words(kind, n)) {
        PosRoot r;
        r.word = w;
        r.nu.assign(n, 0);
        for (int c : w)
            ++r.nu[c - 1];
        r.height = int(w.size());
        r.index = int(roots_.size());
        roots_.push_back(std::move(r));
    }
}

RootSystem RootSystem::parse(const std::string& type, int n) {
    if (type.empty())
        throw std::invalid_argument("empty root system type");
    char c = char(std::toupper(static_cast<unsigned char>(type[0])));
    int rank = n;
    if (type.size() > 1)
        rank = std::stoi(type.substr(1));
    if (c == 'A')
        return A(rank);
    if (c == 'B')
        return B(rank);
    if (c == 'G') {
        if (rank != 0 && rank != 2)
            throw std::invalid_argument("G2 has rank 2");
        return G2();
    }
    throw std::invalid_argument("unknown root system type '" + type + "'");
}

std::string RootSystem::name() const {
    const char* l = kind_ == RootType::A ? "A" : kind_ == RootType::B ? "B" : "G";
    return l + std::to_string(n_);
}

int RootSystem::find(const Word& w) const {
    for (const auto& r : roots_)
        if (r.word == w)
            return r.index;
    if (w.size() == 2 && w[0] < w[1] && w[0] >= 1 && w[1] <= n_ && kind_ != RootType::G)
        return find(range_word(w[0], w[1]));
    if (kind_ == RootType::B && w.size() == 3 && w[1] == n_ && w[0] >= 1 && w[0] < w[2] &&
        w[2] <= n_) {
        Word full = range_word(w[0], n_);
        Word tail = range_word(n_, w[2]);
        full.insert(full.end(), tail.begin(), tail.end());
        for (const auto& r : roots_)
            if (r.word == full)
                return r.index;
    }
    return -1;
}

int RootSystem::simple(int i) const { return find({i}); }

int RootSystem::half_norm(int idx) const {
    const auto& nu = root(idx).nu;
    int s = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            s += nu[i - 1] * nu[j - 1] * pairing(i, j);
    return s / 2;
}

std::string RootSystem::root_name(int idx) const { return word_str(root(idx).word); }

int RootSystem::parse_root(const std::string& s) const {
    int idx = find(parse_word(s));
    if (idx < 0)
        throw std::invalid_argument("not a positive root of " + name() + ": " + s);
    return idx;
}

std::string word_str(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

Word parse_word(const std::string& s) {
    Word w;
    std::string t;
    for (char c : s)
        t += (std::isdigit(static_cast<unsigned char>(c)) || c == '-') ? c : ' ';
    std::istringstream in(t);
    int x;
    while (in >> x)
        w.push_back(x);
    if (w.empty())
        throw std::invalid_argument("empty root word: " + s);
    return w;
}

BShape b_shape(const RootSystem& rs, int idx) {
    if (rs.kind() != RootType::B)
        throw std::invalid_argument("b_shape needs type B");
    const Word& w = rs.root(idx).word;
    BShape sh;
    sh.i = w.front();
    int n = rs.rank();
    int peak = int(std::count(w.begin(), w.end(), n));
    sh.doubled = peak == 2;
    sh.j = w.back();
    return sh;
}

int kappa(const RootSystem& rs, int idx) {
    const PosRoot& r = rs.root(idx);
    switch (rs.kind()) {
    case RootType::A:
        return r.height - 1;
    case RootType::G:
        return r.word == Word{1, 2, 1, 2, 2} ? r.height + 1 : r.height - 1;
    case RootType::B: {
        BShape sh = b_shape(rs, idx);
        return sh.doubled ? r.height + 2 * (rs.rank() - sh.j) - 1 : r.height - 1;
    }
    }
    return 0;
}

ULaurent c_beta(const RootSystem& rs, int idx) {
    const PosRoot& r = rs.root(idx);
    switch (rs.kind()) {
    case RootType::A:
        return angle(1).pow(r.height - 1);
    case RootType::G: {
        ULaurent a2 = angle(2), a3 = angle(3), a4 = angle(4), b2 = qint(2);
        const Word& w = r.word;
        if (w.size() == 1)
            return 1;
        if (w == Word{1, 2})
            return a3;
        if (w == Word{1, 2, 2})
            return a3 * a2 * b2;
        if (w == Word{1, 2, 2, 2})
            return a3.pow(2) * a2 * b2;
        return a4 * a3.pow(3) * a2.pow(2) * b2;
    }
    case RootType::B: {
        BShape sh = b_shape(rs, idx);
        ULaurent c = angle(2).pow(r.height - 1);
        if (sh.doubled) {
            int n = rs.rank();
            for (int l = sh.j; l <= n - 1; ++l)
                c *= (ULaurent::var(-4 * n + 4 * l - 2) - 1) * (ULaurent::var(-4 * n + 4 * l + 6) - 1);
        }
        return c;
    }
    }
    return 1;
}

ULaurent c_tilde_beta(const RootSystem& rs, int idx) {
    ULaurent c = c_beta(rs, idx);
    const Word& w = rs.root(idx).word;
    switch (rs.kind()) {
    case RootType::A:
        return c;
    case RootType::G:
        if (w == Word{1, 2, 2})
            return divide(c, qfact(2));
        if (w == Word{1, 2, 2, 2} || w == Word{1, 2, 1, 2, 2})
            return divide(c, qfact(3));
        return c;
    case RootType::B:
        return b_shape(rs, idx).doubled ? divide(c, qint(2)) : c;
    }
    return c;
}

Grading grading_of(const RootSystem& rs, const KostantPartition& kp) {
    Grading k(rs.rank(), 0);
    for (int b = 0; b < int(kp.d.size()); ++b)
        for (int i = 0; i < rs.rank(); ++i)
            k[i] += kp.d[b] * rs.root(b).nu[i];
    return k;
}

bool kp_less(const KostantPartition& a, const KostantPartition& b) { return a.d < b.d; }

std::vector<KostantPartition> kostant_partitions(const RootSystem& rs, const Grading& k) {
    if (int(k.size()) != rs.rank())
        throw std::invalid_argument("grading has wrong length");
    for (int x : k)
        if (x < 0)
            throw std::invalid_argument("grading must be nonnegative");
    std::vector<KostantPartition> out;
    int m = rs.num_roots();
    KostantPartition cur{std::vector<int>(m, 0)};
    Grading rest = k;
    // roots taken from last to first in convex order, so that the first root is chosen last
    std::function<void(int)> rec = [&](int b) {
        if (b < 0) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
                out.push_back(cur);
            return;
        }
        const auto& nu = rs.root(b).nu;
        int mx = 1 << 30;
        for (int i = 0; i < rs.rank(); ++i)
            if (nu[i] > 0)
                mx = std::min(mx, rest[i] / nu[i]);
        for (int t = 0; t <= mx; ++t) {
            cur.d[b] = t;
            for (int i = 0; i < rs.rank(); ++i)
                rest[i] -= t * nu[i];
            rec(b - 1);
            for (int i = 0; i < rs.rank(); ++i)
                rest[i] += t * nu[i];
        }
        cur.d[b] = 0;
    };
    rec(m - 1);
    std::sort(out.begin(), out.end(), kp_less);
    return out;
}

KostantPartition single_root_partition(const RootSystem& rs, int idx, int mult) {
    KostantPartition kp{std::vector<int>(rs.num_roots(), 0)};
    kp.d.at(idx) = mult;
    return kp;
}

int kp_size(const KostantPartition& kp) {
    int s = 0;
    for (int x : kp.d)
        s += x;
    return s;
}

std::string kp_str(const RootSystem& rs, const KostantPartition& kp) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (int b = 0; b < int(kp.d.size()); ++b)
        if (kp.d[b])
            j[rs.root_name(b)] = kp.d[b];
    return j.dump();
}

KostantPartition parse_kp(const RootSystem& rs, const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw std::invalid_argument("Kostant partition must be a JSON object");
    KostantPartition kp{std::vector<int>(rs.num_roots(), 0)};
    for (auto& [key, val] : j.items()) {
        int m = val.get<int>();
        if (m < 0)
            throw std::invalid_argument("negative multiplicity in partition");
        kp.d[rs.parse_root(key)] += m;
    }
    return kp;
}

KostantPartition PBWDIndex::degree(const RootSystem& rs) const {
    KostantPartition kp{std::vector<int>(rs.num_roots(), 0)};
    for (auto& [key, m] : h)
        kp.d.at(key.first) += m;
    return kp;
}

Grading PBWDIndex::grading(const RootSystem& rs) const { return grading_of(rs, degree(rs)); }

std::vector<int> PBWDIndex::lambda(int idx) const {
    std::vector<int> out;
    for (auto& [key, m] : h)
        if (key.first == idx)
            out.insert(out.end(), m, key.second);
    return out;
}

std::vector<PBWDIndex> pbwd_indices(const RootSystem&, const KostantPartition& d, int lo,
                                    int hi) {
    if (lo > hi)
        throw std::invalid_argument("empty exponent window");
    std::vector<PBWDIndex> out;
    PBWDIndex cur;
    int m = int(d.d.size());
    // nondecreasing exponent lists per root, roots in convex order
    std::function<void(int, int, int)> rec = [&](int b, int left, int from) {
        if (b == m) {
            out.push_back(cur);
            return;
        }
        if (left == 0) {
            int nb = b + 1;
            rec(nb, nb < m ? d.d[nb] : 0, lo);
            return;
        }
        for (int s = from; s <= hi; ++s) {
            ++cur.h[{b, s}];
            rec(b, left - 1, s);
            if (--cur.h[{b, s}] == 0)
                cur.h.erase({b, s});
        }
    };
    if (m == 0)
        return {cur};
    rec(0, d.d[0], lo);
    return out;
}

std::vector<PBWDIndex> pbwd_indices(const RootSystem& rs, const Grading& k, int lo, int hi) {
    std::vector<PBWDIndex> out;
    for (auto& d : kostant_partitions(rs, k)) {
        auto part = pbwd_indices(rs, d, lo, hi);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string pbwd_str(const RootSystem& rs, const PBWDIndex& h) {
    std::string s;
    for (auto& [key, m] : h.h) {
        if (!s.empty())
            s += " ";
        s += "E" + rs.root_name(key.first) + "_" + std::to_string(key.second);
        if (m > 1)
            s += "^" + std::to_string(m);
    }
    return s.empty() ? "1" : s;
}

}  // namespace shufalg

#include "shufalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shufalg {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view s) {
    Rational q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    q.canonicalize();
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + std::string(s));
    return q;
}

// ---- ULaurent ----

ULaurent::ULaurent(long c) {
    if (c != 0)
        t_.emplace_back(0, Rational(c));
}

ULaurent::ULaurent(const Rational& c) {
    if (c != 0) {
        t_.emplace_back(0, c);
        t_.back().second.canonicalize();
    }
}

ULaurent ULaurent::monomial(const Rational& c, int e) {
    ULaurent r;
    if (c != 0) {
        r.t_.emplace_back(e, c);
        r.t_.back().second.canonicalize();
    }
    return r;
}

ULaurent ULaurent::from_terms(std::vector<Term> terms) {
    std::map<int, Rational> acc;
    for (auto& [e, c] : terms)
        acc[e] += c;
    ULaurent r;
    for (auto& [e, c] : acc)
        if (c != 0) {
            c.canonicalize();
            r.t_.emplace_back(e, c);
        }
    return r;
}

bool ULaurent::is_one() const {
    return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1;
}

bool ULaurent::is_integral() const {
    for (auto& [e, c] : t_)
        if (c.get_den() != 1)
            return false;
    return true;
}

Rational ULaurent::coeff(int e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != t_.end() && it->first == e)
        return it->second;
    return 0;
}

ULaurent ULaurent::shifted(int k) const {
    ULaurent r = *this;
    for (auto& t : r.t_)
        t.first += k;
    return r;
}

ULaurent ULaurent::pow(unsigned k) const {
    ULaurent r(1), b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

ULaurent ULaurent::dilate(int k) const {
    if (k == 0) {
        Rational s = 0;
        for (auto& t : t_)
            s += t.second;
        return ULaurent(s);
    }
    ULaurent r = *this;
    for (auto& t : r.t_)
        t.first *= k;
    if (k < 0)
        std::reverse(r.t_.begin(), r.t_.end());
    return r;
}

Rational ULaurent::eval(const Rational& x) const {
    if (t_.empty())
        return 0;
    if (x == 0) {
        if (t_.front().first < 0)
            throw std::domain_error("Laurent polynomial evaluated at 0");
        return coeff(0);
    }
    Rational r = 0;
    // Horner from the top, then rescale by the valuation
    int prev = t_.back().first;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        for (int e = prev; e > it->first; --e)
            r *= x;
        r += it->second;
        prev = it->first;
    }
    int v = t_.front().first;
    Rational p = 1;
    for (int i = 0; i < std::abs(v); ++i)
        p *= x;
    return v >= 0 ? Rational(r * p) : Rational(r / p);
}

ULaurent ULaurent::operator-() const {
    ULaurent r = *this;
    for (auto& t : r.t_)
        t.second = -t.second;
    return r;
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
    if (o.t_.empty())
        return *this;
    if (t_.empty())
        return *this = o;
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            out.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            out.push_back(o.t_[j++]);
        } else {
            Rational c = t_[i].second + o.t_[j].second;
            if (c != 0)
                out.emplace_back(t_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) {
    return *this += -o;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
    ULaurent r;
    if (a.t_.empty() || b.t_.empty())
        return r;
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const ULaurent& m = a.t_.size() == 1 ? a : b;
        const ULaurent& p = a.t_.size() == 1 ? b : a;
        r.t_.reserve(p.t_.size());
        for (auto& [e, c] : p.t_)
            r.t_.emplace_back(e + m.t_[0].first, c * m.t_[0].second);
        return r;
    }
    int lo = a.valuation() + b.valuation();
    int hi = a.degree() + b.degree();
    std::vector<Rational> acc(hi - lo + 1);
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_)
            acc[ea + eb - lo] += ca * cb;
    for (int k = 0; k <= hi - lo; ++k)
        if (acc[k] != 0)
            r.t_.emplace_back(k + lo, std::move(acc[k]));
    return r;
}

ULaurent& ULaurent::operator*=(const ULaurent& o) {
    return *this = *this * o;
}

ULaurent& ULaurent::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& t : t_)
        t.second *= c;
    return *this;
}

bool operator<(const ULaurent& a, const ULaurent& b) {
    return std::lexicographical_compare(
        a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first)
                return x.first < y.first;
            return cmp(x.second, y.second) < 0;
        });
}

namespace {

// dense polynomial, index = exponent
using Dense = std::vector<Rational>;

Dense to_dense(const ULaurent& a, int shift) {
    Dense d(a.degree() + shift + 1);
    for (auto& [e, c] : a.terms())
        d[e + shift] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0)
        d.pop_back();
}

// a = b*q + r, b nonzero
void divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
    trim(a);
    int db = int(b.size()) - 1;
    if (int(a.size()) - 1 < db) {
        q.clear();
        r = std::move(a);
        return;
    }
    q.assign(a.size() - db, Rational(0));
    Rational inv = 1 / b.back();
    for (int k = int(a.size()) - 1; k >= db; --k) {
        if (a[k] == 0)
            continue;
        Rational c = a[k] * inv;
        for (int j = 0; j <= db; ++j)
            a[k - db + j] -= c * b[j];
        q[k - db] = c;
    }
    a.resize(db);
    trim(a);
    r = std::move(a);
    trim(q);
}

ULaurent from_dense(const Dense& d, int shift) {
    std::vector<ULaurent::Term> t;
    for (size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0)
            t.emplace_back(int(k) - shift, d[k]);
    return ULaurent::from_terms(std::move(t));
}

}  // namespace

bool ULaurent::exact_div(const ULaurent& a, const ULaurent& b, ULaurent& q) {
    if (b.is_zero())
        throw std::domain_error("division by zero Laurent polynomial");
    if (a.is_zero()) {
        q = ULaurent();
        return true;
    }
    if (b.is_monomial()) {
        q = a.shifted(-b.valuation());
        q *= Rational(1 / b.lead());
        return true;
    }
    Dense da = to_dense(a, -a.valuation());
    Dense db = to_dense(b, -b.valuation());
    Dense dq, dr;
    divmod(std::move(da), db, dq, dr);
    if (!dr.empty())
        return false;
    q = from_dense(dq, 0).shifted(a.valuation() - b.valuation());
    return true;
}

ULaurent ULaurent::gcd(const ULaurent& a, const ULaurent& b) {
    if (a.is_zero() && b.is_zero())
        return ULaurent();
    Dense x = a.is_zero() ? Dense{} : to_dense(a, -a.valuation());
    Dense y = b.is_zero() ? Dense{} : to_dense(b, -b.valuation());
    trim(x);
    trim(y);
    while (!y.empty()) {
        Dense q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    Rational inv = 1 / x.back();
    for (auto& c : x)
        c *= inv;
    return from_dense(x, 0);
}

std::string ULaurent::str(std::string_view var) const {
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << var;
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

// ---- parser for expressions in one variable ----

namespace {

class CoefParser {
public:
    CoefParser(std::string_view s, std::string_view var) : s_(s), var_(var) {}

    VRatFunc run() {
        VRatFunc r = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("coefficient parse error at position " + std::to_string(pos_) +
                                    ": " + what + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
            ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    VRatFunc expr() {
        VRatFunc r;
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        r = term();
        if (neg)
            r = -r;
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    VRatFunc term() {
        VRatFunc r = unary();
        for (;;) {
            if (eat('*'))
                r *= unary();
            else if (eat('/'))
                r /= unary();
            else
                return r;
        }
    }
    VRatFunc unary() {
        if (eat('-'))
            return -unary();
        VRatFunc b = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            long e = integer();
            b = b.pow(int(neg ? -e : e));
        }
        return b;
    }
    long integer() {
        skip();
        size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
            ++pos_;
        if (st == pos_)
            fail("expected integer");
        return std::stol(std::string(s_.substr(st, pos_ - st)));
    }
    VRatFunc primary() {
        skip();
        if (eat('(')) {
            VRatFunc r = expr();
            if (!eat(')'))
                fail("expected ')'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                ++pos_;
            return VRatFunc(Rational(BigInt(std::string(s_.substr(st, pos_ - st)))));
        }
        if (s_.substr(pos_, var_.size()) == var_) {
            size_t after = pos_ + var_.size();
            if (after >= s_.size() || !std::isalnum((unsigned char)s_[after])) {
                pos_ = after;
                return VRatFunc::v(1);
            }
        }
        fail("expected number, '" + std::string(var_) + "' or '('");
    }

    std::string_view s_, var_;
    size_t pos_ = 0;
};

}  // namespace

ULaurent ULaurent::parse(std::string_view s, std::string_view var) {
    VRatFunc r = VRatFunc::parse(s, var);
    if (!r.is_laurent())
        throw std::invalid_argument("not a Laurent polynomial: " + std::string(s));
    return r.num();
}

// ---- VRatFunc ----

VRatFunc::VRatFunc(ULaurent n, ULaurent d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void VRatFunc::normalize() {
    if (den_.is_zero())
        throw std::domain_error("zero denominator in Q(v)");
    if (num_.is_zero()) {
        den_ = ULaurent(1);
        return;
    }
    if (den_.is_monomial()) {
        num_ = num_.shifted(-den_.valuation());
        num_ *= Rational(1 / den_.lead());
        den_ = ULaurent(1);
        return;
    }
    int sh = -den_.valuation();
    num_ = num_.shifted(sh);
    den_ = den_.shifted(sh);
    ULaurent g = ULaurent::gcd(num_, den_);
    if (!g.is_one()) {
        ULaurent q;
        ULaurent::exact_div(num_, g, q);
        num_ = std::move(q);
        ULaurent::exact_div(den_, g, q);
        den_ = std::move(q);
    }
    Rational lc = den_.lead();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

VRatFunc VRatFunc::inverse() const {
    if (num_.is_zero())
        throw std::domain_error("inverse of zero in Q(v)");
    return VRatFunc(den_, num_);
}

VRatFunc VRatFunc::pow(int k) const {
    if (k < 0)
        return inverse().pow(-k);
    if (den_.is_one())
        return VRatFunc(num_.pow(k));
    VRatFunc r;
    r.num_ = num_.pow(k);
    r.den_ = den_.pow(k);
    return r;
}

VRatFunc VRatFunc::dilate(int k) const {
    return VRatFunc(num_.dilate(k), den_.dilate(k));
}

Rational VRatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0)
        throw std::domain_error("evaluation at a pole of a Q(v) element");
    return num_.eval(x) / d;
}

VRatFunc VRatFunc::operator-() const {
    VRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

VRatFunc& VRatFunc::operator+=(const VRatFunc& o) {
    if (o.num_.is_zero())
        return *this;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

VRatFunc& VRatFunc::operator-=(const VRatFunc& o) {
    return *this += -o;
}

VRatFunc& VRatFunc::operator*=(const VRatFunc& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    if (num_.is_zero() || o.num_.is_zero()) {
        num_ = ULaurent();
        den_ = ULaurent(1);
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

VRatFunc& VRatFunc::operator/=(const VRatFunc& o) {
    if (o.num_.is_zero())
        throw std::domain_error("division by zero in Q(v)");
    if (o.is_monomial() && den_.is_one()) {
        num_ = num_.shifted(-o.num_.valuation());
        num_ *= Rational(1 / o.num_.lead());
        return *this;
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string VRatFunc::str(std::string_view var) const {
    if (den_.is_one())
        return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

VRatFunc VRatFunc::parse(std::string_view s, std::string_view var) {
    return CoefParser(s, var).run();
}

bool is_integral_laurent(const VRatFunc& r) {
    return r.den().is_one() && r.num().is_integral();
}

// ---- q-numbers ----

namespace {

void require_unit_monomial(const ULaurent& u) {
    if (!u.is_monomial() || abs(u.lead()) != 1)
        throw std::domain_error("q-number base must be a monomial +-v^z");
}

}  // namespace

ULaurent qint(int l, const ULaurent& u) {
    if (l < 0)
        throw std::domain_error("qint of negative integer");
    if (l == 0)
        return ULaurent();
    require_unit_monomial(u);
    if (l >= 2 && u.valuation() == 0)
        throw std::domain_error("qint base must not be constant for l >= 2");
    ULaurent r;
    for (int k = 0; k < l; ++k) {
        int p = l - 1 - 2 * k;
        r += p >= 0 ? u.pow(p) : u.pow(-p).dilate(-1);
    }
    return r;
}

ULaurent qfact(int l, const ULaurent& u) {
    if (l < 0)
        throw std::domain_error("qfact of negative integer");
    ULaurent r(1);
    for (int k = 2; k <= l; ++k)
        r *= qint(k, u);
    return r;
}

ULaurent qbinom(int l, int m, const ULaurent& u) {
    if (m < 0 || m > l)
        throw std::domain_error("qbinom requires 0 <= m <= l");
    ULaurent q;
    ULaurent::exact_div(qfact(l, u), qfact(m, u) * qfact(l - m, u), q);
    return q;
}

ULaurent angle(int m, const ULaurent& u) {
    require_unit_monomial(u);
    ULaurent up = u.pow(std::abs(m));
    ULaurent inv = up.dilate(-1);
    return m >= 0 ? up - inv : inv - up;
}

}  // namespace shufalg

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shufalg {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string rational_str(const Rational& q);
Rational parse_rational(std::string_view s);

// Laurent polynomial in one variable over Q, sparse, sorted by exponent.
class ULaurent {
public:
    using Term = std::pair<int, Rational>;

    ULaurent() = default;
    ULaurent(long c);
    ULaurent(const Rational& c);

    static ULaurent monomial(const Rational& c, int e);
    static ULaurent var(int e = 1) { return monomial(1, e); }
    static ULaurent from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_integral() const;
    bool is_polynomial() const { return t_.empty() || t_.front().first >= 0; }

    int valuation() const { return t_.front().first; }
    int degree() const { return t_.back().first; }
    const Rational& lead() const { return t_.back().second; }
    const Rational& trail() const { return t_.front().second; }
    Rational coeff(int e) const;
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    ULaurent shifted(int k) const;
    ULaurent pow(unsigned k) const;
    // v -> v^k
    ULaurent dilate(int k) const;
    // v -> v^-1
    ULaurent bar() const { return dilate(-1); }
    Rational eval(const Rational& x) const;

    ULaurent operator-() const;
    ULaurent& operator+=(const ULaurent& o);
    ULaurent& operator-=(const ULaurent& o);
    ULaurent& operator*=(const ULaurent& o);
    ULaurent& operator*=(const Rational& c);
    friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
    friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator*(ULaurent a, const Rational& c) { return a *= c; }
    friend ULaurent operator*(const Rational& c, ULaurent a) { return a *= c; }
    friend bool operator==(const ULaurent& a, const ULaurent& b) { return a.t_ == b.t_; }
    friend bool operator<(const ULaurent& a, const ULaurent& b);

    // q with a = b*q in Q[v,v^-1]; false when b does not divide a.
    static bool exact_div(const ULaurent& a, const ULaurent& b, ULaurent& q);
    // monic gcd of the polynomial parts (valuation 0)
    static ULaurent gcd(const ULaurent& a, const ULaurent& b);

    std::string str(std::string_view var = "v") const;
    static ULaurent parse(std::string_view s, std::string_view var = "v");

private:
    std::vector<Term> t_;
};

// Element of Q(v), kept as num/den with den of valuation 0, monic, coprime to num.
class VRatFunc {
public:
    VRatFunc() : den_(1) {}
    VRatFunc(long c) : num_(c), den_(1) {}
    VRatFunc(const Rational& c) : num_(c), den_(1) {}
    VRatFunc(const ULaurent& n) : num_(n), den_(1) {}
    VRatFunc(ULaurent n, ULaurent d);

    static VRatFunc v(int e = 1) { return VRatFunc(ULaurent::var(e)); }
    static VRatFunc monomial(const Rational& c, int e) { return VRatFunc(ULaurent::monomial(c, e)); }

    const ULaurent& num() const { return num_; }
    const ULaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    VRatFunc inverse() const;
    VRatFunc pow(int k) const;
    VRatFunc dilate(int k) const;
    Rational eval(const Rational& x) const;

    VRatFunc operator-() const;
    VRatFunc& operator+=(const VRatFunc& o);
    VRatFunc& operator-=(const VRatFunc& o);
    VRatFunc& operator*=(const VRatFunc& o);
    VRatFunc& operator/=(const VRatFunc& o);
    friend VRatFunc operator+(VRatFunc a, const VRatFunc& b) { return a += b; }
    friend VRatFunc operator-(VRatFunc a, const VRatFunc& b) { return a -= b; }
    friend VRatFunc operator*(VRatFunc a, const VRatFunc& b) { return a *= b; }
    friend VRatFunc operator/(VRatFunc a, const VRatFunc& b) { return a /= b; }
    friend bool operator==(const VRatFunc& a, const VRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(std::string_view var = "v") const;
    static VRatFunc parse(std::string_view s, std::string_view var = "v");

private:
    void normalize();
    ULaurent num_, den_;
};

bool is_integral_laurent(const VRatFunc& r);

// [l]_u for a monomial u = c*v^z
ULaurent qint(int l, const ULaurent& u = ULaurent::var());
ULaurent qfact(int l, const ULaurent& u = ULaurent::var());
ULaurent qbinom(int l, int m, const ULaurent& u = ULaurent::var());
// <m>_u = u^m - u^-m
ULaurent angle(int m, const ULaurent& u = ULaurent::var());

}  // namespace shufalg

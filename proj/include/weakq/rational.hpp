#pragma once

/// Exact arithmetic in the coefficient field: Laurent polynomials in q over
/// the rationals and their field of fractions, plus the q-combinatorics
/// ([m], [m]!, Gaussian binomials) built on top of them.
///
/// Everything here is exact; no floating point is used anywhere in the
/// engine. A RatFunc is kept in a canonical form (gcd-reduced, no common
/// q-power between numerator and denominator, denominator's lowest-degree
/// coefficient equal to 1) so that equality of values is equality of
/// representations.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace weakq {

using Rat = mpq_class;

inline Rat rat_pow(const Rat& v, long e) {
    if (e == 0) return Rat(1);
    Rat base = v;
    if (e < 0) {
        if (v == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        base = Rat(v.get_den(), v.get_num());
        base.canonicalize();
        e = -e;
    }
    Rat acc(1);
    Rat sq = base;
    while (e > 0) {
        if (e & 1) acc *= sq;
        if (e >>= 1) sq *= sq;
    }
    return acc;
}

/// Laurent polynomial in q with exact rational coefficients.
/// Zero is the empty coefficient vector; otherwise coeff_.front() and
/// coeff_.back() are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(const Rat& c) {
        if (c != 0) {
            low_ = 0;
            coeff_.push_back(c);
        }
    }
    LaurentPoly(int c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly q_power(int k, const Rat& c = Rat(1)) {
        LaurentPoly p;
        if (c != 0) {
            p.low_ = k;
            p.coeff_.push_back(c);
        }
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && low_ == 0 && coeff_[0] == 1; }
    bool is_monomial() const { return coeff_.size() == 1; }

    int low_degree() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero");
        return low_;
    }
    int high_degree() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero");
        return low_ + static_cast<int>(coeff_.size()) - 1;
    }

    Rat coeff(int k) const {
        if (is_zero() || k < low_ || k > high_degree()) return Rat(0);
        return coeff_[static_cast<size_t>(k - low_)];
    }

    /// Multiply by q^k.
    void shift(int k) {
        if (!is_zero()) low_ += k;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.low_, b.low_);
        int hi = std::max(a.high_degree(), b.high_degree());
        LaurentPoly r;
        r.low_ = lo;
        r.coeff_.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            r.coeff_[static_cast<size_t>(a.low_ - lo) + i] += a.coeff_[i];
        for (size_t i = 0; i < b.coeff_.size(); ++i)
            r.coeff_[static_cast<size_t>(b.low_ - lo) + i] += b.coeff_[i];
        r.trim();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        LaurentPoly r;
        r.low_ = a.low_ + b.low_;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        r.trim();
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    void scale(const Rat& c) {
        if (c == 0) {
            coeff_.clear();
            low_ = 0;
            return;
        }
        for (auto& x : coeff_) x *= c;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact evaluation at q := v.  v must be nonzero when negative powers occur.
    Rat eval(const Rat& v) const {
        Rat acc(0);
        for (size_t i = 0; i < coeff_.size(); ++i)
            acc += coeff_[i] * rat_pow(v, low_ + static_cast<long>(i));
        return acc;
    }

    /// Dense coefficients of q^low .. q^high, for gcd work.
    const std::vector<Rat>& coefficients() const { return coeff_; }

private:
    void trim() {
        size_t b = 0, e = coeff_.size();
        while (b < e && coeff_[b] == 0) ++b;
        while (e > b && coeff_[e - 1] == 0) --e;
        if (b == e) {
            coeff_.clear();
            low_ = 0;
            return;
        }
        if (b > 0 || e < coeff_.size()) {
            coeff_ = std::vector<Rat>(coeff_.begin() + static_cast<long>(b),
                                      coeff_.begin() + static_cast<long>(e));
            low_ += static_cast<int>(b);
        }
    }

    int low_ = 0;
    std::vector<Rat> coeff_;
};

namespace detail {

// Dense polynomial helpers (index = degree, no trailing zeros).
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_of(const LaurentPoly& f) {
    // caller guarantees f.low_degree() >= 0
    Poly p(static_cast<size_t>(f.high_degree()) + 1, Rat(0));
    for (int k = f.low_degree(); k <= f.high_degree(); ++k)
        p[static_cast<size_t>(k)] = f.coeff(k);
    return p;
}

inline LaurentPoly laurent_of(const Poly& p) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r += LaurentPoly::q_power(static_cast<int>(i), p[i]);
    return r;
}

/// In-place a := a mod b (b nonzero).
inline void poly_mod(Poly& a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly_mod(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}

/// Exact division a / b (remainder must be zero).
inline Poly poly_divexact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw std::logic_error("poly_divexact: inexact division");
    return q;
}

}  // namespace detail

/// Element of the field Q(q) in canonical form:
///   - numerator and denominator share no polynomial factor and no power of q,
///   - min(low(num), low(den)) == 0,
///   - the denominator's lowest-degree coefficient is 1.
class RatFunc {
public:
    RatFunc() = default;  // zero
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc q_power(int k) { return RatFunc(LaurentPoly::q_power(k)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ + b.num_;
            r.den_ = LaurentPoly(1);
            return r;
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            r.den_ = LaurentPoly(1);
            return r;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact evaluation at q := value.  Rejects q = 0; signals a vanishing
    /// denominator (e.g. at roots of unity) as a domain error.
    Rat eval_at(const Rat& value) const {
        if (value == 0) throw std::domain_error("eval_at: q = 0 is not admissible");
        if (is_zero()) return Rat(0);
        Rat d = den_.eval(value);
        if (d == 0) throw std::domain_error("eval_at: denominator vanishes at the given value");
        return num_.eval(value) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // Powers of q are units of the Laurent ring: strip them from both
        // sides and absorb the net power into the numerator.  Afterwards
        // the denominator is a polynomial with nonzero constant term.
        int net = num_.low_degree() - den_.low_degree();
        num_.shift(-num_.low_degree());
        den_.shift(-den_.low_degree());
        detail::Poly pn = detail::poly_of(num_);
        detail::Poly pd = detail::poly_of(den_);
        detail::Poly g = detail::poly_gcd(pn, pd);
        if (g.size() > 1) {
            num_ = detail::laurent_of(detail::poly_divexact(pn, g));
            den_ = detail::laurent_of(detail::poly_divexact(pd, g));
        }
        num_.shift(net);
        // Denominator's lowest-degree (constant) coefficient becomes 1.
        Rat c = den_.coeff(den_.low_degree());
        if (c != 1) {
            Rat inv = Rat(c.get_den(), c.get_num());
            inv.canonicalize();
            num_.scale(inv);
            den_.scale(inv);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
};

/// [m]_x = (x^m - x^-m)/(x - x^-1) with x = q^d.  Laurent after cancellation.
inline RatFunc q_int(int m, int d) {
    if (d < 1) throw std::domain_error("q_int: d must be positive");
    if (m == 0) return RatFunc();
    LaurentPoly num = LaurentPoly::q_power(d * m) - LaurentPoly::q_power(-d * m);
    LaurentPoly den = LaurentPoly::q_power(d) - LaurentPoly::q_power(-d);
    return RatFunc(num, den);
}

/// [m]!_x = [m]_x ... [1]_x, with [0]!_x = 1.
inline RatFunc q_factorial(int m, int d) {
    if (m < 0) throw std::domain_error("q_factorial: m must be nonnegative");
    RatFunc r(1);
    for (int k = 1; k <= m; ++k) r *= q_int(k, d);
    return r;
}

/// Gaussian binomial [m s]_x at x = q^d, for 0 <= s <= m.
inline RatFunc q_binomial(int m, int s, int d) {
    if (m < 0 || s < 0 || s > m) throw std::domain_error("q_binomial: need 0 <= s <= m");
    return q_factorial(m, d) / (q_factorial(s, d) * q_factorial(m - s, d));
}

}  // namespace weakq

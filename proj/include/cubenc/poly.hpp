// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/field.hpp>

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cubenc {

/// Dense univariate polynomial over GF(p), coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector; degree() is -1 then.
class Polynomial
{
public:
    explicit Polynomial(FieldPtr f) : f_(std::move(f)) {}

    Polynomial(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs))
    {
        trim();
    }

    static Polynomial zero(const FieldPtr& f) { return Polynomial(f); }
    static Polynomial constant(const Fe& c) { return Polynomial(c.field(), {c}); }
    static Polynomial one(const FieldPtr& f) { return constant(f->one()); }

    /// c * t^k
    static Polynomial monomial(const Fe& c, int k)
    {
        std::vector<Fe> v(static_cast<size_t>(k) + 1, c.field()->zero());
        v.back() = c;
        return Polynomial(c.field(), std::move(v));
    }

    /// From small integer coefficients, ascending degree.
    static Polynomial from_ints(const FieldPtr& f, std::initializer_list<long> cs)
    {
        std::vector<Fe> v;
        v.reserve(cs.size());
        for (long c : cs)
            v.push_back(f->fe(c));
        return Polynomial(f, std::move(v));
    }

    const FieldPtr& field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of t^k (zero beyond the stored range).
    Fe coeff(int k) const
    {
        if (k < 0 || k > degree())
            return f_->zero();
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Fe>& coeffs() const noexcept { return c_; }

    Fe leading() const
    {
        if (is_zero())
            raise(errc::bad_argument, "leading coefficient of the zero polynomial");
        return c_.back();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        check(a, b);
        std::vector<Fe> v(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(a.f_, std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        check(a, b);
        std::vector<Fe> v(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Polynomial(a.f_, std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        check(a, b);
        if (a.is_zero() || b.is_zero())
            return zero(a.f_);
        std::vector<Fe> v(a.c_.size() + b.c_.size() - 1, a.f_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(a.f_, std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Fe& s)
    {
        if (s.is_zero())
            return zero(a.f_);
        std::vector<Fe> v = a.c_;
        for (Fe& c : v)
            c = c * s;
        return Polynomial(a.f_, std::move(v));
    }
    Polynomial operator-() const { return *this * (-f_->one()); }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        check(a, b);
        if (a.c_.size() != b.c_.size())
            return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i])
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient and remainder with deg r < deg b; exact over the field.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b)
    {
        check(a, b);
        if (b.is_zero())
            raise(errc::division_by_zero, "polynomial division by zero");
        Polynomial r = a;
        Polynomial q = zero(a.f_);
        const Fe lb_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int k = r.degree() - b.degree();
            const Fe c = r.leading() * lb_inv;
            q = q + monomial(c, k);
            r = r - b * monomial(c, k);
        }
        return {std::move(q), std::move(r)};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b)
    {
        return divrem(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b)
    {
        return divrem(a, b).second;
    }

    Fe evaluate(const Fe& t) const
    {
        Fe acc = f_->zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return zero(f_);
        std::vector<Fe> v;
        v.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            v.push_back(mul_int(c_[i], static_cast<long>(i)));
        return Polynomial(f_, std::move(v));
    }

    Polynomial monic() const
    {
        if (is_zero())
            return *this;
        return *this * leading().inverse();
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial acc = one(f_);
        for (unsigned i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    /// Substitute t -> inner(t).
    Polynomial compose(const Polynomial& inner) const
    {
        Polynomial acc = zero(f_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * inner + constant(*it);
        return acc;
    }

private:
    static void check(const Polynomial& a, const Polynomial& b)
    {
        if (!same_field(a.f_, b.f_))
            raise(errc::modulus_mismatch, "polynomials over different fields");
    }
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    FieldPtr f_;
    std::vector<Fe> c_;
};

inline Polynomial mul_int(const Polynomial& a, long n)
{
    return a * a.field()->fe(n);
}

/// Monic greatest common divisor.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() && b.is_zero())
        raise(errc::both_zero, "gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

/// base^e mod m, square-and-multiply.
inline Polynomial pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& m)
{
    Polynomial acc = Polynomial::one(base.field());
    Polynomial b = base % m;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return acc % m;
    for (size_t i = bits; i-- > 0;) {
        acc = (acc * acc) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            acc = (acc * b) % m;
    }
    return acc;
}

namespace detail {

/// f(t) with only p-multiple exponents, rewritten as u with f = u(t^p).
/// Over the prime field a^(1/p) = a, so coefficients carry over.
inline Polynomial pth_contract(const Polynomial& f)
{
    const mpz_class& p = f.field()->modulus();
    const unsigned long pl = mpz_get_ui(p.get_mpz_t());
    std::vector<Fe> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(pl))
        v.push_back(f.coeff(i));
    return Polynomial(f.field(), std::move(v));
}

}  // namespace detail

/// Square-free decomposition: pairwise-coprime square-free monic g_i with
/// multiplicities e_i such that f = lc * prod g_i^{e_i}.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f0)
{
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = f0.monic();
    if (f.degree() <= 0)
        return out;
    const Polynomial fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_contract(f)))
            out.emplace_back(g, e * static_cast<int>(mpz_get_ui(f.field()->modulus().get_mpz_t())));
        return out;
    }
    Polynomial c = gcd(f, fp);
    Polynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0)
            out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_contract(c)))
            out.emplace_back(g, e * static_cast<int>(mpz_get_ui(f.field()->modulus().get_mpz_t())));
    }
    return out;
}

/// Monic product of the irreducible factors of odd multiplicity. Equals 1 iff
/// f is a square times a constant.
inline Polynomial odd_part(const Polynomial& f)
{
    if (f.is_zero())
        raise(errc::bad_argument, "odd_part of the zero polynomial");
    Polynomial out = Polynomial::one(f.field());
    for (const auto& [g, e] : squarefree_decomposition(f))
        if (e % 2 == 1)
            out = out * g;
    return out;
}

class NotASquare : public Error
{
public:
    NotASquare(const std::string& what, Polynomial witness)
      : Error(errc::not_a_square, what), witness_(std::move(witness))
    {}
    const Polynomial& witness() const noexcept { return witness_; }

private:
    Polynomial witness_;
};

/// Exact polynomial square root by coefficient matching from the top.
/// Canonical sign: of the two candidate results, returns the one whose leading
/// coefficient has the smaller integer representative.
inline Polynomial exact_sqrt(const Polynomial& p)
{
    const FieldPtr& f = p.field();
    if (p.is_zero())
        return p;
    const auto fail = [&](const char* why) -> Polynomial {
        throw NotASquare(std::string("not a polynomial square: ") + why, Polynomial::one(f));
    };
    if (p.degree() % 2 != 0)
        fail("odd degree");
    const int m = p.degree() / 2;
    const auto lc_root = square_root(p.leading());
    if (!lc_root)
        fail("leading coefficient is a non-residue");
    Fe s = *lc_root;
    const Fe neg = -s;
    if (neg.value() < s.value())
        s = neg;

    std::vector<Fe> r(static_cast<size_t>(m) + 1, f->zero());
    r[static_cast<size_t>(m)] = s;
    const Fe inv2s = mul_int(s, 2).inverse();
    for (int k = 1; k <= m; ++k) {
        // Match the coefficient of t^(2m-k).
        Fe acc = p.coeff(2 * m - k);
        for (int i = m - k + 1; i <= m; ++i) {
            const int j = 2 * m - k - i;
            if (j > m - k && j <= m)
                acc = acc - r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)];
        }
        r[static_cast<size_t>(m - k)] = acc * inv2s;
    }
    Polynomial root(f, std::move(r));
    if (root * root != p)
        fail("coefficient matching failed");
    return root;
}

namespace detail {

/// Distinct GF(p)-roots of a product of linear factors, by residue splitting.
inline void split_linear(const Polynomial& g, std::vector<mpz_class>& out)
{
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        const Fe r = -(g.coeff(0) / g.coeff(1));
        out.push_back(r.value());
        return;
    }
    const FieldPtr& f = g.field();
    const mpz_class e = (f->modulus() - 1) / 2;
    for (long c = 0;; ++c) {
        const Polynomial shifted = Polynomial::from_ints(f, {c, 1});
        const Polynomial h = pow_mod(shifted, e, g) - Polynomial::one(f);
        if (h.is_zero())
            continue;
        const Polynomial d = gcd(h, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, out);
            split_linear(g / d, out);
            return;
        }
    }
}

}  // namespace detail

/// All roots of f in GF(p), sorted ascending. Exhaustive scan for small p,
/// gcd with t^p - t plus residue splitting otherwise.
inline std::vector<Fe> find_roots(const Polynomial& f)
{
    if (f.is_zero())
        raise(errc::bad_argument, "roots of the zero polynomial");
    const FieldPtr& fld = f.field();
    std::vector<mpz_class> vals;
    if (f.degree() >= 1) {
        if (fld->modulus() <= 4096) {
            for (mpz_class x = 0; x < fld->modulus(); ++x)
                if (f.evaluate(fld->fe(x)).is_zero())
                    vals.push_back(x);
        } else {
            const Polynomial t = Polynomial::from_ints(fld, {0, 1});
            const Polynomial xp = pow_mod(t, fld->modulus(), f);
            const Polynomial diff = xp - t;
            const Polynomial lin = diff.is_zero() ? f.monic() : gcd(f, diff);
            detail::split_linear(lin, vals);
            std::sort(vals.begin(), vals.end());
        }
    }
    std::vector<Fe> out;
    out.reserve(vals.size());
    for (const mpz_class& v : vals)
        out.push_back(fld->fe(v));
    return out;
}

/// Reduced fraction of polynomials: monic denominator, gcd(num, den) = 1.
class RationalFunction
{
public:
    explicit RationalFunction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::one(num_.field()))
    {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            raise(errc::division_by_zero, "rational function with zero denominator");
        reduce();
    }

    static RationalFunction zero(const FieldPtr& f)
    {
        return RationalFunction(Polynomial::zero(f));
    }
    static RationalFunction constant(const Fe& c)
    {
        return RationalFunction(Polynomial::constant(c));
    }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero())
            raise(errc::division_by_zero, "division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b)
    {
        return !(a == b);
    }

    Fe evaluate(const Fe& t) const
    {
        const Fe d = den_.evaluate(t);
        if (d.is_zero())
            raise(errc::division_by_zero, "rational function pole at t = " + t.str());
        return num_.evaluate(t) / d;
    }

    /// Substitute t -> T(j)/K(j) and clear denominators.
    RationalFunction substitute(const Polynomial& T, const Polynomial& K) const
    {
        const int d = std::max(num_.degree(), den_.degree());
        const auto lift = [&](const Polynomial& p) {
            Polynomial acc = Polynomial::zero(p.field());
            for (int i = 0; i <= d; ++i)
                acc = acc + Polynomial::constant(p.coeff(i)) * T.pow(static_cast<unsigned>(i)) *
                                K.pow(static_cast<unsigned>(d - i));
            return acc;
        };
        return RationalFunction(lift(num_), lift(den_));
    }

private:
    void reduce()
    {
        if (num_.is_zero()) {
            den_ = Polynomial::one(num_.field());
            return;
        }
        const Polynomial g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        const Fe lc_inv = den_.leading().inverse();
        num_ = num_ * lc_inv;
        den_ = den_ * lc_inv;
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction mul_int(const RationalFunction& a, long n)
{
    return RationalFunction(mul_int(a.num(), n), a.den());
}

/// Exact square root in k(t): exact_sqrt(num*den)/den, reduced. On failure the
/// NotASquare witness is odd_part(num*den).
inline RationalFunction ratfun_sqrt(const RationalFunction& d)
{
    if (d.is_zero())
        return d;
    const Polynomial prod = d.num() * d.den();
    try {
        return RationalFunction(exact_sqrt(prod), d.den());
    } catch (const NotASquare& e) {
        throw NotASquare(e.what(), odd_part(prod));
    }
}

}  // namespace cubenc

// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cubenc {

enum class errc {
    not_prime,
    bad_characteristic,
    modulus_mismatch,
    division_by_zero,
    capability_error,
    not_a_square,
    both_zero,
    degenerate_direction,
    no_valid_span,
    not_on_curve,
    singular_curve,
    unknown_family,
    model_mismatch,
    icart_requires_nonzero_a,
    not_even,
    bad_witness,
    internal_bad_witness,
    singular_parameter_set,
    degenerate_family,
    bad_argument,
    parse_error,
};

class Error : public std::runtime_error
{
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what)
{
    throw Error(code, what);
}

/// Parses a decimal or 0x-prefixed hexadecimal integer (optional leading '-').
inline mpz_class parse_integer(const std::string& s)
{
    mpz_class v;
    if (s.empty() || v.set_str(s, 0) != 0)
        raise(errc::parse_error, "invalid integer literal: '" + s + "'");
    return v;
}

enum class FieldKind { encoding, geometry };

class PrimeField;
class Fe;
using FieldPtr = std::shared_ptr<const PrimeField>;

/// GF(p) for an odd prime p with p mod 3 != 0. Fields with p = 2 (mod 3) carry
/// the encoding capability (cubing is a bijection, inverted by one modexp);
/// fields with p = 1 (mod 3) carry the geometry capability (zeta3 exists).
class PrimeField : public std::enable_shared_from_this<PrimeField>
{
public:
    static FieldPtr make(const mpz_class& p)
    {
        if (p < 2)
            raise(errc::bad_characteristic, "modulus must be at least 5");
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)  // error < 2^-80
            raise(errc::not_prime, "modulus " + p.get_str() + " is not prime");
        if (p < 5 || p % 3 == 0)
            raise(errc::bad_characteristic, "characteristic must be a prime >= 5, not 3");
        const FieldKind kind = (p % 3 == 2) ? FieldKind::encoding : FieldKind::geometry;
        mpz_class e = 0;
        if (kind == FieldKind::encoding)
            e = (2 * p - 1) / 3;  // 3e = 1 (mod p-1)
        return FieldPtr(new PrimeField(p, kind, std::move(e)));
    }

    const mpz_class& modulus() const noexcept { return p_; }
    FieldKind kind() const noexcept { return kind_; }
    bool is_encoding() const noexcept { return kind_ == FieldKind::encoding; }
    bool is_geometry() const noexcept { return kind_ == FieldKind::geometry; }

    const mpz_class& cube_exponent() const
    {
        if (!is_encoding())
            raise(errc::capability_error, "cube-root exponent needs p = 2 (mod 3)");
        return cube_exp_;
    }

    inline Fe fe(const mpz_class& v) const;
    inline Fe fe(long v) const;
    inline Fe fe(const std::string& s) const;
    inline Fe zero() const;
    inline Fe one() const;

private:
    PrimeField(mpz_class p, FieldKind kind, mpz_class e)
      : p_(std::move(p)), kind_(kind), cube_exp_(std::move(e))
    {}

    mpz_class p_;
    FieldKind kind_;
    mpz_class cube_exp_;
};

inline FieldPtr make_field(const mpz_class& p)
{
    return PrimeField::make(p);
}

inline FieldPtr make_field(const std::string& s)
{
    return PrimeField::make(parse_integer(s));
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b)
{
    return a == b || (a && b && a->modulus() == b->modulus());
}

/// An element of GF(p). Carries its field; mixing fields is a hard error.
class Fe
{
public:
    Fe() = default;

    Fe(FieldPtr f, mpz_class v) : f_(std::move(f)), v_(std::move(v))
    {
        mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), f_->modulus().get_mpz_t());
    }

    const FieldPtr& field() const noexcept { return f_; }
    const mpz_class& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    std::string str() const { return v_.get_str(); }

    friend Fe operator+(const Fe& a, const Fe& b)
    {
        check(a, b);
        return Fe(a.f_, a.v_ + b.v_);
    }
    friend Fe operator-(const Fe& a, const Fe& b)
    {
        check(a, b);
        return Fe(a.f_, a.v_ - b.v_);
    }
    friend Fe operator*(const Fe& a, const Fe& b)
    {
        check(a, b);
        return Fe(a.f_, a.v_ * b.v_);
    }
    friend Fe operator/(const Fe& a, const Fe& b) { return a * b.inverse(); }
    Fe operator-() const { return Fe(f_, f_->modulus() - v_); }

    friend bool operator==(const Fe& a, const Fe& b)
    {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

    Fe inverse() const
    {
        if (is_zero())
            raise(errc::division_by_zero, "inverse of zero");
        mpz_class r;
        mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), f_->modulus().get_mpz_t());
        return Fe(f_, std::move(r));
    }

    /// x^e for e >= 0.
    Fe pow(const mpz_class& e) const
    {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), v_.get_mpz_t(), e.get_mpz_t(), f_->modulus().get_mpz_t());
        return Fe(f_, std::move(r));
    }
    Fe pow(unsigned long e) const
    {
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), v_.get_mpz_t(), e, f_->modulus().get_mpz_t());
        return Fe(f_, std::move(r));
    }
    Fe square() const { return *this * *this; }

private:
    static void check(const Fe& a, const Fe& b)
    {
        if (!a.f_ || !b.f_)
            raise(errc::bad_argument, "uninitialized field element");
        if (!same_field(a.f_, b.f_))
            raise(errc::modulus_mismatch, "elements of GF(" + a.f_->modulus().get_str() +
                                              ") and GF(" + b.f_->modulus().get_str() + ") mixed");
    }

    FieldPtr f_;
    mpz_class v_;
};

inline Fe PrimeField::fe(const mpz_class& v) const
{
    return Fe(shared_from_this(), v);
}
inline Fe PrimeField::fe(long v) const
{
    return Fe(shared_from_this(), mpz_class(v));
}
inline Fe PrimeField::fe(const std::string& s) const
{
    return Fe(shared_from_this(), parse_integer(s));
}
inline Fe PrimeField::zero() const
{
    return fe(0L);
}
inline Fe PrimeField::one() const
{
    return fe(1L);
}

inline Fe mul_int(const Fe& x, long n)
{
    return x * x.field()->fe(n);
}

/// The unique cube root in an encoding field: x^e with 3e = 1 (mod p-1).
inline Fe cube_root(const Fe& x)
{
    return x.pow(x.field()->cube_exponent());
}

/// Euler criterion; zero counts as a square.
inline bool is_square(const Fe& x)
{
    if (x.is_zero())
        return true;
    const mpz_class e = (x.field()->modulus() - 1) / 2;
    return x.pow(e).is_one();
}

/// A square root, if one exists. Shanks for p = 3 (mod 4), Tonelli-Shanks
/// otherwise. Which of the two roots comes back is unspecified.
inline std::optional<Fe> square_root(const Fe& x)
{
    if (x.is_zero())
        return x;
    const FieldPtr& f = x.field();
    const mpz_class& p = f->modulus();
    if (!x.pow(mpz_class((p - 1) / 2)).is_one())
        return std::nullopt;
    if (p % 4 == 3)
        return x.pow(mpz_class((p + 1) / 4));

    mpz_class q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Fe z = f->fe(2L);
    while (is_square(z))
        z = z + f->one();
    unsigned long m = s;
    Fe c = z.pow(q);
    Fe t = x.pow(q);
    Fe r = x.pow(mpz_class((q + 1) / 2));
    while (!t.is_one()) {
        Fe t2 = t.square();
        unsigned long i = 1;
        while (!t2.is_one()) {
            t2 = t2.square();
            ++i;
        }
        Fe b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = b.square();
        m = i;
        c = b.square();
        t = t * c;
        r = r * b;
    }
    return r;
}

/// The canonical primitive third root of unity in a geometry field: of the two
/// order-3 elements, the one with the smaller integer representative.
inline Fe zeta3(const FieldPtr& f)
{
    if (!f->is_geometry())
        raise(errc::capability_error, "zeta3 needs p = 1 (mod 3)");
    const mpz_class e = (f->modulus() - 1) / 3;
    Fe z = f->zero();
    for (long g = 2;; ++g) {
        z = f->fe(g).pow(e);
        if (!z.is_one())
            break;
    }
    const Fe z2 = z.square();
    return (z.value() <= z2.value()) ? z : z2;
}

/// sqrt(-3) = 2*zeta3 + 1 for the canonical zeta3.
inline Fe sqrt_minus3(const FieldPtr& f)
{
    return mul_int(zeta3(f), 2) + f->one();
}

}  // namespace cubenc

// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/cubenc.hpp>

namespace testsupport {

using namespace cubenc;

/// Deterministic randomness for reproducible trials.
struct Rng
{
    gmp_randclass gen{gmp_randinit_default};
    explicit Rng(unsigned long seed) { gen.seed(seed); }

    mpz_class below(const mpz_class& n) { return mpz_class(gen.get_z_range(n)); }
    mpz_class bits(unsigned long b) { return mpz_class(gen.get_z_bits(b)); }
    long below_long(long n)
    {
        return static_cast<long>(mpz_get_ui(below(mpz_class(n)).get_mpz_t()));
    }
};

/// A random prime of roughly `bits` bits with p = mod3 (mod 3).
inline mpz_class random_prime(Rng& r, unsigned long bits, int mod3)
{
    while (true) {
        mpz_class c = r.bits(bits);
        mpz_setbit(c.get_mpz_t(), bits - 1);
        mpz_class p;
        mpz_nextprime(p.get_mpz_t(), c.get_mpz_t());
        if (p >= 5 && p % 3 == mod3)
            return p;
    }
}

inline FieldPtr random_encoding_field(Rng& r, unsigned long bits)
{
    return make_field(random_prime(r, bits, 2));
}

inline FieldPtr random_geometry_field(Rng& r, unsigned long bits)
{
    return make_field(random_prime(r, bits, 1));
}

inline Fe random_fe(Rng& r, const FieldPtr& f)
{
    return f->fe(r.below(f->modulus()));
}

inline Fe random_nonzero(Rng& r, const FieldPtr& f)
{
    while (true) {
        Fe x = random_fe(r, f);
        if (!x.is_zero())
            return x;
    }
}

/// Random polynomial of exactly the given degree (or zero if deg < 0).
inline Polynomial random_poly(Rng& r, const FieldPtr& f, int deg)
{
    if (deg < 0)
        return Polynomial::zero(f);
    std::vector<Fe> cs;
    for (int i = 0; i < deg; ++i)
        cs.push_back(random_fe(r, f));
    cs.push_back(random_nonzero(r, f));
    return Polynomial(f, std::move(cs));
}

/// Extended-gcd modular inverse, independent of Fe::inverse.
inline mpz_class egcd_inverse(const mpz_class& x, const mpz_class& p)
{
    mpz_class old_r = x, rr = p, old_s = 1, s = 0;
    while (rr != 0) {
        const mpz_class q = old_r / rr;
        mpz_class tmp = old_r - q * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    mpz_class inv = old_s % p;
    if (inv < 0)
        inv += p;
    return inv;
}

/// Term-by-term evaluation of the dual sextic, independent of TrivariatePoly.
inline Fe dual_sextic_direct(const Fe& a, const Fe& u, const Fe& v, const Fe& w)
{
    const FieldPtr& f = a.field();
    const auto p2 = [](const Fe& x) { return x * x; };
    const auto p3 = [](const Fe& x) { return x * x * x; };
    const auto p4 = [&](const Fe& x) { return p2(x) * p2(x); };
    const auto p6 = [&](const Fe& x) { return p3(x) * p3(x); };
    const Fe a2 = a * a;
    const Fe a3 = a2 * a;
    const Fe a4 = a3 * a;
    return p6(u) + p6(v) + p6(w) -
           mul_int(a2 * (p4(u) * v * w + u * p4(v) * w + u * v * p4(w)), 6) +
           (mul_int(a3, 4) - f->fe(2L)) * (p3(u) * p3(v) + p3(u) * p3(w) + p3(v) * p3(w)) +
           (mul_int(a, 12) - mul_int(a4, 3)) * p2(u) * p2(v) * p2(w);
}

}  // namespace testsupport

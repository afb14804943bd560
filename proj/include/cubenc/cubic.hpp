// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/field.hpp>

#include <utility>

namespace cubenc {

/// h(x) = x^3 - s1 x^2 + s2 x - s3.
struct MonicCubic
{
    Fe s1, s2, s3;

    Fe evaluate(const Fe& x) const { return ((x - s1) * x + s2) * x - s3; }
    const FieldPtr& field() const noexcept { return s1.field(); }
};

/// A certified square root of the twisted discriminant of some cubic.
struct DeltaWitness
{
    Fe delta;
};

/// Twisted discriminant (the discriminant times -3) from the elementary
/// symmetric functions. Works over any commutative coefficient ring that
/// supports +, -, * and mul_int.
template <class K>
K twisted_discriminant_generic(const K& s1, const K& s2, const K& s3)
{
    const K s1s1 = s1 * s1;
    const K s2s2 = s2 * s2;
    return mul_int(s3 * s3, 81) - mul_int(s3 * s1 * s2, 54) - mul_int(s1s1 * s2s2, 3) +
           mul_int(s1s1 * s1 * s3, 12) + mul_int(s2s2 * s2, 12);
}

inline Fe twisted_discriminant(const MonicCubic& c)
{
    return twisted_discriminant_generic(c.s1, c.s2, c.s3);
}

/// Tartaglia-Cardan over an encoding field: given delta with
/// delta^2 = twisted_discriminant(c), returns one root of h.
///
/// R  = s1^3 + (27/2) s3 - (9/2) s1 s2 - (3/2) delta and rho = cbrt(R);
/// rho' = (s1^2 - 3 s2) / rho, falling back to cbrt(R') when rho = 0 (the
/// division degenerates to 0 = 0 there); the root is (s1 + rho + rho') / 3.
inline Fe solve_with_delta(const MonicCubic& c, const DeltaWitness& w)
{
    const FieldPtr& f = c.field();
    const Fe half = f->fe(2L).inverse();
    const Fe common = c.s1 * c.s1 * c.s1 + mul_int(c.s3, 27) * half - mul_int(c.s1 * c.s2, 9) * half;
    const Fe shift = mul_int(w.delta, 3) * half;
    const Fe big_r = common - shift;

    const Fe rho = cube_root(big_r);
    Fe rho_prime = f->zero();
    if (!rho.is_zero()) {
        rho_prime = (c.s1 * c.s1 - mul_int(c.s2, 3)) / rho;
    } else {
        const Fe big_r_prime = common + shift;
        rho_prime = cube_root(big_r_prime);
    }
    const Fe root = (c.s1 + rho + rho_prime) / f->fe(3L);
    if (!c.evaluate(root).is_zero())
        raise(errc::bad_witness, "delta is not a square root of the twisted discriminant");
    return root;
}

}  // namespace cubenc

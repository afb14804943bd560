// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/curves.hpp>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cubenc {

/// The nine flexes of the Hessian cubic and the corresponding cusps of its
/// dual sextic, over a geometry field with its canonical zeta3.
struct CuspTable
{
    HessianCurve curve;
    Fe zeta;
    std::vector<ProjectivePoint> flexes;
    std::vector<ProjectivePoint> cusps;
};

inline CuspTable build_cusp_table(const FieldPtr& f, const Fe& a)
{
    if (!f->is_geometry())
        raise(errc::capability_error, "cusp table needs p = 1 (mod 3)");
    HessianCurve curve(f, a);
    const Fe z = zeta3(f);
    const Fe z2 = z * z;
    const Fe o = f->one();
    const Fe n = -o;
    const Fe zero = f->zero();

    std::vector<ProjectivePoint> flexes = {
        {zero, n, o},  {n, o, zero},  {o, zero, n},
        {n, z, zero},  {z, zero, n},  {zero, n, z},
        {z, n, zero},  {n, zero, z},  {zero, z, n},
    };
    std::vector<ProjectivePoint> cusps = {
        {a, o, o},  {o, o, a},  {o, a, o},
        {z2, z, a}, {z, a, z2}, {a, z2, z},
        {z, z2, a}, {z2, a, z}, {a, z, z2},
    };
    for (size_t i = 0; i < 9; ++i) {
        if (!on_curve(curve, flexes[i]))
            raise(errc::internal_bad_witness, "flex row " + std::to_string(i) + " off the curve");
        if (gauss_map_hessian(curve, flexes[i]) != cusps[i])
            raise(errc::internal_bad_witness,
                  "cusp row " + std::to_string(i) + " is not the Gauss image of its flex");
    }
    return {std::move(curve), z, std::move(flexes), std::move(cusps)};
}

/// The dual sextic and its gradient vanish at every cusp.
inline bool verify_cusps_singular(const CuspTable& t)
{
    const Fe& a = t.curve.a();
    for (const ProjectivePoint& b : t.cusps) {
        if (!hessian_dual_eval(a, b).is_zero())
            return false;
        for (const Fe& d : hessian_dual_gradient(a, b))
            if (!d.is_zero())
                return false;
    }
    return true;
}

/// No three of the nine cusps are colinear. Expected to hold iff j(a) != 0.
inline bool verify_no_three_colinear(const CuspTable& t)
{
    const auto det = [](const ProjectivePoint& p, const ProjectivePoint& q,
                        const ProjectivePoint& r) {
        return p.X() * (q.Y() * r.Z() - q.Z() * r.Y()) - p.Y() * (q.X() * r.Z() - q.Z() * r.X()) +
               p.Z() * (q.X() * r.Y() - q.Y() * r.X());
    };
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = i + 1; j < 9; ++j)
            for (size_t k = j + 1; k < 9; ++k)
                if (det(t.cusps[i], t.cusps[j], t.cusps[k]).is_zero())
                    return false;
    return true;
}

namespace detail {

inline TrivariatePoly conic_from_coeffs(const FieldPtr& f, const Fe& cuu, const Fe& cvv,
                                        const Fe& cww, const Fe& cuv, const Fe& cuw, const Fe& cvw)
{
    TrivariatePoly g(f);
    g.set(2, 0, 0, cuu);
    g.set(0, 2, 0, cvv);
    g.set(0, 0, 2, cww);
    g.set(1, 1, 0, cuv);
    g.set(1, 0, 1, cuw);
    g.set(0, 1, 1, cvw);
    return g;
}

/// The four displayed coconic configurations with their stated cusp indices,
/// built for a given choice of the cube root of unity.
inline std::vector<std::pair<TrivariatePoly, std::vector<int>>> seed_conics(const CuspTable& t,
                                                                            const Fe& z)
{
    const FieldPtr& f = t.curve.field();
    const Fe& a = t.curve.a();
    const Fe z2 = z * z;
    const Fe o = f->one();
    const Fe zero = f->zero();
    std::vector<std::pair<TrivariatePoly, std::vector<int>>> out;
    // U W - a V^2
    out.emplace_back(conic_from_coeffs(f, zero, -a, zero, zero, o, zero),
                     std::vector<int>{0, 1, 3, 5, 6, 8});
    // U^2 + V^2 + W^2 + (a+1)(UV + UW + VW)
    const Fe a1 = a + o;
    out.emplace_back(conic_from_coeffs(f, o, o, o, a1, a1, a1), std::vector<int>{3, 4, 5, 6, 7, 8});
    // U^2 + z V^2 + z^2 W^2 + (a+1)(z^2 UV + z UW + VW)
    out.emplace_back(conic_from_coeffs(f, o, z, z2, a1 * z2, a1 * z, a1),
                     std::vector<int>{0, 1, 2, 3, 4, 5});
    // z U^2 + V^2 + z W^2 + (a+z^2)(UV + z^2 UW + VW)
    const Fe az2 = a + z2;
    out.emplace_back(conic_from_coeffs(f, z, o, z, az2, az2 * z2, az2),
                     std::vector<int>{0, 1, 4, 5, 6, 7});
    return out;
}

inline std::vector<std::array<int, 3>> all_permutations3()
{
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

}  // namespace detail

/// Each of the four displayed conics hits exactly its stated six cusps, and
/// the full family of twelve (the coordinate S3-orbit together with the
/// zeta3-conjugate seeds, whose orbit completes the fourth type) passes
/// through exactly six cusps each.
inline bool verify_coconic(const CuspTable& t)
{
    const auto seeds = detail::seed_conics(t, t.zeta);
    for (const auto& [conic, indices] : seeds)
        for (int idx : indices)
            if (!conic.evaluate(t.cusps[static_cast<size_t>(idx)].X(),
                                t.cusps[static_cast<size_t>(idx)].Y(),
                                t.cusps[static_cast<size_t>(idx)].Z())
                     .is_zero())
                return false;

    std::vector<TrivariatePoly> orbit;
    for (const Fe& z : {t.zeta, t.zeta * t.zeta}) {
        for (const auto& [conic, indices] : detail::seed_conics(t, z)) {
            for (const auto& perm : detail::all_permutations3()) {
                const TrivariatePoly g = conic.permuted(perm).scaled_canonical();
                bool seen = false;
                for (const TrivariatePoly& h : orbit)
                    if (h == g)
                        seen = true;
                if (!seen)
                    orbit.push_back(g);
            }
        }
    }
    if (orbit.size() != 12)
        return false;
    for (const TrivariatePoly& g : orbit) {
        int hits = 0;
        for (const ProjectivePoint& b : t.cusps)
            if (g.evaluate(b.X(), b.Y(), b.Z()).is_zero())
                ++hits;
        if (hits != 6)
            return false;
    }
    return true;
}

/// a(U^3 + V^3 + W^3) = (a^3 + 2) UVW passes through all nine cusps.
inline bool verify_nine_point_cubic(const CuspTable& t)
{
    const FieldPtr& f = t.curve.field();
    const Fe& a = t.curve.a();
    TrivariatePoly g(f);
    g.set(3, 0, 0, a);
    g.set(0, 3, 0, a);
    g.set(0, 0, 3, a);
    g.set(1, 1, 1, -(a * a * a + f->fe(2L)));
    for (const ProjectivePoint& b : t.cusps)
        if (!g.evaluate(b.X(), b.Y(), b.Z()).is_zero())
            return false;
    return true;
}

namespace detail {

/// The rational quartic with an order-6 contact at the cusp over (0:-1:1).
inline TrivariatePoly hessian_quartic_form(const Fe& a)
{
    const FieldPtr& f = a.field();
    const Fe a2 = a * a;
    const Fe a3 = a2 * a;
    const Fe a4 = a3 * a;
    TrivariatePoly q(f);
    q.set(4, 0, 0, f->one());
    q.set(0, 4, 0, a);
    q.set(0, 0, 4, a);
    const Fe m2a = mul_int(-a, 2);
    q.set(3, 1, 0, m2a);
    q.set(3, 0, 1, m2a);
    q.set(0, 3, 1, m2a);
    q.set(0, 1, 3, m2a);
    const Fe ma31 = -(a3 + f->one());
    q.set(1, 3, 0, ma31);
    q.set(1, 0, 3, ma31);
    const Fe c3a2 = mul_int(a2, 3);
    q.set(2, 2, 0, c3a2);
    q.set(2, 0, 2, c3a2);
    q.set(0, 2, 2, a4 + mul_int(a, 2));
    const Fe c1a3 = f->one() - a3;
    q.set(1, 2, 1, c1a3);
    q.set(1, 1, 2, c1a3);
    return q;
}

/// Its parameterization by the lines through that cusp.
inline std::array<Polynomial, 3> hessian_quartic_param(const Fe& a)
{
    const FieldPtr& f = a.field();
    const Fe a2 = a * a;
    const Fe a3 = a2 * a;
    const Fe a4 = a3 * a;
    const Fe o = f->one();
    const Polynomial u(f, {a, mul_int(-a2, 2), a3 + f->fe(2L), mul_int(-a, 2), a2});
    const Polynomial v(f, {o, mul_int(-a, 2), mul_int(a2, 3), o - mul_int(a3, 3), a4});
    const Polynomial w(f, {o, mul_int(-a, 2), mul_int(a2, 3), -(a3 + o), a});
    return {u, v, w};
}

/// The expected degree-24 intersection divisor as a product of factors:
/// t^6 (t+1)^2 (t^2-t+1)^2 (at-2)^2 ((a+1)t-1)^2
/// ((a^2-a+1)t^2 + (1-2a)t + 1)^2 (a^2 t^2 + 1 - at)^2.
inline Polynomial hessian_quartic_expected_product(const Fe& a)
{
    const FieldPtr& f = a.field();
    const Fe o = f->one();
    const Fe a2 = a * a;
    Polynomial acc = Polynomial::monomial(o, 6);
    const auto sq = [](const Polynomial& p) { return p * p; };
    acc = acc * sq(Polynomial(f, {o, o}));
    acc = acc * sq(Polynomial(f, {o, -o, o}));
    acc = acc * sq(Polynomial(f, {f->fe(-2L), a}));
    acc = acc * sq(Polynomial(f, {-o, a + o}));
    acc = acc * sq(Polynomial(f, {o, o - mul_int(a, 2), a2 - a + o}));
    acc = acc * sq(Polynomial(f, {o, -a, a2}));
    return acc;
}

}  // namespace detail

struct HessianQuarticReport
{
    bool cusps_on_quartic = false;
    bool param_satisfies_quartic = false;
    bool dual_composition_proportional = false;
    Fe ratio;

    bool all() const
    {
        return cusps_on_quartic && param_satisfies_quartic && dual_composition_proportional;
    }
};

/// Three exact checks at a fixed a with j(a) != 0: the quartic passes through
/// all nine cusps, its parameterization satisfies it identically, and its
/// composition into the dual sextic equals the expected degree-24 product up
/// to a nonzero constant (recorded in `ratio`).
inline HessianQuarticReport verify_hessian_quartic(const CuspTable& t)
{
    const Fe& a = t.curve.a();
    HessianQuarticReport rep;
    const TrivariatePoly q = detail::hessian_quartic_form(a);

    rep.cusps_on_quartic = true;
    for (const ProjectivePoint& b : t.cusps)
        if (!q.evaluate(b.X(), b.Y(), b.Z()).is_zero())
            rep.cusps_on_quartic = false;

    const auto [u, v, w] = detail::hessian_quartic_param(a);
    rep.param_satisfies_quartic = q.compose(u, v, w).is_zero();

    const Polynomial composed = hessian_dual_form(a).compose(u, v, w);
    const Polynomial expected = detail::hessian_quartic_expected_product(a);
    if (!composed.is_zero() && composed.degree() == expected.degree()) {
        const Fe k = composed.leading() / expected.leading();
        rep.ratio = k;
        rep.dual_composition_proportional = !k.is_zero() && (expected * k == composed);
    }
    return rep;
}

struct WeierstrassQuarticReport
{
    bool scaled_vanishes = false;    // U^4 - 3a V^4 + 6 U V^2 W composes to zero
    bool plain_vanishes = false;     // U^4 - 3 V^4 + 6 U V^2 W composes to zero
    bool residual_matches = false;   // plain residual equals 3888 (a-1) t^12
    Polynomial plain_residual;
};

/// Composes both quartic candidates with the parameterization
/// (6t^2, 6t^3, 3a t^4 - 1) and reports which vanishes. For a != 1 only the
/// a-scaled candidate does; the plain one leaves the residual 3888(a-1) t^12.
inline WeierstrassQuarticReport verify_weierstrass_quartic(const WeierstrassCurve& c)
{
    const FieldPtr& f = c.field();
    const Fe& a = c.a();
    if (a.is_zero())
        raise(errc::bad_argument, "quartic check needs a != 0");
    const Polynomial u = Polynomial::monomial(f->fe(6L), 2);
    const Polynomial v = Polynomial::monomial(f->fe(6L), 3);
    const Polynomial w = Polynomial::monomial(mul_int(a, 3), 4) - Polynomial::one(f);

    const auto candidate = [&](const Fe& v4coeff) {
        TrivariatePoly q(f);
        q.set(4, 0, 0, f->one());
        q.set(0, 4, 0, v4coeff);
        q.set(1, 2, 1, f->fe(6L));
        return q;
    };
    const Polynomial scaled = candidate(mul_int(-a, 3)).compose(u, v, w);
    const Polynomial plain = candidate(f->fe(-3L)).compose(u, v, w);

    WeierstrassQuarticReport rep{scaled.is_zero(), plain.is_zero(), false, plain};
    const Polynomial expected = Polynomial::monomial(mul_int(a - f->one(), 3888), 12);
    rep.residual_matches = (plain == expected);
    return rep;
}

struct CheckResult
{
    int trials = 0;
    int failures = 0;
    std::string witness;
};

using SelftestReport = std::map<std::string, CheckResult>;

/// Randomized certification of the flex-geometry identities over a geometry
/// field: `trials` random a with a^3 != 1 and j(a) != 0, plus the colinearity
/// negative controls at a = 0 and a = -2. Deterministic for a fixed seed.
inline SelftestReport run_selftest(const FieldPtr& f, int trials, unsigned long seed)
{
    if (!f->is_geometry())
        raise(errc::capability_error, "selftest needs p = 1 (mod 3)");
    SelftestReport rep;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);

    const auto record = [&](const std::string& name, bool ok, const Fe& a) {
        CheckResult& r = rep[name];
        ++r.trials;
        if (!ok) {
            ++r.failures;
            if (r.witness.empty())
                r.witness = "a = " + a.str();
        }
    };

    for (int trial = 0; trial < trials; ++trial) {
        Fe a = f->zero();
        while (true) {
            a = f->fe(mpz_class(rng.get_z_range(f->modulus())));
            if ((a * a * a).is_one())
                continue;
            if (hessian_j_invariant(a).is_zero())
                continue;
            break;
        }
        const CuspTable table = build_cusp_table(f, a);
        record("cusps_singular", verify_cusps_singular(table), a);
        record("no_three_colinear", verify_no_three_colinear(table), a);
        record("coconic", verify_coconic(table), a);
        record("nine_point_cubic", verify_nine_point_cubic(table), a);
        const HessianQuarticReport hq = verify_hessian_quartic(table);
        record("hessian_quartic_cusps", hq.cusps_on_quartic, a);
        record("hessian_quartic_param", hq.param_satisfies_quartic, a);
        record("hessian_quartic_factorization", hq.dual_composition_proportional, a);

        // Weierstrass quartic discrepancy: the scaled candidate vanishes, the
        // plain one leaves 3888(a-1) t^12.
        Fe wa = f->zero();
        Fe wb = f->zero();
        while (true) {
            wa = f->fe(mpz_class(rng.get_z_range(f->modulus())));
            wb = f->fe(mpz_class(rng.get_z_range(f->modulus())));
            if (wa.is_zero())
                continue;
            if ((mul_int(wa * wa * wa, 4) + mul_int(wb * wb, 27)).is_zero())
                continue;
            break;
        }
        const WeierstrassQuarticReport wq =
            verify_weierstrass_quartic(WeierstrassCurve(f, wa, wb));
        record("weierstrass_quartic_discrepancy",
               wq.scaled_vanishes && wq.residual_matches &&
                   (wq.plain_vanishes == wa.is_one()),
               wa);
    }

    for (long ctrl : {0L, -2L}) {
        const Fe a = f->fe(ctrl);
        if ((a * a * a).is_one())
            continue;
        const CuspTable table = build_cusp_table(f, a);
        record("colinear_negative_control", !verify_no_three_colinear(table), a);
    }
    return rep;
}

}  // namespace cubenc

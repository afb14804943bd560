// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/curves.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cubenc {

enum class Model { weierstrass, hessian };

inline Model curve_model(const Curve& c)
{
    return std::holds_alternative<WeierstrassCurve>(c) ? Model::weierstrass : Model::hessian;
}

inline std::string model_name(Model m)
{
    return m == Model::weierstrass ? "weierstrass" : "hessian";
}

/// A line family U(t)X + V(t)Y + W(t)Z = 0. The optional spanning pair pins
/// the parameterization of each line (and with it the exact shape of the
/// restricted cubic); without it a deterministic schedule picks one.
struct LineFamily
{
    std::string name;
    Model model;
    Polynomial U, V, W;
    std::optional<std::array<Polynomial, 3>> span_base;
    std::optional<std::array<Polynomial, 3>> span_dir;

    LineFamily(std::string nm, Model m, Polynomial u, Polynomial v, Polynomial w)
      : name(std::move(nm)), model(m), U(std::move(u)), V(std::move(v)), W(std::move(w))
    {
        if (U.is_zero() && V.is_zero() && W.is_zero())
            raise(errc::bad_argument, "family with identically zero line");
    }
};

class NotEven : public Error
{
public:
    NotEven(const std::string& what, Polynomial witness)
      : Error(errc::not_even, what), witness_(std::move(witness))
    {}
    const Polynomial& witness() const noexcept { return witness_; }

private:
    Polynomial witness_;
};

namespace detail {

using PolyTriple = std::array<Polynomial, 3>;

inline bool triple_is_zero(const PolyTriple& t)
{
    return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
}

inline PolyTriple cross(const PolyTriple& a, const PolyTriple& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Polynomial eval_form_on_triple(const TrivariatePoly& form, const PolyTriple& t)
{
    return form.compose(t[0], t[1], t[2]);
}

inline Polynomial gcd_nonzero(const std::vector<Polynomial>& ps)
{
    Polynomial g = Polynomial::zero(ps.front().field());
    for (const Polynomial& p : ps) {
        if (p.is_zero())
            continue;
        g = g.is_zero() ? p.monic() : gcd(g, p);
    }
    return g;
}

inline Polynomial squarefree_part(const Polynomial& p)
{
    Polynomial out = Polynomial::one(p.field());
    for (const auto& [g, e] : squarefree_decomposition(p))
        out = out * g;
    return out;
}

/// Interpolate the coefficients of a cubic from its values at i = 0, 1, 2, 3.
template <class R>
std::array<R, 4> cubic_coeffs_from_samples(const FieldPtr& f, const std::array<R, 4>& g)
{
    const auto comb = [&](long k0, long k1, long k2, long k3, long den) {
        R s = mul_int(g[0], k0) + mul_int(g[1], k1) + mul_int(g[2], k2) + mul_int(g[3], k3);
        return s * f->fe(den).inverse();
    };
    return {g[0], comb(-11, 18, -9, 2, 6), comb(2, -5, 4, -1, 2), comb(-1, 3, -3, 1, 6)};
}

struct SymbolicRestriction
{
    RationalFunction s1, s2, s3;
    Polynomial lead;  // F(P1)(t), the leading coefficient before normalization
    PolyTriple base;  // P0(t)
    PolyTriple dir;   // P1(t)
};

/// Pick a spanning pair for the moving line out of its coordinate-axis
/// intersections, with a shear fallback until the direction point avoids the
/// curve identically. The candidate order starts with the pair behind the
/// x = X/Z elimination, so y-symmetric models keep their customary cubics.
inline std::pair<PolyTriple, PolyTriple> derive_span(const TrivariatePoly& form,
                                                     const Polynomial& U, const Polynomial& V,
                                                     const Polynomial& W)
{
    const FieldPtr& f = U.field();
    const Polynomial z = Polynomial::zero(f);
    std::vector<PolyTriple> cands;
    for (const PolyTriple& c : {PolyTriple{z, -W, V}, PolyTriple{V, -U, z}, PolyTriple{-W, z, U}})
        if (!triple_is_zero(c))
            cands.push_back(c);
    const PolyTriple base = cands.front();
    for (size_t k = 1; k < cands.size(); ++k) {
        if (triple_is_zero(cross(base, cands[k])))
            continue;
        for (long lam = 0; lam <= 4; ++lam) {
            const Fe l = f->fe(lam);
            const PolyTriple dir{cands[k][0] + base[0] * l, cands[k][1] + base[1] * l,
                                 cands[k][2] + base[2] * l};
            if (!eval_form_on_triple(form, dir).is_zero())
                return {base, dir};
        }
    }
    raise(errc::degenerate_family, "the whole line family degenerates on the curve");
}

inline SymbolicRestriction restrict_family(const Curve& curve, const LineFamily& fam)
{
    if (curve_model(curve) != fam.model)
        raise(errc::model_mismatch, "family model does not match the curve model");
    const FieldPtr& f = curve_field(curve);
    const TrivariatePoly form = curve_form(curve);

    // Content is tolerated in family specs; it scales the line equation only.
    Polynomial u = fam.U, v = fam.V, w = fam.W;
    const Polynomial content = gcd_nonzero({u, v, w});
    if (content.degree() > 0) {
        u = u / content;
        v = v / content;
        w = w / content;
    }

    PolyTriple base{Polynomial::zero(f), Polynomial::zero(f), Polynomial::zero(f)};
    PolyTriple dir = base;
    if (fam.span_base && fam.span_dir) {
        base = *fam.span_base;
        dir = *fam.span_dir;
        for (const PolyTriple* t : {&base, &dir}) {
            if (triple_is_zero(*t))
                raise(errc::bad_argument, "explicit spanning point is identically zero");
            const Polynomial incidence =
                fam.U * (*t)[0] + fam.V * (*t)[1] + fam.W * (*t)[2];
            if (!incidence.is_zero())
                raise(errc::bad_argument, "explicit spanning point is off the line family");
        }
        if (triple_is_zero(cross(base, dir)))
            raise(errc::bad_argument, "explicit spanning points are proportional");
        if (eval_form_on_triple(form, dir).is_zero())
            raise(errc::degenerate_family, "explicit direction point lies on the curve");
    } else {
        std::tie(base, dir) = derive_span(form, u, v, w);
    }

    // Sample the restriction at i = 0..3 and interpolate the cubic in i.
    std::array<Polynomial, 4> samples{Polynomial::zero(f), Polynomial::zero(f),
                                      Polynomial::zero(f), Polynomial::zero(f)};
    for (long i = 0; i <= 3; ++i) {
        const Fe fi = f->fe(i);
        samples[static_cast<size_t>(i)] = form.compose(base[0] + dir[0] * fi, base[1] + dir[1] * fi,
                                                       base[2] + dir[2] * fi);
    }
    const auto c = cubic_coeffs_from_samples<Polynomial>(f, samples);
    const Polynomial& lead = c[3];
    if (lead.is_zero())
        raise(errc::degenerate_family, "restriction degenerate for all t");
    return {RationalFunction(-c[2], lead), RationalFunction(c[1], lead),
            RationalFunction(-c[0], lead), lead, base, dir};
}

}  // namespace detail

/// Twisted discriminant of the line-curve intersection, as an exact rational
/// function of the family parameter.
inline RationalFunction family_discriminant(const Curve& curve, const LineFamily& fam)
{
    const auto r = detail::restrict_family(curve, fam);
    return twisted_discriminant_generic(r.s1, r.s2, r.s3);
}

/// A compiled encoder: the symbolic cubic, its certified square root delta,
/// the spanning pair, and the finite set of excluded parameters.
class EncoderPlan
{
public:
    Curve curve;
    RationalFunction s1, s2, s3;
    RationalFunction disc;
    RationalFunction delta;
    detail::PolyTriple base;
    detail::PolyTriple dir;
    Polynomial lead;
    std::vector<mpz_class> excluded;  // sorted
    ProjectivePoint designated;

    bool is_excluded(const Fe& t) const
    {
        return std::binary_search(excluded.begin(), excluded.end(), t.value());
    }

    EncoderPlan with_flipped_delta() const
    {
        EncoderPlan p = *this;
        p.delta = -p.delta;
        return p;
    }

    ProjectivePoint encode(const Fe& t) const
    {
        if (is_excluded(t))
            return designated;
        const MonicCubic cubic{s1.evaluate(t), s2.evaluate(t), s3.evaluate(t)};
        Fe root = t.field()->zero();
        try {
            root = solve_with_delta(cubic, DeltaWitness{delta.evaluate(t)});
        } catch (const Error& e) {
            if (e.code() == errc::bad_witness)
                raise(errc::internal_bad_witness, "plan invariant broken while encoding");
            throw;
        }
        const ProjectivePoint pt(base[0].evaluate(t) + root * dir[0].evaluate(t),
                                 base[1].evaluate(t) + root * dir[1].evaluate(t),
                                 base[2].evaluate(t) + root * dir[2].evaluate(t));
        if (!on_curve(curve, pt))
            raise(errc::internal_bad_witness, "encoded point is off the curve");
        return pt;
    }
};

inline ProjectivePoint designated_point(const Curve& curve)
{
    const FieldPtr& f = curve_field(curve);
    if (curve_model(curve) == Model::weierstrass)
        return {f->zero(), f->one(), f->zero()};
    return {f->zero(), -f->one(), f->one()};
}

/// Certify that the family meets the dual curve with even multiplicities and
/// compile the encoder. Fails with the odd-multiplicity witness otherwise.
inline EncoderPlan certify_even(const Curve& curve, const LineFamily& fam)
{
    const FieldPtr& f = curve_field(curve);
    if (!f->is_encoding())
        raise(errc::capability_error, "encoder plans need an encoding field (p = 2 mod 3)");

    const auto r = detail::restrict_family(curve, fam);
    const RationalFunction disc = twisted_discriminant_generic(r.s1, r.s2, r.s3);
    RationalFunction delta = RationalFunction::zero(f);
    try {
        delta = ratfun_sqrt(disc);
    } catch (const NotASquare& e) {
        throw NotEven("family '" + fam.name + "' has odd intersection multiplicities",
                      e.witness());
    }

    // Excluded parameters: zeros of the leading coefficient (all specialization
    // denominators divide it), plus degeneracies of the spanning pair.
    std::vector<Polynomial> bad = {r.lead,
                                   r.s1.den(),
                                   r.s2.den(),
                                   r.s3.den(),
                                   disc.den(),
                                   delta.den(),
                                   detail::gcd_nonzero({r.base[0], r.base[1], r.base[2]}),
                                   detail::gcd_nonzero({r.dir[0], r.dir[1], r.dir[2]})};
    const auto minors = detail::cross(r.base, r.dir);
    bad.push_back(detail::gcd_nonzero({minors[0], minors[1], minors[2]}));

    Polynomial sieve = Polynomial::one(f);
    for (const Polynomial& p : bad) {
        if (p.degree() <= 0)
            continue;
        const Polynomial sf = detail::squarefree_part(p);
        sieve = sieve * (sf / gcd(sieve, sf));
    }
    std::vector<mpz_class> excluded;
    if (sieve.degree() > 0)
        for (const Fe& root : find_roots(sieve))
            excluded.push_back(root.value());
    std::sort(excluded.begin(), excluded.end());

    return EncoderPlan{curve,  r.s1, r.s2,          r.s3,
                       disc,   delta, r.base,        r.dir,
                       r.lead, std::move(excluded), designated_point(curve)};
}

/// The built-in families. Spanning pairs for farashahi/icart/pencil-raw follow
/// the coordinate-elimination parameterizations their closed forms use, so the
/// compiled delta matches the closed-form one exactly.
inline LineFamily builtin_family(const std::string& name, const Curve& curve)
{
    const FieldPtr& f = curve_field(curve);
    const Model model = curve_model(curve);
    const auto require_model = [&](Model m) {
        if (model != m)
            raise(errc::model_mismatch,
                  "family '" + name + "' needs a " + model_name(m) + " curve");
    };
    const Polynomial z = Polynomial::zero(f);

    if (name == "farashahi") {
        require_model(Model::hessian);
        const Fe a = std::get<HessianCurve>(curve).a();
        LineFamily fam(name, model, Polynomial::one(f), Polynomial::from_ints(f, {0, -1}),
                       Polynomial::monomial(a, 2));
        fam.span_base = {{-fam.W, z, fam.U}};
        fam.span_dir = {{-fam.V, fam.U, z}};
        return fam;
    }
    if (name == "icart") {
        require_model(Model::weierstrass);
        const auto& wc = std::get<WeierstrassCurve>(curve);
        if (wc.a().is_zero())
            raise(errc::icart_requires_nonzero_a, "icart needs a != 0");
        LineFamily fam(name, model, Polynomial::monomial(f->fe(6L), 2),
                       Polynomial::monomial(f->fe(6L), 3),
                       Polynomial::monomial(mul_int(wc.a(), 3), 4) - Polynomial::one(f));
        fam.span_base = {{z, -fam.W, fam.V}};
        fam.span_dir = {{fam.V, -fam.U, z}};
        return fam;
    }
    if (name == "pencil-raw") {
        require_model(Model::hessian);
        const Fe a = std::get<HessianCurve>(curve).a();
        LineFamily fam(name, model, Polynomial(f, {f->one(), a}), Polynomial(f, {a, f->one()}),
                       Polynomial(f, {f->one(), f->one()}));
        fam.span_base = {{Polynomial::one(f), Polynomial::from_ints(f, {0, -1}),
                          Polynomial::from_ints(f, {-1, 1})}};
        fam.span_dir = {{Polynomial::one(f), Polynomial::one(f),
                         Polynomial::constant(-(a + f->one()))}};
        return fam;
    }
    if (name == "octic") {
        require_model(Model::weierstrass);
        const auto& wc = std::get<WeierstrassCurve>(curve);
        const Fe a = wc.a(), b = wc.b();
        const Fe c4_27 = f->fe(4L) / f->fe(27L);
        const Fe c2a_27 = mul_int(a, 2) / f->fe(27L);
        const Fe c1_81 = f->one() / f->fe(81L);
        Polynomial u = Polynomial::monomial(mul_int(a, 4), 6) + Polynomial::monomial(c4_27, 2);
        Polynomial v = u * Polynomial::from_ints(f, {0, 1});
        Polynomial w = Polynomial::monomial(a * a, 8) + Polynomial::monomial(mul_int(b, 4), 6) +
                       Polynomial::monomial(c2a_27, 4) + Polynomial::constant(c1_81);
        return LineFamily(name, model, std::move(u), std::move(v), std::move(w));
    }
    raise(errc::unknown_family, "unknown family '" + name + "'");
}

/// Substitute the family parameter t := T(j)/K(j) and clear denominators.
inline LineFamily compose_family_parameter(const LineFamily& fam, const Polynomial& T,
                                           const Polynomial& K)
{
    const int d = std::max({fam.U.degree(), fam.V.degree(), fam.W.degree(), 0});
    const auto lift = [&](const Polynomial& p) {
        Polynomial acc = Polynomial::zero(p.field());
        for (int i = 0; i <= d; ++i)
            acc = acc + Polynomial::constant(p.coeff(i)) * T.pow(static_cast<unsigned>(i)) *
                            K.pow(static_cast<unsigned>(d - i));
        return acc;
    };
    return LineFamily(fam.name + "-reparam", fam.model, lift(fam.U), lift(fam.V), lift(fam.W));
}

/// x = 1/(3t^2) + cbrt(a^2 t^2/4 - 1/(108 t^6) - b - a/(6 t^2)),
/// y = 1/(6t^3) - at/2 - x/t; t = 0 encodes to the flex at infinity.
inline ProjectivePoint icart_encode(const WeierstrassCurve& c, const Fe& t)
{
    const FieldPtr& f = c.field();
    if (c.a().is_zero())
        raise(errc::icart_requires_nonzero_a, "icart needs a != 0");
    if (t.is_zero())
        return c.infinity();
    const Fe t2 = t * t;
    const Fe t3 = t2 * t;
    const Fe t6 = t3 * t3;
    const Fe arg = c.a() * c.a() * t2 / f->fe(4L) - f->one() / (mul_int(t6, 108)) - c.b() -
                   c.a() / mul_int(t2, 6);
    const Fe x = f->one() / mul_int(t2, 3) + cube_root(arg);
    const Fe y = f->one() / mul_int(t3, 6) - c.a() * t / f->fe(2L) - x / t;
    return {x, y, f->one()};
}

/// (-t*c : at - c : 1) with c = cbrt((a^3 t^3 + 1)/(t^3 + 1)); parameters with
/// t^3 = -1 encode to the flex (0:-1:1).
inline ProjectivePoint farashahi_encode(const HessianCurve& h, const Fe& t)
{
    const FieldPtr& f = h.field();
    const Fe t3 = t * t * t;
    const Fe den = t3 + f->one();
    if (den.is_zero())
        return h.flex();
    const Fe a3 = h.a() * h.a() * h.a();
    const Fe c = cube_root((a3 * t3 + f->one()) / den);
    return {-(t * c), h.a() * t - c, f->one()};
}

/// Conic parameterization behind the pencil reparameterization:
/// S(j) = 3j^2 - 2(a+2)^3 j + 3(a+2)^3 (a^2+a+1),
/// T(j) = j (j - 3(a^2+a+1)),
/// K(j) = (a^2+a+1) ((a+2)^3 - 3j).
inline std::array<Fe, 3> conic_param(const Fe& a, const Fe& j)
{
    const FieldPtr& f = a.field();
    const Fe A = a * a + a + f->one();
    if (A.is_zero())
        raise(errc::singular_parameter_set, "a^2 + a + 1 = 0");
    const Fe ap2 = a + f->fe(2L);
    const Fe c = ap2 * ap2 * ap2;
    const Fe S = mul_int(j * j, 3) - mul_int(c * j, 2) + mul_int(c * A, 3);
    const Fe T = j * (j - mul_int(A, 3));
    const Fe K = A * (c - mul_int(j, 3));
    return {S, T, K};
}

/// Line-pencil encoder through the cusps over B0 and B2: substitutes
/// t = T(j)/K(j), solves the restricted cubic with the closed-form delta, and
/// maps back through i -> (i+1 : i-t : t-1-(a+1)i). Parameters with
/// 3j = (a+2)^3 encode to the flex (0:-1:1).
inline ProjectivePoint pencil_encode(const HessianCurve& h, const Fe& j)
{
    const FieldPtr& f = h.field();
    const Fe& a = h.a();
    const Fe A = a * a + a + f->one();
    if (A.is_zero())
        raise(errc::singular_parameter_set, "a^2 + a + 1 = 0");
    const Fe ap2 = a + f->fe(2L);
    const Fe c = ap2 * ap2 * ap2;
    const Fe kfac = c - mul_int(j, 3);
    if (kfac.is_zero())
        return h.flex();

    const Fe t = j * (j - mul_int(A, 3)) / (A * kfac);
    const Fe s2 = mul_int(t * ap2, 3) / A;
    const Fe s3 = mul_int(t * (t - f->one()), 3) / A;
    const Fe S = mul_int(j * j, 3) - mul_int(c * j, 2) + mul_int(c * A, 3);
    const Fe delta = mul_int(j * S * (mul_int(A, 3) - j), 9) / (kfac * kfac * A * A * A);

    const Fe i = solve_with_delta(MonicCubic{f->zero(), s2, s3}, DeltaWitness{delta});
    return {i + f->one(), i - t, t - f->one() - (a + f->one()) * i};
}

/// Big-endian bytes reduced mod p. Non-uniform; demonstration quality only.
inline Fe message_to_parameter(const std::vector<unsigned char>& bytes, const FieldPtr& f)
{
    if (bytes.empty())
        return f->zero();
    mpz_class z;
    mpz_import(z.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    return f->fe(z);
}

}  // namespace cubenc

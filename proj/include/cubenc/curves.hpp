// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/cubic.hpp>
#include <cubenc/trivariate.hpp>

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cubenc {

/// [X:Y:Z], not all zero. Equality is up to a nonzero scalar; the normalized
/// form has its last nonzero coordinate equal to 1.
class ProjectivePoint
{
public:
    ProjectivePoint(Fe x, Fe y, Fe z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z))
    {
        if (x_.is_zero() && y_.is_zero() && z_.is_zero())
            raise(errc::bad_argument, "projective point (0:0:0)");
    }

    const Fe& X() const noexcept { return x_; }
    const Fe& Y() const noexcept { return y_; }
    const Fe& Z() const noexcept { return z_; }
    const FieldPtr& field() const noexcept { return x_.field(); }

    ProjectivePoint normalized() const
    {
        const Fe& pivot = !z_.is_zero() ? z_ : (!y_.is_zero() ? y_ : x_);
        const Fe inv = pivot.inverse();
        return ProjectivePoint(x_ * inv, y_ * inv, z_ * inv);
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b)
    {
        // All 2x2 minors of the coordinate matrix vanish.
        return (a.x_ * b.y_ == a.y_ * b.x_) && (a.x_ * b.z_ == a.z_ * b.x_) &&
               (a.y_ * b.z_ == a.z_ * b.y_);
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b)
    {
        return !(a == b);
    }

    std::string str() const
    {
        return "(" + x_.str() + ":" + y_.str() + ":" + z_.str() + ")";
    }

private:
    Fe x_, y_, z_;
};

/// Y^2 Z = X^3 + a X Z^2 + b Z^3, smooth (4a^3 + 27b^2 != 0).
class WeierstrassCurve
{
public:
    WeierstrassCurve(FieldPtr f, Fe a, Fe b) : f_(std::move(f)), a_(std::move(a)), b_(std::move(b))
    {
        if ((mul_int(a_ * a_ * a_, 4) + mul_int(b_ * b_, 27)).is_zero())
            raise(errc::singular_curve, "4a^3 + 27b^2 = 0");
    }

    const FieldPtr& field() const noexcept { return f_; }
    const Fe& a() const noexcept { return a_; }
    const Fe& b() const noexcept { return b_; }

    TrivariatePoly form() const
    {
        TrivariatePoly g(f_);
        g.set(0, 2, 1, f_->one());
        g.set(3, 0, 0, -f_->one());
        g.set(1, 0, 2, -a_);
        g.set(0, 0, 3, -b_);
        return g;
    }

    Fe eval_form(const ProjectivePoint& p) const
    {
        return p.Y() * p.Y() * p.Z() - p.X() * p.X() * p.X() - a_ * p.X() * p.Z() * p.Z() -
               b_ * p.Z() * p.Z() * p.Z();
    }

    ProjectivePoint infinity() const { return {f_->zero(), f_->one(), f_->zero()}; }

private:
    FieldPtr f_;
    Fe a_, b_;
};

/// X^3 + Y^3 + Z^3 = 3a X Y Z, smooth (a^3 != 1).
class HessianCurve
{
public:
    HessianCurve(FieldPtr f, Fe a) : f_(std::move(f)), a_(std::move(a))
    {
        if ((a_ * a_ * a_).is_one())
            raise(errc::singular_curve, "a^3 = 1");
    }

    const FieldPtr& field() const noexcept { return f_; }
    const Fe& a() const noexcept { return a_; }

    TrivariatePoly form() const
    {
        TrivariatePoly g(f_);
        g.set(3, 0, 0, f_->one());
        g.set(0, 3, 0, f_->one());
        g.set(0, 0, 3, f_->one());
        g.set(1, 1, 1, mul_int(-a_, 3));
        return g;
    }

    Fe eval_form(const ProjectivePoint& p) const
    {
        const auto cube = [](const Fe& v) { return v * v * v; };
        return cube(p.X()) + cube(p.Y()) + cube(p.Z()) - mul_int(a_ * p.X() * p.Y() * p.Z(), 3);
    }

    /// The distinguished rational flex (0:-1:1).
    ProjectivePoint flex() const { return {f_->zero(), -f_->one(), f_->one()}; }

private:
    FieldPtr f_;
    Fe a_;
};

using Curve = std::variant<WeierstrassCurve, HessianCurve>;

inline const FieldPtr& curve_field(const Curve& c)
{
    return std::visit([](const auto& m) -> const FieldPtr& { return m.field(); }, c);
}

inline TrivariatePoly curve_form(const Curve& c)
{
    return std::visit([](const auto& m) { return m.form(); }, c);
}

inline Fe eval_curve_form(const Curve& c, const ProjectivePoint& p)
{
    return std::visit([&](const auto& m) { return m.eval_form(p); }, c);
}

inline bool on_curve(const Curve& c, const ProjectivePoint& p)
{
    return eval_curve_form(c, p).is_zero();
}
inline bool on_curve(const WeierstrassCurve& c, const ProjectivePoint& p)
{
    return c.eval_form(p).is_zero();
}
inline bool on_curve(const HessianCurve& c, const ProjectivePoint& p)
{
    return c.eval_form(p).is_zero();
}

/// Dual-plane point of the tangent line at P: (X^2-aYZ : Y^2-aXZ : Z^2-aXY).
inline ProjectivePoint gauss_map_hessian(const HessianCurve& c, const ProjectivePoint& p)
{
    if (!on_curve(c, p))
        raise(errc::not_on_curve, "Gauss map of a point off the curve");
    const Fe& a = c.a();
    return {p.X() * p.X() - a * p.Y() * p.Z(), p.Y() * p.Y() - a * p.X() * p.Z(),
            p.Z() * p.Z() - a * p.X() * p.Y()};
}

/// The sextic dual of the Hessian cubic with parameter a.
inline TrivariatePoly hessian_dual_form(const Fe& a)
{
    const FieldPtr& f = a.field();
    TrivariatePoly g(f);
    const Fe one = f->one();
    const Fe m6a2 = mul_int(-(a * a), 6);
    const Fe c33 = mul_int(a * a * a, 4) - f->fe(2L);
    const Fe c222 = mul_int(a, 12) - mul_int((a * a) * (a * a), 3);
    g.set(6, 0, 0, one);
    g.set(0, 6, 0, one);
    g.set(0, 0, 6, one);
    g.set(4, 1, 1, m6a2);
    g.set(1, 4, 1, m6a2);
    g.set(1, 1, 4, m6a2);
    g.set(3, 3, 0, c33);
    g.set(3, 0, 3, c33);
    g.set(0, 3, 3, c33);
    g.set(2, 2, 2, c222);
    return g;
}

inline Fe hessian_dual_eval(const Fe& a, const ProjectivePoint& q)
{
    return hessian_dual_form(a).evaluate(q.X(), q.Y(), q.Z());
}

inline std::array<Fe, 3> hessian_dual_gradient(const Fe& a, const ProjectivePoint& q)
{
    const TrivariatePoly g = hessian_dual_form(a);
    return {g.partial(0).evaluate(q.X(), q.Y(), q.Z()),
            g.partial(1).evaluate(q.X(), q.Y(), q.Z()),
            g.partial(2).evaluate(q.X(), q.Y(), q.Z())};
}

/// j(a) = 27 a^3 (a+2)^3 (a^2-2a+4)^3 / ((a-1)^3 (a^2+a+1)^3).
inline Fe hessian_j_invariant(const Fe& a)
{
    const FieldPtr& f = a.field();
    const auto cb = [](const Fe& v) { return v * v * v; };
    if (cb(a).is_one())
        raise(errc::singular_curve, "j-invariant of a singular Hessian cubic");
    const Fe a2 = a * a;
    const Fe t1 = a + f->fe(2L);
    const Fe t2 = a2 - mul_int(a, 2) + f->fe(4L);
    const Fe d1 = a - f->one();
    const Fe d2 = a2 + a + f->one();
    return mul_int(cb(a) * cb(t1) * cb(t2), 27) / (cb(d1) * cb(d2));
}

/// The line {P0 + i*P1} with projectively distinct base and direction points.
struct BackMap
{
    ProjectivePoint p0;
    ProjectivePoint p1;

    BackMap(ProjectivePoint base, ProjectivePoint dir) : p0(std::move(base)), p1(std::move(dir))
    {
        if (p0 == p1)
            raise(errc::bad_argument, "backmap points are projectively equal");
    }

    ProjectivePoint at(const Fe& i) const
    {
        return {p0.X() + i * p1.X(), p0.Y() + i * p1.Y(), p0.Z() + i * p1.Z()};
    }
};

/// Restrict the curve form to the line P0 + i*P1 and return the monic cubic in
/// i. Roots i0 correspond to intersection points bm.at(i0). The direction
/// point must stay off the curve; otherwise the cubic degenerates.
inline MonicCubic restrict_via_parameterization(const Curve& c, const BackMap& bm)
{
    const FieldPtr& f = curve_field(c);
    const Polynomial lx =
        Polynomial(f, {bm.p0.X(), bm.p1.X()});
    const Polynomial ly = Polynomial(f, {bm.p0.Y(), bm.p1.Y()});
    const Polynomial lz = Polynomial(f, {bm.p0.Z(), bm.p1.Z()});
    const Polynomial h = curve_form(c).compose(lx, ly, lz);
    if (h.degree() != 3)
        raise(errc::degenerate_direction, "direction point lies on the curve");
    const Fe lead_inv = h.coeff(3).inverse();
    return {-(h.coeff(2) * lead_inv), h.coeff(1) * lead_inv, -(h.coeff(0) * lead_inv)};
}

/// Deterministically span the line uX + vY + wZ = 0: P0 is the first valid
/// candidate, P1 the first later candidate that is projectively distinct from
/// P0 with F(P1) != 0. Candidates are the coordinate-axis intersections, then
/// a parametric tail along the line.
inline BackMap span_line(const Fe& u, const Fe& v, const Fe& w, const Curve& curve)
{
    if (u.is_zero() && v.is_zero() && w.is_zero())
        raise(errc::bad_argument, "line (0, 0, 0)");
    const FieldPtr& f = u.field();

    std::vector<ProjectivePoint> cand;
    const auto push = [&](const Fe& x, const Fe& y, const Fe& z) {
        if (x.is_zero() && y.is_zero() && z.is_zero())
            return;
        const ProjectivePoint p(x, y, z);
        for (const ProjectivePoint& q : cand)
            if (q == p)
                return;
        cand.push_back(p);
    };
    push(f->zero(), w, -v);
    push(-w, f->zero(), u);
    push(v, -u, f->zero());
    for (long i = 0; i < 8; ++i) {
        const Fe fi = f->fe(i);
        if (!w.is_zero())
            push(w, fi * w, -(u + v * fi));
        else if (!v.is_zero())
            push(v, -u, fi * v);
        else
            push(f->zero(), f->one(), fi);
    }

    // P0 is unconstrained (it may lie on the curve); P1 needs F(P1) != 0.
    for (size_t j = 1; j < cand.size(); ++j)
        if (!eval_curve_form(curve, cand[j]).is_zero())
            return BackMap(cand[0], cand[j]);
    raise(errc::no_valid_span, "no direction point off the curve found on the line");
}

}  // namespace cubenc

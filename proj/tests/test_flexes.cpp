// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cubenc;
using testsupport::Rng;

namespace {

Fe random_good_a(Rng& r, const FieldPtr& f)
{
    while (true) {
        const Fe a = testsupport::random_fe(r, f);
        if ((a * a * a).is_one())
            continue;
        if (hessian_j_invariant(a).is_zero())
            continue;
        return a;
    }
}

}  // namespace

TEST_CASE("cusp table rows over GF(13)")
{
    const FieldPtr f = make_field(mpz_class(13));
    const Fe a = f->fe(2L);
    const CuspTable t = build_cusp_table(f, a);
    CHECK(t.zeta == f->fe(3L));
    CHECK(t.flexes[0] == ProjectivePoint(f->zero(), -f->one(), f->one()));
    CHECK(t.cusps[0] == ProjectivePoint(a, f->one(), f->one()));
    CHECK(t.flexes[1] == ProjectivePoint(-f->one(), f->one(), f->zero()));
    CHECK(t.cusps[1] == ProjectivePoint(f->one(), f->one(), a));
    CHECK(t.flexes[3] == ProjectivePoint(f->fe(-1L), f->fe(3L), f->zero()));
    CHECK(t.cusps[3] == ProjectivePoint(f->fe(9L), f->fe(3L), f->fe(2L)));

    for (size_t i = 0; i < 9; ++i) {
        CHECK(on_curve(t.curve, t.flexes[i]));
        CHECK(gauss_map_hessian(t.curve, t.flexes[i]) == t.cusps[i]);
    }
    CHECK_THROWS_AS(build_cusp_table(make_field(mpz_class(11)), make_field(mpz_class(11))->fe(2L)),
                    Error);
}

TEST_CASE("all nine cusps are singular points of the dual sextic")
{
    const FieldPtr f13 = make_field(mpz_class(13));
    CHECK(verify_cusps_singular(build_cusp_table(f13, f13->fe(2L))));

    const FieldPtr f31 = make_field(mpz_class(31));
    Rng r(83);
    for (int i = 0; i < 20; ++i)
        CHECK(verify_cusps_singular(build_cusp_table(f31, random_good_a(r, f31))));
}

TEST_CASE("a perturbed cusp fails the singularity check")
{
    const FieldPtr f = make_field(mpz_class(13));
    CuspTable t = build_cusp_table(f, f->fe(2L));
    t.cusps[0] = ProjectivePoint(t.cusps[0].X() + f->one(), t.cusps[0].Y(), t.cusps[0].Z());
    CHECK(!verify_cusps_singular(t));
}

TEST_CASE("no three cusps are colinear exactly when j != 0")
{
    const FieldPtr f = make_field(mpz_class(13));
    CHECK(verify_no_three_colinear(build_cusp_table(f, f->fe(2L))));
    CHECK(!verify_no_three_colinear(build_cusp_table(f, f->zero())));
    CHECK(!verify_no_three_colinear(build_cusp_table(f, f->fe(-2L))));
}

TEST_CASE("coconic incidences: the four displayed conics and their orbit")
{
    const FieldPtr f13 = make_field(mpz_class(13));
    const Fe a13 = f13->fe(2L);
    const CuspTable t = build_cusp_table(f13, a13);

    // U W - a V^2 at B0 = (a:1:1).
    const ProjectivePoint& b0 = t.cusps[0];
    CHECK((b0.X() * b0.Z() - a13 * b0.Y() * b0.Y()).is_zero());
    // The symmetric conic at B3.
    const ProjectivePoint& b3 = t.cusps[3];
    const Fe a1 = a13 + f13->one();
    CHECK((b3.X() * b3.X() + b3.Y() * b3.Y() + b3.Z() * b3.Z() +
           a1 * (b3.X() * b3.Y() + b3.X() * b3.Z() + b3.Y() * b3.Z()))
              .is_zero());

    CHECK(verify_coconic(t));

    const FieldPtr f31 = make_field(mpz_class(31));
    Rng r(89);
    for (int i = 0; i < 20; ++i)
        CHECK(verify_coconic(build_cusp_table(f31, random_good_a(r, f31))));
}

TEST_CASE("nine-point cubic incidences")
{
    const FieldPtr f = make_field(mpz_class(13));
    const Fe a = f->fe(2L);
    const CuspTable t = build_cusp_table(f, a);
    CHECK(verify_nine_point_cubic(t));

    // Negative control: (1:1:1) is not on it for a = 2 (3a != a^3 + 2).
    CHECK(mul_int(a, 3) != a * a * a + f->fe(2L));
}

TEST_CASE("hessian quartic checks at a = 2 over GF(31)")
{
    const FieldPtr f = make_field(mpz_class(31));
    const CuspTable t = build_cusp_table(f, f->fe(2L));
    const HessianQuarticReport rep = verify_hessian_quartic(t);
    CHECK(rep.cusps_on_quartic);
    CHECK(rep.param_satisfies_quartic);
    CHECK(rep.dual_composition_proportional);
    CHECK(!rep.ratio.is_zero());
}

TEST_CASE("weierstrass quartic discrepancy report")
{
    // At a = 1 both candidates coincide and vanish.
    const FieldPtr f = make_field(mpz_class(11));
    const WeierstrassQuarticReport r1 =
        verify_weierstrass_quartic(WeierstrassCurve(f, f->one(), f->fe(3L)));
    CHECK(r1.scaled_vanishes);
    CHECK(r1.plain_vanishes);
    CHECK(r1.residual_matches);  // 3888(a-1)t^12 = 0 at a = 1

    // At a = 2 only the a-scaled candidate vanishes; the residual of the plain
    // one is 3888(a-1) t^12.
    const WeierstrassQuarticReport r2 =
        verify_weierstrass_quartic(WeierstrassCurve(f, f->fe(2L), f->one()));
    CHECK(r2.scaled_vanishes);
    CHECK(!r2.plain_vanishes);
    CHECK(r2.residual_matches);
    CHECK(r2.plain_residual ==
          Polynomial::monomial(mul_int(f->fe(2L) - f->one(), 3888), 12));

    CHECK_THROWS_AS(verify_weierstrass_quartic(WeierstrassCurve(f, f->zero(), f->fe(3L))), Error);

    Rng r(97);
    const FieldPtr big = make_field(mpz_class(10007));
    for (int i = 0; i < 10; ++i) {
        Fe a = big->zero(), b = big->zero();
        do {
            a = testsupport::random_nonzero(r, big);
            b = testsupport::random_fe(r, big);
        } while ((mul_int(a * a * a, 4) + mul_int(b * b, 27)).is_zero());
        const WeierstrassQuarticReport rep =
            verify_weierstrass_quartic(WeierstrassCurve(big, a, b));
        CHECK(rep.scaled_vanishes);
        CHECK(rep.plain_vanishes == a.is_one());
        CHECK(rep.residual_matches);
    }
}

TEST_CASE("randomized identity certification over a 64-bit geometry prime")
{
    Rng r(103);
    const FieldPtr f = testsupport::random_geometry_field(r, 64);
    for (int i = 0; i < 5; ++i) {
        const Fe a = random_good_a(r, f);
        const CuspTable t = build_cusp_table(f, a);
        CHECK(verify_cusps_singular(t));
        CHECK(verify_no_three_colinear(t));
        CHECK(verify_coconic(t));
        CHECK(verify_nine_point_cubic(t));
        CHECK(verify_hessian_quartic(t).all());
    }
}

TEST_CASE("run_selftest aggregates and reports")
{
    const FieldPtr f = make_field(mpz_class(13));
    const SelftestReport rep = run_selftest(f, 3, 7);
    REQUIRE(rep.count("cusps_singular") == 1);
    for (const auto& [name, res] : rep) {
        INFO(name);
        CHECK(res.failures == 0);
    }
    CHECK(rep.at("colinear_negative_control").trials == 2);
    CHECK_THROWS_AS(run_selftest(make_field(mpz_class(11)), 1, 1), Error);
}

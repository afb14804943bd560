// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cubenc;

namespace {

const json w11_spec = json::parse(R"({"p": "11", "model": "weierstrass", "a": "1", "b": "3"})");
const json h11_spec = json::parse(R"({"p": "11", "model": "hessian", "a": "2"})");

}  // namespace

TEST_CASE("curve specs parse and validate")
{
    const Curve w = parse_curve_spec(w11_spec);
    CHECK(curve_model(w) == Model::weierstrass);
    CHECK(curve_field(w)->modulus() == 11);

    const Curve h = parse_curve_spec(h11_spec);
    CHECK(curve_model(h) == Model::hessian);

    CHECK_THROWS_AS(parse_curve_spec(json::parse(R"({"p": "11", "model": "edwards"})")), Error);
    CHECK_THROWS_AS(parse_curve_spec(json::parse(R"({"model": "hessian"})")), Error);
    // Singular specs are rejected at construction.
    CHECK_THROWS_AS(parse_curve_spec(json::parse(R"({"p": "11", "model": "hessian", "a": "1"})")),
                    Error);
}

TEST_CASE("point serialization is normalized with an infinity special case")
{
    const Curve w = parse_curve_spec(w11_spec);
    const FieldPtr& f = curve_field(w);
    const ProjectivePoint p(f->fe(18L), f->fe(7L), f->fe(2L));
    const json j = point_to_json(w, p);
    CHECK(j.at("Z").get<std::string>() == "1");
    CHECK(point_from_json(w, j) == p);

    const json inf = point_to_json(w, std::get<WeierstrassCurve>(w).infinity());
    CHECK(inf.contains("infinity"));
    CHECK(point_from_json(w, inf) == std::get<WeierstrassCurve>(w).infinity());

    const Curve h = parse_curve_spec(h11_spec);
    const json flex = point_to_json(h, std::get<HessianCurve>(h).flex());
    CHECK(flex.at("X").get<std::string>() == "0");
    CHECK(flex.at("Y").get<std::string>() == "10");
    CHECK(flex.at("Z").get<std::string>() == "1");
}

TEST_CASE("family coefficient grammar resolves symbols and rationals")
{
    const Curve w = parse_curve_spec(w11_spec);  // a = 1, b = 3 over GF(11)
    const FieldPtr& f = curve_field(w);
    const auto coeff = [&](const std::string& s) { return detail::parse_family_coeff(s, w); };
    CHECK(coeff("1") == f->one());
    CHECK(coeff("-1") == f->fe(10L));
    CHECK(coeff("a") == f->one());
    CHECK(coeff("b") == f->fe(3L));
    CHECK(coeff("3a") == f->fe(3L));
    CHECK(coeff("4b") == f->fe(12L));
    CHECK(coeff("a^2") == f->one());
    CHECK(coeff("4/27") == f->fe(4L) / f->fe(27L));
    CHECK(coeff("2a/27") == f->fe(2L) / f->fe(27L));
    CHECK(coeff("1/81") == f->fe(81L).inverse());
    CHECK(coeff("0x0B") == f->zero());
    CHECK_THROWS_AS(coeff(""), Error);
    CHECK_THROWS_AS(coeff("c"), Error);
    CHECK_THROWS_AS(coeff("1x"), Error);

    const Curve h = parse_curve_spec(h11_spec);
    CHECK_THROWS_AS(detail::parse_family_coeff("b", h), Error);
}

TEST_CASE("family specs reproduce the builtin coefficient polynomials")
{
    const Curve h = parse_curve_spec(h11_spec);
    const json far = json::parse(
        R"({"model": "hessian", "U": ["1"], "V": ["0", "-1"], "W": ["0", "0", "a"]})");
    const LineFamily parsed = parse_family_spec(far, h);
    const LineFamily builtin = builtin_family("farashahi", h);
    CHECK(parsed.U == builtin.U);
    CHECK(parsed.V == builtin.V);
    CHECK(parsed.W == builtin.W);

    const Curve w = parse_curve_spec(w11_spec);
    const json oct = json::parse(R"({
        "model": "weierstrass",
        "U": ["0", "0", "4/27", "0", "0", "0", "4a"],
        "V": ["0", "0", "0", "4/27", "0", "0", "0", "4a"],
        "W": ["1/81", "0", "0", "0", "2a/27", "0", "4b", "0", "a^2"]})");
    const LineFamily oparsed = parse_family_spec(oct, w);
    const LineFamily obuiltin = builtin_family("octic", w);
    CHECK(oparsed.U == obuiltin.U);
    CHECK(oparsed.V == obuiltin.V);
    CHECK(oparsed.W == obuiltin.W);

    CHECK_THROWS_AS(
        parse_family_spec(
            json::parse(R"({"model": "hessian", "U": ["0"], "V": ["0"], "W": ["0"]})"), h),
        Error);
}

TEST_CASE("plan export/import round trip preserves every encoding")
{
    const FieldPtr f = make_field(mpz_class(251));
    const Curve h = HessianCurve(f, f->fe(2L));
    const EncoderPlan plan = certify_even(h, builtin_family("farashahi", h));
    const json exported = plan_to_json(plan);
    CHECK(exported.at("even").get<bool>());
    const EncoderPlan back = plan_from_json(exported, h);
    for (long t = 0; t < 251; ++t) {
        const Fe tv = f->fe(t);
        CHECK(plan.encode(tv) == back.encode(tv));
    }

    // Tampered plans are rejected on import.
    json bad = exported;
    bad["delta"]["num"][0] = "5";
    CHECK_THROWS_AS(plan_from_json(bad, h), Error);
}

TEST_CASE("hex message parsing")
{
    CHECK(parse_hex_bytes("0x0100") == std::vector<unsigned char>{1, 0});
    CHECK(parse_hex_bytes("ff") == std::vector<unsigned char>{255});
    CHECK(parse_hex_bytes("f") == std::vector<unsigned char>{15});
    CHECK_THROWS_AS(parse_hex_bytes("zz"), Error);
}

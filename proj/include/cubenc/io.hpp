// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/families.hpp>

#include <json.hpp>

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace cubenc {

using nlohmann::json;

inline Curve parse_curve_spec(const json& j)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("model"))
        raise(errc::parse_error, "curve spec needs 'p' and 'model'");
    const FieldPtr f = make_field(j.at("p").get<std::string>());
    const std::string model = j.at("model").get<std::string>();
    if (model == "weierstrass") {
        if (!j.contains("a") || !j.contains("b"))
            raise(errc::parse_error, "weierstrass spec needs 'a' and 'b'");
        return WeierstrassCurve(f, f->fe(j.at("a").get<std::string>()),
                                f->fe(j.at("b").get<std::string>()));
    }
    if (model == "hessian") {
        if (!j.contains("a"))
            raise(errc::parse_error, "hessian spec needs 'a'");
        return HessianCurve(f, f->fe(j.at("a").get<std::string>()));
    }
    raise(errc::parse_error, "unknown curve model '" + model + "'");
}

/// Normalized point JSON; the Weierstrass flex at infinity serializes as
/// {"infinity": true}.
inline json point_to_json(const Curve& curve, const ProjectivePoint& p)
{
    if (curve_model(curve) == Model::weierstrass) {
        const auto& wc = std::get<WeierstrassCurve>(curve);
        if (p == wc.infinity())
            return json{{"infinity", true}};
    }
    const ProjectivePoint n = p.normalized();
    return json{{"X", n.X().str()}, {"Y", n.Y().str()}, {"Z", n.Z().str()}};
}

inline ProjectivePoint point_from_json(const Curve& curve, const json& j)
{
    const FieldPtr& f = curve_field(curve);
    if (j.contains("infinity") && j.at("infinity").get<bool>()) {
        if (curve_model(curve) != Model::weierstrass)
            raise(errc::parse_error, "infinity point only exists on weierstrass curves");
        return std::get<WeierstrassCurve>(curve).infinity();
    }
    return {f->fe(j.at("X").get<std::string>()), f->fe(j.at("Y").get<std::string>()),
            f->fe(j.at("Z").get<std::string>())};
}

inline json poly_to_json(const Polynomial& p)
{
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        arr.push_back(p.coeff(i).str());
    return arr;
}

inline Polynomial poly_from_json(const FieldPtr& f, const json& j)
{
    if (!j.is_array())
        raise(errc::parse_error, "polynomial must be a JSON array of coefficient strings");
    std::vector<Fe> cs;
    for (const auto& c : j)
        cs.push_back(f->fe(c.get<std::string>()));
    return Polynomial(f, std::move(cs));
}

inline json ratfun_to_json(const RationalFunction& r)
{
    return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

inline RationalFunction ratfun_from_json(const FieldPtr& f, const json& j)
{
    return {poly_from_json(f, j.at("num")), poly_from_json(f, j.at("den"))};
}

namespace detail {

/// A family coefficient: [-] [number] [a|b [^k]] [/ number], e.g. "1", "-1",
/// "3a", "a^2", "4/27", "2a/27", "4b". Plain integers may be 0x-hex.
inline Fe parse_family_coeff(const std::string& s, const Curve& curve)
{
    const FieldPtr& f = curve_field(curve);
    size_t i = 0;
    const auto fail = [&]() -> Fe {
        raise(errc::parse_error, "bad family coefficient '" + s + "'");
    };
    if (s.empty())
        fail();
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = (s[i] == '-');
        ++i;
    }

    const auto read_number = [&](bool allow_hex) -> mpz_class {
        size_t start = i;
        if (allow_hex && i + 1 < s.size() && s[i] == '0' && (s[i + 1] == 'x' || s[i + 1] == 'X')) {
            i += 2;
            while (i < s.size() && std::isxdigit(static_cast<unsigned char>(s[i])))
                ++i;
        } else {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
        }
        if (i == start)
            fail();
        return parse_integer(s.substr(start, i - start));
    };

    Fe value = f->one();
    bool have_any = false;
    const bool hex = s.compare(i, 2, "0x") == 0 || s.compare(i, 2, "0X") == 0;
    if (i < s.size() && (hex || std::isdigit(static_cast<unsigned char>(s[i])))) {
        value = f->fe(read_number(true));
        have_any = true;
    }
    if (!hex && i < s.size() && (s[i] == 'a' || s[i] == 'b')) {
        Fe sym = f->zero();
        if (s[i] == 'a') {
            sym = std::visit([](const auto& m) { return m.a(); }, curve);
        } else {
            if (curve_model(curve) != Model::weierstrass)
                raise(errc::parse_error, "'b' only binds on weierstrass curves");
            sym = std::get<WeierstrassCurve>(curve).b();
        }
        ++i;
        unsigned long e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = mpz_get_ui(read_number(false).get_mpz_t());
        }
        value = value * sym.pow(e);
        have_any = true;
    }
    if (i < s.size() && s[i] == '/') {
        ++i;
        const Fe den = f->fe(read_number(true));
        value = value / den;
    }
    if (i != s.size() || !have_any)
        fail();
    return neg ? -value : value;
}

}  // namespace detail

inline LineFamily parse_family_spec(const json& j, const Curve& curve)
{
    if (!j.is_object() || !j.contains("model") || !j.contains("U") || !j.contains("V") ||
        !j.contains("W"))
        raise(errc::parse_error, "family spec needs 'model', 'U', 'V', 'W'");
    const std::string model = j.at("model").get<std::string>();
    if (model != "weierstrass" && model != "hessian")
        raise(errc::parse_error, "unknown family model '" + model + "'");
    const Model m = (model == "weierstrass") ? Model::weierstrass : Model::hessian;
    const FieldPtr& f = curve_field(curve);
    const auto poly = [&](const json& arr) {
        if (!arr.is_array())
            raise(errc::parse_error, "family polynomial must be an array");
        std::vector<Fe> cs;
        for (const auto& c : arr)
            cs.push_back(detail::parse_family_coeff(c.get<std::string>(), curve));
        return Polynomial(f, std::move(cs));
    };
    const std::string name =
        j.contains("name") ? j.at("name").get<std::string>() : std::string("user-family");
    return {name, m, poly(j.at("U")), poly(j.at("V")), poly(j.at("W"))};
}

inline json plan_to_json(const EncoderPlan& plan)
{
    json ex = json::array();
    for (const mpz_class& t : plan.excluded)
        ex.push_back(t.get_str());
    json backmap = {
        {"base", json::array({poly_to_json(plan.base[0]), poly_to_json(plan.base[1]),
                              poly_to_json(plan.base[2])})},
        {"dir", json::array({poly_to_json(plan.dir[0]), poly_to_json(plan.dir[1]),
                             poly_to_json(plan.dir[2])})},
    };
    return json{{"even", true},
                {"model", model_name(curve_model(plan.curve))},
                {"s1", ratfun_to_json(plan.s1)},
                {"s2", ratfun_to_json(plan.s2)},
                {"s3", ratfun_to_json(plan.s3)},
                {"disc", ratfun_to_json(plan.disc)},
                {"delta", ratfun_to_json(plan.delta)},
                {"lead", poly_to_json(plan.lead)},
                {"excluded", ex},
                {"backmap", backmap},
                {"designated", point_to_json(plan.curve, plan.designated)}};
}

/// Re-import an exported plan against the same curve. The plan invariant
/// delta^2 = disc is re-verified exactly.
inline EncoderPlan plan_from_json(const json& j, const Curve& curve)
{
    const FieldPtr& f = curve_field(curve);
    if (j.at("model").get<std::string>() != model_name(curve_model(curve)))
        raise(errc::parse_error, "plan model does not match the curve");
    const auto triple = [&](const json& arr) {
        return detail::PolyTriple{poly_from_json(f, arr.at(0)), poly_from_json(f, arr.at(1)),
                                  poly_from_json(f, arr.at(2))};
    };
    std::vector<mpz_class> excluded;
    for (const auto& t : j.at("excluded"))
        excluded.push_back(parse_integer(t.get<std::string>()));
    std::sort(excluded.begin(), excluded.end());
    EncoderPlan plan{curve,
                     ratfun_from_json(f, j.at("s1")),
                     ratfun_from_json(f, j.at("s2")),
                     ratfun_from_json(f, j.at("s3")),
                     ratfun_from_json(f, j.at("disc")),
                     ratfun_from_json(f, j.at("delta")),
                     triple(j.at("backmap").at("base")),
                     triple(j.at("backmap").at("dir")),
                     poly_from_json(f, j.at("lead")),
                     std::move(excluded),
                     point_from_json(curve, j.at("designated"))};
    if (plan.delta * plan.delta != plan.disc)
        raise(errc::parse_error, "imported plan violates delta^2 = disc");
    return plan;
}

/// Hex string (optional 0x prefix) to bytes, for --message inputs.
inline std::vector<unsigned char> parse_hex_bytes(const std::string& in)
{
    std::string s = in;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0)
        s = s.substr(2);
    if (s.size() % 2 != 0)
        s = "0" + s;
    std::vector<unsigned char> out;
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        const auto nib = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9')
                return static_cast<unsigned>(c - '0');
            if (c >= 'a' && c <= 'f')
                return static_cast<unsigned>(c - 'a' + 10);
            if (c >= 'A' && c <= 'F')
                return static_cast<unsigned>(c - 'A' + 10);
            raise(errc::parse_error, "bad hex digit in message");
        };
        out.push_back(static_cast<unsigned char>(nib(s[i]) * 16 + nib(s[i + 1])));
    }
    return out;
}

}  // namespace cubenc

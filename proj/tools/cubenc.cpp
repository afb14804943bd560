// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
//
// cubenc CLI: encode field elements or messages to points on cubic curves,
// certify line families, export encoder plans, sweep parameter ranges, and run
// the flex-geometry selftest. All input numbers are decimal or 0x-hex strings;
// output is single-line JSON on stdout.

#include <cubenc/cubenc.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

namespace {

using namespace cubenc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitNotEven = 3;

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        raise(errc::parse_error, "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

Curve load_curve(const std::string& path)
{
    return parse_curve_spec(load_json(path));
}

bool is_builtin(const std::string& name)
{
    return name == "farashahi" || name == "icart" || name == "pencil-raw" || name == "octic";
}

LineFamily load_family(const std::string& spec, const Curve& curve)
{
    if (is_builtin(spec))
        return builtin_family(spec, curve);
    return parse_family_spec(load_json(spec), curve);
}

/// Closed forms for icart/farashahi/pencil; compiled plans for octic and for
/// user families and re-imported plans.
struct Encoder
{
    Curve curve;
    std::string closed;  // non-empty for closed-form methods
    std::optional<EncoderPlan> plan;

    ProjectivePoint encode(const Fe& t) const
    {
        if (closed == "icart")
            return icart_encode(std::get<WeierstrassCurve>(curve), t);
        if (closed == "farashahi")
            return farashahi_encode(std::get<HessianCurve>(curve), t);
        if (closed == "pencil")
            return pencil_encode(std::get<HessianCurve>(curve), t);
        return plan->encode(t);
    }
};

Encoder resolve_method(const Curve& curve, const std::string& method)
{
    const auto need = [&](Model m) {
        if (curve_model(curve) != m)
            raise(errc::model_mismatch, "method '" + method + "' needs a " + model_name(m) +
                                            " curve");
    };
    if (method == "icart") {
        need(Model::weierstrass);
        if (std::get<WeierstrassCurve>(curve).a().is_zero())
            raise(errc::icart_requires_nonzero_a, "icart needs a != 0");
        return {curve, "icart", std::nullopt};
    }
    if (method == "farashahi") {
        need(Model::hessian);
        return {curve, "farashahi", std::nullopt};
    }
    if (method == "pencil") {
        need(Model::hessian);
        return {curve, "pencil", std::nullopt};
    }
    if (method == "octic") {
        need(Model::weierstrass);
        return {curve, "", certify_even(curve, builtin_family("octic", curve))};
    }
    if (method.rfind("family:", 0) == 0) {
        const LineFamily fam = load_family(method.substr(7), curve);
        return {curve, "", certify_even(curve, fam)};
    }
    if (method.rfind("plan:", 0) == 0)
        return {curve, "", plan_from_json(load_json(method.substr(5)), curve)};
    raise(errc::unknown_family, "unknown method '" + method + "'");
}

json not_even_json(const NotEven& e)
{
    return json{{"even", false}, {"witness", poly_to_json(e.witness())}};
}

int cmd_encode(const std::string& curve_path, const std::string& method, const std::string& t_str,
               const std::string& msg_hex)
{
    const Curve curve = load_curve(curve_path);
    const FieldPtr& f = curve_field(curve);
    if (t_str.empty() == msg_hex.empty())
        raise(errc::bad_argument, "encode needs exactly one of --t and --message");
    const Fe t =
        t_str.empty() ? message_to_parameter(parse_hex_bytes(msg_hex), f) : f->fe(t_str);
    try {
        const Encoder enc = resolve_method(curve, method);
        std::cout << point_to_json(curve, enc.encode(t)).dump() << "\n";
        return kExitOk;
    } catch (const NotEven& e) {
        std::cerr << not_even_json(e).dump() << "\n";
        return kExitNotEven;
    }
}

int cmd_certify(const std::string& curve_path, const std::string& family_spec)
{
    const Curve curve = load_curve(curve_path);
    const LineFamily fam = load_family(family_spec, curve);
    try {
        std::cout << plan_to_json(certify_even(curve, fam)).dump() << "\n";
    } catch (const NotEven& e) {
        std::cout << not_even_json(e).dump() << "\n";
    }
    return kExitOk;  // the certification outcome is data, not an error
}

int cmd_plan(const std::string& curve_path, const std::string& method)
{
    const Curve curve = load_curve(curve_path);
    const std::string spec = method.rfind("family:", 0) == 0 ? method.substr(7) : method;
    const LineFamily fam = load_family(spec, curve);
    try {
        std::cout << plan_to_json(certify_even(curve, fam)).dump() << "\n";
        return kExitOk;
    } catch (const NotEven& e) {
        std::cout << not_even_json(e).dump() << "\n";
        return kExitNotEven;
    }
}

int cmd_sweep(const std::string& curve_path, const std::string& method, const std::string& from,
              const std::string& to)
{
    const Curve curve = load_curve(curve_path);
    const FieldPtr& f = curve_field(curve);
    const mpz_class lo = parse_integer(from);
    const mpz_class hi = parse_integer(to);
    if (lo > hi)
        raise(errc::bad_argument, "--from must not exceed --to");
    if (hi - lo > 4 * 1024 * 1024)
        raise(errc::bad_argument, "sweep range too large");
    Encoder enc = resolve_method(curve, method);

    long count = 0, failures = 0;
    std::set<std::string> distinct;
    for (mpz_class v = lo; v <= hi; ++v) {
        const Fe t = f->fe(v);
        const ProjectivePoint p = enc.encode(t);
        if (!on_curve(curve, p))
            ++failures;
        distinct.insert(point_to_json(curve, p).dump());
        ++count;
    }
    std::cout << json{{"count", count},
                      {"on_curve_failures", failures},
                      {"distinct_points", distinct.size()}}
                     .dump()
              << "\n";
    return kExitOk;
}

int cmd_selftest(const std::string& p_str, int trials, unsigned long seed)
{
    const FieldPtr f = make_field(p_str);
    if (!f->is_geometry())
        raise(errc::capability_error, "selftest needs p = 1 (mod 3)");
    const SelftestReport rep = run_selftest(f, trials, seed);
    json out = json::object();
    bool all_ok = true;
    for (const auto& [name, r] : rep) {
        json entry{{"trials", r.trials}, {"failures", r.failures}};
        if (r.failures > 0) {
            entry["witness"] = r.witness;
            all_ok = false;
        }
        out[name] = entry;
    }
    std::cout << out.dump() << "\n";
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"deterministic encodings onto cubic curves over GF(p), p = 2 (mod 3)"};
    app.require_subcommand(1);
    bool json_flag = true;
    app.add_flag("--json", json_flag, "emit JSON (default)");

    std::string curve_path, method, family_spec, t_str, msg_hex, from, to, p_str;
    int trials = 5;
    unsigned long seed = 1;

    auto* enc = app.add_subcommand("encode", "encode a parameter or message to a curve point");
    enc->add_option("--curve", curve_path)->required();
    enc->add_option("--method", method)->required();
    enc->add_option("--t", t_str);
    enc->add_option("--message", msg_hex);

    auto* cert = app.add_subcommand("certify", "certify a line family for even intersection");
    cert->add_option("--curve", curve_path)->required();
    cert->add_option("--family", family_spec)->required();

    auto* plan = app.add_subcommand("plan", "compile and export an encoder plan");
    plan->add_option("--curve", curve_path)->required();
    plan->add_option("--method", method)->required();

    auto* sweep = app.add_subcommand("sweep", "encode every parameter in a range");
    sweep->add_option("--curve", curve_path)->required();
    sweep->add_option("--method", method)->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();

    auto* self = app.add_subcommand("selftest", "run the flex-geometry identity suite");
    self->add_option("--p", p_str)->required();
    self->add_option("--trials", trials);
    self->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitSpecError;
    }

    try {
        if (enc->parsed())
            return cmd_encode(curve_path, method, t_str, msg_hex);
        if (cert->parsed())
            return cmd_certify(curve_path, family_spec);
        if (plan->parsed())
            return cmd_plan(curve_path, method);
        if (sweep->parsed())
            return cmd_sweep(curve_path, method, from, to);
        if (self->parsed())
            return cmd_selftest(p_str, trials, seed);
    } catch (const cubenc::NotEven& e) {
        std::cerr << not_even_json(e).dump() << "\n";
        return kExitNotEven;
    } catch (const cubenc::Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitSpecError;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitSpecError;
    }
    return kExitSpecError;
}

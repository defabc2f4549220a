// Command-line front end: evaluation of the special functions, L-factors and
// Whittaker values, plus suite-driven verification of the Gamma-integral
// identities and the zeta = L comparisons.
//
// Exit codes: 0 all pass, 1 verification failure, 2 usage/parse error,
// 3 numerical non-convergence (or another evaluation failure).
//
// All stdout payloads are deterministic: fixed evaluation order, shortest
// round-trip float formatting. A run manifest (command, input digest, tool
// version, config snapshot) is emitted on stderr as a single JSON line.

#include <charconv>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arwhit/contour.hpp"
#include "arwhit/gammakernel.hpp"
#include "arwhit/langlands.hpp"
#include "arwhit/whittaker.hpp"
#include "arwhit/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace arwhit;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

std::string fmt(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

json jc(cplx z) { return json::array({z.real(), z.imag()}); }

// ---------------------------------------------------------------------------
// Errors -> exit codes
// ---------------------------------------------------------------------------

struct CliError {
    int code;           // process exit code
    std::string type;   // machine-readable tag
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& type,
                       const std::string& message) {
    throw CliError{code, type, message};
}

int error_code(const NumericError& e) {
    if (dynamic_cast<const ConstraintViolation*>(&e)) return 2;
    return 3;
}

std::string error_type(const NumericError& e) {
    if (dynamic_cast<const PoleError*>(&e)) return "pole";
    if (dynamic_cast<const ConstraintViolation*>(&e)) return "constraint";
    if (dynamic_cast<const ConvergenceRangeError*>(&e)) return "non-convergence";
    if (dynamic_cast<const QuadratureNotConverged*>(&e)) return "non-convergence";
    if (dynamic_cast<const TruncationNotConverged*>(&e)) return "non-convergence";
    if (dynamic_cast<const ResonantParameters*>(&e)) return "resonant";
    if (dynamic_cast<const ExpressionMismatch*>(&e)) return "mismatch";
    return "numeric";
}

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

cplx parse_cplx(const std::string& text) {
    double re = 0.0, im = 0.0;
    auto comma = text.find(',');
    try {
        re = std::stod(text.substr(0, comma));
        if (comma != std::string::npos) im = std::stod(text.substr(comma + 1));
    } catch (const std::exception&) {
        fail(2, "parse", "expected a complex scalar 're[,im]', got '" + text +
                             "'");
    }
    return {re, im};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(2, "io", "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(2, "parse", what + ": invalid JSON");
    return j;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& what) {
    if (!obj.is_object()) fail(2, "parse", what + ": expected a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known)
            fail(2, "parse", what + ": unknown field '" + it.key() + "'");
    }
}

cplx json_cplx(const json& v, const std::string& what) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return cplx(v[0].get<double>(), v[1].get<double>());
    fail(2, "parse", what + ": expected a number or [re, im]");
}

double json_num(const json& obj, const char* key, const std::string& what) {
    if (!obj.contains(key) || !obj[key].is_number())
        fail(2, "parse", what + ": missing numeric field '" + key + "'");
    return obj[key].get<double>();
}

int json_int(const json& obj, const char* key, const std::string& what) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        fail(2, "parse", what + ": missing integer field '" + key + "'");
    return obj[key].get<int>();
}

// Representation files:
//   {"field":"R","n":2,"kind":"ps","nu":[x,x],"delta":[d,d]}
//   {"field":"R","n":2,"kind":"ds","nu":x,"kappa":k}
//   {"field":"R","n":3,"kind":"ps","nu":[x,x,x],"delta":[d,d,d]}
//   {"field":"R","n":3,"kind":"gps","nu1":x,"kappa1":k,"nu2":x,"delta2":d}
//   {"field":"C","n":2|3,"chars":[[x,d],...]}
// where x is a number or [re, im].
RepParam rep_from_json(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("field"))
        fail(2, "parse", what + ": expected a representation object with a "
                                "'field' key");
    const std::string field = j["field"].is_string() ? j["field"].get<std::string>() : "";
    const int n = json_int(j, "n", what);
    if (field == "C") {
        check_keys(j, {"field", "n", "chars"}, what);
        if (!j.contains("chars") || !j["chars"].is_array() ||
            int(j["chars"].size()) != n)
            fail(2, "parse", what + ": 'chars' must list n (nu, d) pairs");
        std::vector<std::pair<cplx, int>> chars;
        for (const auto& c : j["chars"]) {
            if (!c.is_array() || c.size() != 2 || !c[1].is_number_integer())
                fail(2, "parse", what + ": each entry of 'chars' must be "
                                        "[nu, d] with integer d");
            chars.emplace_back(json_cplx(c[0], what), c[1].get<int>());
        }
        return glc_principal(std::move(chars));
    }
    if (field != "R")
        fail(2, "parse", what + ": 'field' must be \"R\" or \"C\"");
    const std::string kind =
        j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    auto nu_list = [&](int count) {
        if (!j.contains("nu") || !j["nu"].is_array() ||
            int(j["nu"].size()) != count)
            fail(2, "parse", what + ": 'nu' must list " +
                                 std::to_string(count) + " scalars");
        std::vector<cplx> out;
        for (const auto& v : j["nu"]) out.push_back(json_cplx(v, what));
        return out;
    };
    auto delta_list = [&](int count) {
        if (!j.contains("delta") || !j["delta"].is_array() ||
            int(j["delta"].size()) != count)
            fail(2, "parse", what + ": 'delta' must list " +
                                 std::to_string(count) + " integers");
        std::vector<int> out;
        for (const auto& v : j["delta"]) {
            if (!v.is_number_integer())
                fail(2, "parse", what + ": 'delta' entries must be integers");
            out.push_back(v.get<int>());
        }
        return out;
    };
    if (n == 2 && kind == "ps") {
        check_keys(j, {"field", "n", "kind", "nu", "delta"}, what);
        auto nu = nu_list(2);
        auto d = delta_list(2);
        return gl2r_principal(nu[0], d[0], nu[1], d[1]);
    }
    if (n == 2 && kind == "ds") {
        check_keys(j, {"field", "n", "kind", "nu", "kappa"}, what);
        if (!j.contains("nu")) fail(2, "parse", what + ": missing 'nu'");
        return gl2r_discrete(json_cplx(j["nu"], what),
                             json_int(j, "kappa", what));
    }
    if (n == 3 && kind == "ps") {
        check_keys(j, {"field", "n", "kind", "nu", "delta"}, what);
        auto nu = nu_list(3);
        auto d = delta_list(3);
        return gl3r_principal(nu[0], d[0], nu[1], d[1], nu[2], d[2]);
    }
    if (n == 3 && kind == "gps") {
        check_keys(j, {"field", "n", "kind", "nu1", "kappa1", "nu2", "delta2"},
                   what);
        if (!j.contains("nu1") || !j.contains("nu2"))
            fail(2, "parse", what + ": missing 'nu1'/'nu2'");
        return gl3r_generalized(json_cplx(j["nu1"], what),
                                json_int(j, "kappa1", what),
                                json_cplx(j["nu2"], what),
                                json_int(j, "delta2", what));
    }
    fail(2, "parse", what + ": 'kind' must be \"ps\", \"ds\" or \"gps\" "
                            "matching n");
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

struct Config {
    double tol = 0.0; // 0 = per-command default
    int grid_nodes = 0;
    double contour_real = 0.0;
    int threads = 1;
    bool csv = false;
};

uint64_t fnv1a(uint64_t h, const std::string& data) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void emit_manifest(const std::string& command,
                   const std::vector<std::string>& inputs, const Config& cfg) {
    uint64_t h = 1469598103934665603ULL;
    h = fnv1a(h, command);
    for (const auto& s : inputs) h = fnv1a(h, s);
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(h));
    json m;
    m["command"] = command;
    m["inputs_digest"] = digest;
    m["version"] = kVersion;
    m["config"] = {{"tol", cfg.tol},
                   {"grid_nodes", cfg.grid_nodes},
                   {"contour_real", cfg.contour_real},
                   {"threads", cfg.threads},
                   {"format", cfg.csv ? "csv" : "json"}};
    std::cerr << m.dump() << "\n";
}

double default_tol(const Config& cfg, double fallback) {
    if (cfg.tol > 0.0) return cfg.tol;
    if (const char* env = std::getenv("WHITTAKER_TOL")) {
        try {
            double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
        fail(2, "parse", "WHITTAKER_TOL must be a positive number");
    }
    return fallback;
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

int cmd_gamma(const std::string& kind, const std::string& s_text,
              const std::string& r_text, const std::string& z_text,
              const std::string& method, const Config& cfg) {
    cplx value;
    if (kind == "besselK") {
        if (r_text.empty() || z_text.empty())
            fail(2, "parse", "besselK requires --r and --z");
        const cplx r = parse_cplx(r_text);
        const double z = parse_cplx(z_text).real();
        if (cfg.contour_real != 0.0) {
            // Custom contour: the Mellin-Barnes representation of K_r with
            // the line Re(t) = --contour-real (must stay right of the poles).
            value = 0.25 * mb_integral_1d_log(
                               [&](cplx t) {
                                   return log_gamma(0.5 * (t + r)) +
                                          log_gamma(0.5 * (t - r)) -
                                          t * std::log(0.5 * z);
                               },
                               {cfg.contour_real, 16.0, 0.05});
        } else {
            BesselMethod m = BesselMethod::integral;
            if (method == "mellin_barnes") m = BesselMethod::mellin_barnes;
            else if (method == "series") m = BesselMethod::series;
            else if (method != "integral" && !method.empty())
                fail(2, "parse", "unknown besselK method '" + method + "'");
            value = bessel_k(r, z, m);
        }
    } else {
        if (s_text.empty()) fail(2, "parse", kind + " requires --s");
        const cplx s = parse_cplx(s_text);
        if (kind == "gamma") value = gamma(s);
        else if (kind == "gammaR") value = gamma_r(s);
        else if (kind == "gammaC") value = gamma_c(s);
        else fail(2, "parse", "unknown --kind '" + kind + "'");
    }
    if (cfg.csv) {
        std::cout << "re,im\r\n" << fmt(value.real()) << ","
                  << fmt(value.imag()) << "\r\n";
    } else {
        json out;
        out["re"] = value.real();
        out["im"] = value.imag();
        std::cout << out.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// lfactor
// ---------------------------------------------------------------------------

int cmd_lfactor(const std::string& rep_path, const std::string& rep2_path,
                const std::vector<std::string>& s_texts, const Config& cfg) {
    const std::string text1 = read_file(rep_path);
    const RepParam a = rep_from_json(parse_json(text1, rep_path), rep_path);
    WeilParam param;
    if (!rep2_path.empty()) {
        const std::string text2 = read_file(rep2_path);
        const RepParam b =
            rep_from_json(parse_json(text2, rep2_path), rep2_path);
        param = tensor(weil_param(a), weil_param(b));
    } else {
        param = weil_param(a);
    }
    // Serialization cross-check: the parameter survives a JSON round trip
    // and the L-factor recomputed from the round-tripped parameter agrees.
    const WeilParam roundtrip = weil_param_from_json(to_json(param));
    json rows = json::array();
    std::ostringstream csv;
    csv << "s_re,s_im,L_re,L_im,rel_error,status\r\n";
    for (const auto& st : s_texts) {
        const cplx s = parse_cplx(st);
        json row;
        row["s"] = jc(s);
        try {
            const cplx L = l_factor(param, s);
            const double err = rel_error_of(L, l_factor(roundtrip, s));
            row["L"] = jc(L);
            row["rel_error"] = err;
            row["status"] = "ok";
            csv << fmt(s.real()) << "," << fmt(s.imag()) << ","
                << fmt(L.real()) << "," << fmt(L.imag()) << "," << fmt(err)
                << ",ok\r\n";
        } catch (const NumericError& e) {
            row["status"] = error_type(e);
            row["message"] = e.what();
            csv << fmt(s.real()) << "," << fmt(s.imag()) << ",,,,"
                << error_type(e) << "\r\n";
        }
        rows.push_back(std::move(row));
    }
    if (cfg.csv) {
        std::cout << csv.str();
    } else {
        json out;
        out["parameter"] = json::parse(to_json(param));
        out["rows"] = std::move(rows);
        std::cout << out.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// whittaker
// ---------------------------------------------------------------------------

std::vector<double> parse_axis(const std::string& text, const char* what) {
    // "a:b:n" -> n geometrically spaced points from a to b.
    double a = 0.0, b = 0.0;
    int n = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 1 ||
        a <= 0.0 || b < a)
        fail(2, "parse", std::string(what) +
                             ": expected 'min:max:count' with 0 < min <= max");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = a;
        return out;
    }
    const double step = std::log(b / a) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = a * std::exp(step * i);
    return out;
}

int cmd_whittaker(const std::string& spec_path, const std::string& y1_text,
                  const std::string& y2_text, const std::string& method,
                  const Config& cfg) {
    const std::string text = read_file(spec_path);
    json spec = parse_json(text, spec_path);
    check_keys(spec, {"rep", "eps", "q", "l", "u", "lambda"}, spec_path);
    if (!spec.contains("rep"))
        fail(2, "parse", spec_path + ": missing 'rep'");
    const RepParam rep = rep_from_json(spec["rep"], spec_path);
    const int eps = spec.contains("eps") ? json_int(spec, "eps", spec_path) : 1;

    std::function<cplx(TorusPoint)> eval;
    if (std::holds_alternative<RealGL2Rep>(rep)) {
        const auto& r = std::get<RealGL2Rep>(rep);
        const int q = json_int(spec, "q", spec_path);
        Gl2Method m = Gl2Method::closed_form;
        if (method == "mellin_barnes") m = Gl2Method::mellin_barnes;
        else if (!method.empty() && method != "closed_form")
            fail(2, "parse", "GL(2,R) methods: closed_form, mellin_barnes");
        eval = [=](TorusPoint y) { return gl2r_whittaker(r, eps, q, y, m); };
    } else if (std::holds_alternative<RealGL3Rep>(rep)) {
        const auto& r = std::get<RealGL3Rep>(rep);
        if (spec.contains("u")) {
            std::array<int, 3> l{};
            for (int i = 0; i < 3; ++i) l[i] = spec["u"][i].get<int>();
            Gl3Method m = Gl3Method::mellin_barnes;
            if (method == "series") m = Gl3Method::series;
            else if (!method.empty() && method != "mellin_barnes")
                fail(2, "parse", "GL(3,R) methods: mellin_barnes, series");
            eval = [=](TorusPoint y) { return gl3r_whittaker(r, eps, l, y, m); };
        } else {
            std::array<int, 2> lam{};
            if (!spec.contains("lambda"))
                fail(2, "parse", spec_path + ": GL(3,R) needs 'u' or "
                                             "'lambda' + 'q'");
            for (int i = 0; i < 2; ++i) lam[i] = spec["lambda"][i].get<int>();
            const int q = json_int(spec, "q", spec_path);
            eval = [=](TorusPoint y) {
                return gl3r_whittaker_k2(r, eps, lam, q, y);
            };
        }
    } else {
        const auto& r = std::get<ComplexRep>(rep);
        if (r.n == 2) {
            const int l = json_int(spec, "l", spec_path);
            const int q = json_int(spec, "q", spec_path);
            eval = [=](TorusPoint y) { return gl2c_whittaker(r, eps, l, q, y); };
        } else if (spec.contains("u")) {
            std::array<int, 6> l{};
            for (int i = 0; i < 6; ++i) l[i] = spec["u"][i].get<int>();
            eval = [=](TorusPoint y) { return gl3c_whittaker(r, eps, l, y); };
        } else {
            std::array<int, 2> lam{};
            if (!spec.contains("lambda"))
                fail(2, "parse", spec_path + ": GL(3,C) needs 'u' or "
                                             "'lambda' + 'q'");
            for (int i = 0; i < 2; ++i) lam[i] = spec["lambda"][i].get<int>();
            const int q = json_int(spec, "q", spec_path);
            eval = [=](TorusPoint y) {
                return gl3c_whittaker_k2(r, eps, lam, q, y);
            };
        }
    }

    const auto y1s = parse_axis(y1_text, "--y1");
    const auto y2s = parse_axis(y2_text, "--y2");
    std::ostringstream csv;
    csv << "y1,y2,re,im\r\n";
    json rows = json::array();
    for (double y1 : y1s) {
        for (double y2 : y2s) {
            const cplx v = eval({y1, y2});
            csv << fmt(y1) << "," << fmt(y2) << "," << fmt(v.real()) << ","
                << fmt(v.imag()) << "\r\n";
            rows.push_back(
                {{"y1", y1}, {"y2", y2}, {"re", v.real()}, {"im", v.imag()}});
        }
    }
    if (cfg.csv) std::cout << csv.str();
    else std::cout << json{{"values", std::move(rows)}}.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// identity-verify
// ---------------------------------------------------------------------------

IdentityId identity_id(const std::string& name) {
    if (name == "barnes_first") return IdentityId::barnes_first;
    if (name == "barnes_exchange") return IdentityId::barnes_exchange;
    if (name == "barnes_second") return IdentityId::barnes_second;
    if (name == "barnes_second_sum") return IdentityId::barnes_second_sum;
    if (name == "gauss_sum") return IdentityId::gauss_sum;
    if (name == "cr_barnes") return IdentityId::cr_barnes;
    fail(2, "parse", "unknown identity id '" + name + "'");
}

Field field_of(const std::string& name) {
    if (name == "R") return Field::R;
    if (name == "C") return Field::C;
    fail(2, "parse", "field must be \"R\" or \"C\"");
}

int cmd_identity_verify(const std::string& suite_path, const Config& cfg) {
    const std::string text = read_file(suite_path);
    json suite = parse_json(text, suite_path);
    check_keys(suite, {"schema", "tol", "cases"}, suite_path);
    if (!suite.contains("schema") || suite["schema"] != 1)
        fail(2, "parse", suite_path + ": expected \"schema\": 1");
    double tol = default_tol(
        cfg, suite.contains("tol") ? json_num(suite, "tol", suite_path) : 1e-8);
    if (!suite.contains("cases") || !suite["cases"].is_array())
        fail(2, "parse", suite_path + ": missing 'cases' array");

    json reports = json::array();
    std::ostringstream csv;
    csv << "id,field,label,rel_error,nodes,pass,error\r\n";
    bool all_pass = true;
    bool any_nonconv = false, any_other_failure = false;
    for (const auto& c : suite["cases"]) {
        check_keys(c, {"id", "field", "params", "label"}, suite_path);
        const std::string id = c.contains("id") && c["id"].is_string()
                                   ? c["id"].get<std::string>()
                                   : "";
        const std::string fl = c.contains("field") && c["field"].is_string()
                                   ? c["field"].get<std::string>()
                                   : "R";
        const std::string label =
            c.contains("label") && c["label"].is_string()
                ? c["label"].get<std::string>()
                : "";
        std::vector<cplx> params;
        if (c.contains("params"))
            for (const auto& p : c["params"])
                params.push_back(json_cplx(p, suite_path));
        json rep;
        rep["id"] = id;
        rep["field"] = fl;
        rep["label"] = label;
        std::string err;
        double rel_error = 0.0;
        long nodes = 0;
        bool pass = false;
        try {
            auto r = verify_identity(identity_id(id), field_of(fl), params);
            rel_error = r.rel_error;
            nodes = r.nodes_used;
            pass = rel_error <= tol;
            rep["lhs"] = jc(r.lhs);
            rep["rhs"] = jc(r.rhs);
            rep["rel_error"] = rel_error;
            rep["nodes"] = nodes;
        } catch (const NumericError& e) {
            err = e.what();
            rep["error"] = err;
            if (error_type(e) == "non-convergence") any_nonconv = true;
            else any_other_failure = true;
        }
        rep["pass"] = pass;
        if (!pass) {
            all_pass = false;
            if (err.empty()) any_other_failure = true;
        }
        reports.push_back(std::move(rep));
        csv << id << "," << fl << "," << label << "," << fmt(rel_error) << ","
            << nodes << "," << (pass ? "true" : "false") << ","
            << (err.empty() ? "" : "\"" + err + "\"") << "\r\n";
    }
    if (cfg.csv) std::cout << csv.str();
    else
        std::cout << json{{"tol", tol}, {"reports", std::move(reports)}}.dump()
                  << "\n";
    if (all_pass) return 0;
    return (any_nonconv && !any_other_failure) ? 3 : 1;
}

// ---------------------------------------------------------------------------
// zeta-verify
// ---------------------------------------------------------------------------

LogGrid grid_from_json(const json& g, const std::string& what,
                       int nodes_override) {
    check_keys(g, {"u_min", "u_max", "nodes"}, what);
    LogGrid out;
    out.u_min = json_num(g, "u_min", what);
    out.u_max = json_num(g, "u_max", what);
    out.nodes = json_int(g, "nodes", what);
    if (nodes_override > 0) out.nodes = nodes_override;
    return out;
}

int cmd_zeta_verify(const std::string& suite_path, const Config& cfg) {
    const std::string text = read_file(suite_path);
    json suite = parse_json(text, suite_path);
    check_keys(suite, {"schema", "tol", "tail_tol", "grid", "grid2", "cases"},
               suite_path);
    if (!suite.contains("schema") || suite["schema"] != 1)
        fail(2, "parse", suite_path + ": expected \"schema\": 1");

    ZetaConfig zcfg;
    zcfg.tol = default_tol(
        cfg, suite.contains("tol") ? json_num(suite, "tol", suite_path) : 1e-8);
    if (suite.contains("tail_tol"))
        zcfg.tail_tol = json_num(suite, "tail_tol", suite_path);
    if (suite.contains("grid")) {
        zcfg.grid1 = grid_from_json(suite["grid"], suite_path, cfg.grid_nodes);
        zcfg.grid2 = zcfg.grid1;
    }
    if (suite.contains("grid2"))
        zcfg.grid2 = grid_from_json(suite["grid2"], suite_path, cfg.grid_nodes);

    if (!suite.contains("cases") || !suite["cases"].is_array())
        fail(2, "parse", suite_path + ": missing 'cases' array");
    std::vector<ZetaCase> cases;
    for (const auto& c : suite["cases"]) {
        check_keys(c, {"pairing", "rep", "rep2", "nu_p", "k_p", "eps", "s",
                       "label"},
                   suite_path);
        ZetaCase zc;
        if (!c.contains("pairing") || !c["pairing"].is_string())
            fail(2, "parse", suite_path + ": case missing 'pairing'");
        zc.pairing = c["pairing"].get<std::string>();
        if (!c.contains("rep"))
            fail(2, "parse", suite_path + ": case missing 'rep'");
        zc.rep = rep_from_json(c["rep"], suite_path);
        if (c.contains("rep2")) zc.rep_p = rep_from_json(c["rep2"], suite_path);
        if (c.contains("nu_p")) zc.nu_p = json_cplx(c["nu_p"], suite_path);
        if (c.contains("k_p")) zc.k_p = json_int(c, "k_p", suite_path);
        if (c.contains("eps")) zc.eps = json_int(c, "eps", suite_path);
        if (!c.contains("s") || !c["s"].is_array() || c["s"].empty())
            fail(2, "parse", suite_path + ": case needs a non-empty 's' list");
        for (const auto& s : c["s"]) zc.s_samples.push_back(json_cplx(s, suite_path));
        if (c.contains("label") && c["label"].is_string())
            zc.label = c["label"].get<std::string>();
        cases.push_back(std::move(zc));
    }

    // Cases are independent; evaluate them on a worker pool and collect the
    // reports in input order.
    std::vector<std::vector<ZetaReport>> partial(cases.size());
    const int threads = std::max(1, std::min<int>(cfg.threads, cases.size()));
    if (threads == 1) {
        for (size_t i = 0; i < cases.size(); ++i)
            partial[i] = verify_zeta({cases[i]}, zcfg);
    } else {
        std::mutex mu;
        size_t next = 0;
        auto worker = [&]() {
            for (;;) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= cases.size()) return;
                    i = next++;
                }
                partial[i] = verify_zeta({cases[i]}, zcfg);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json reports = json::array();
    std::ostringstream csv;
    csv << "pairing,label,s_re,s_im,abs_z,arg_z,abs_expected,rel_error,nodes,"
           "pass,error\r\n";
    bool all_pass = true;
    bool any_nonconv = false, any_other_failure = false;
    const long nodes = long(zcfg.grid1.nodes) * zcfg.grid2.nodes;
    for (const auto& group : partial) {
        for (const auto& r : group) {
            json row;
            row["pairing"] = r.pairing;
            row["label"] = r.label;
            row["s"] = jc(r.s);
            if (r.error.empty()) {
                row["z"] = jc(r.z_value);
                row["expected"] = jc(r.expected);
                row["constant"] = jc(r.constant_used);
                row["rel_error"] = r.rel_error;
            } else {
                row["error"] = r.error;
                if (r.error.find("not decay") != std::string::npos ||
                    r.error.find("onverge") != std::string::npos)
                    any_nonconv = true;
                else
                    any_other_failure = true;
            }
            row["pass"] = r.pass;
            if (!r.pass) {
                all_pass = false;
                if (r.error.empty()) any_other_failure = true;
            }
            csv << r.pairing << "," << r.label << "," << fmt(r.s.real()) << ","
                << fmt(r.s.imag()) << "," << fmt(std::abs(r.z_value)) << ","
                << fmt(std::arg(r.z_value)) << "," << fmt(std::abs(r.expected))
                << "," << fmt(r.rel_error) << "," << nodes << ","
                << (r.pass ? "true" : "false") << ","
                << (r.error.empty() ? "" : "\"" + r.error + "\"") << "\r\n";
            reports.push_back(std::move(row));
        }
    }
    if (cfg.csv) std::cout << csv.str();
    else
        std::cout << json{{"tol", zcfg.tol}, {"reports", std::move(reports)}}
                         .dump()
                  << "\n";
    if (all_pass) return 0;
    return (any_nonconv && !any_other_failure) ? 3 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Archimedean Whittaker functions, local L-factors and "
                 "zeta-integral verification"};
    app.require_subcommand(1);
    Config cfg;
    app.add_flag("--csv", cfg.csv, "CSV output (default JSON)");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (the default)");
    app.add_option("--tol", cfg.tol, "tolerance override");
    app.add_option("--contour-real", cfg.contour_real,
                   "contour real-part override (besselK Mellin-Barnes)");
    app.add_option("--grid-nodes", cfg.grid_nodes,
                   "radial grid node-count override");
    app.add_option("--threads", cfg.threads, "worker threads for suites");

    auto* g = app.add_subcommand("gamma", "Gamma factors and K-Bessel values");
    std::string kind = "gamma", s_text, r_text, z_text, method;
    g->add_option("--kind", kind, "gamma | gammaR | gammaC | besselK");
    g->add_option("--s", s_text, "argument, 're[,im]'");
    g->add_option("--r", r_text, "Bessel order");
    g->add_option("--z", z_text, "Bessel argument (positive real)");
    g->add_option("--method", method, "besselK route or Whittaker route");

    auto* lf = app.add_subcommand("lfactor", "local L-factor table");
    std::string rep_path, rep2_path;
    std::vector<std::string> s_list;
    lf->add_option("--rep", rep_path, "representation JSON file")->required();
    lf->add_option("--rep2", rep2_path, "second representation (tensor)");
    lf->add_option("--s", s_list, "s samples, 're[,im]' (repeatable)");

    auto* wh = app.add_subcommand("whittaker", "radial Whittaker values");
    std::string spec_path, y1_text = "0.25:2:8", y2_text = "1:1:1";
    wh->add_option("--spec", spec_path, "evaluation spec JSON")->required();
    wh->add_option("--y1", y1_text, "y1 axis 'min:max:count' (geometric)");
    wh->add_option("--y2", y2_text, "y2 axis 'min:max:count' (geometric)");
    wh->add_option("--method", method, "evaluation route where available");

    auto* iv = app.add_subcommand("identity-verify",
                                  "Gamma-integral identity suite");
    std::string suite_path;
    iv->add_option("--suite", suite_path, "suite JSON file")->required();

    auto* zv = app.add_subcommand("zeta-verify", "zeta = L verification suite");
    zv->add_option("--suite", suite_path, "suite JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err;
        err["error"] = {{"type", "usage"}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command += " ";
        command += argv[i];
    }
    try {
        std::vector<std::string> inputs;
        for (const std::string& p : {rep_path, rep2_path, spec_path, suite_path})
            if (!p.empty()) inputs.push_back(read_file(p));
        emit_manifest(command, inputs, cfg);
        if (g->parsed())
            return cmd_gamma(kind, s_text, r_text, z_text, method, cfg);
        if (lf->parsed()) return cmd_lfactor(rep_path, rep2_path, s_list, cfg);
        if (wh->parsed())
            return cmd_whittaker(spec_path, y1_text, y2_text, method, cfg);
        if (iv->parsed()) return cmd_identity_verify(suite_path, cfg);
        if (zv->parsed()) return cmd_zeta_verify(suite_path, cfg);
        return 2;
    } catch (const CliError& e) {
        json err;
        err["error"] = {{"type", e.type}, {"message", e.message}};
        std::cout << err.dump() << "\n";
        return e.code;
    } catch (const NumericError& e) {
        json err;
        err["error"] = {{"type", error_type(e)}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return error_code(e);
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"type", "internal"}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 3;
    }
}

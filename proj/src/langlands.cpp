#include "arwhit/langlands.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace arwhit {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw ConstraintViolation(msg);
}

void require_delta(int d) {
    require(d == 0 || d == 1, "langlands: delta must be 0 or 1");
}

// True when v lies (numerically) in 2Z_{<=0} = {0, -2, -4, ...}.
bool in_even_nonpositive(cplx v, double tol = 1e-12) {
    if (std::abs(v.imag()) > tol) return false;
    double n = 2.0 * std::round(0.5 * v.real());
    return n <= tol && std::abs(v.real() - n) < tol;
}

WeilSummand character(cplx nu, int k) {
    return {WeilSummand::Type::character, nu, k};
}

WeilSummand twodim(cplx nu, int kappa) {
    return {WeilSummand::Type::twodim, nu, kappa};
}

bool summand_less(const WeilSummand& a, const WeilSummand& b) {
    auto key = [](const WeilSummand& w) {
        return std::make_tuple(static_cast<int>(w.type), w.k, w.nu.real(),
                               w.nu.imag());
    };
    return key(a) < key(b);
}

void canonicalize(WeilParam& p) {
    std::sort(p.summands.begin(), p.summands.end(), summand_less);
}

// Append the real tensor product of two summands, fully decomposed.
void tensor_real(const WeilSummand& a, const WeilSummand& b,
                 std::vector<WeilSummand>& out) {
    using T = WeilSummand::Type;
    cplx nu = a.nu + b.nu;
    if (a.type == T::character && b.type == T::character) {
        out.push_back(character(nu, std::abs(a.k - b.k)));
        return;
    }
    if (a.type == T::character || b.type == T::character) {
        int kappa = a.type == T::twodim ? a.k : b.k;
        out.push_back(twodim(nu, kappa));
        return;
    }
    out.push_back(twodim(nu, a.k + b.k));
    int diff = std::abs(a.k - b.k);
    if (diff == 0) {
        // The kappa = 0 parameter splits into the two characters.
        out.push_back(character(nu, 0));
        out.push_back(character(nu, 1));
    } else {
        out.push_back(twodim(nu, diff));
    }
}

} // namespace

RealGL2Rep gl2r_principal(cplx nu1, int delta1, cplx nu2, int delta2) {
    require_delta(delta1);
    require_delta(delta2);
    if (delta1 < delta2) {
        std::swap(nu1, nu2);
        std::swap(delta1, delta2);
    }
    require(!in_even_nonpositive(nu1 - nu2 + double(delta1 - delta2) + 1.0),
            "gl2r_principal: reducible parameter (nu1-nu2+delta1-delta2+1 in 2Z<=0)");
    require(!in_even_nonpositive(nu2 - nu1 + double(delta2 - delta1) + 1.0),
            "gl2r_principal: reducible parameter (nu2-nu1+delta2-delta1+1 in 2Z<=0)");
    RealGL2Rep r;
    r.kind = RealGL2Rep::Kind::ps;
    r.nu1 = nu1;
    r.delta1 = delta1;
    r.nu2 = nu2;
    r.delta2 = delta2;
    return r;
}

RealGL2Rep gl2r_discrete(cplx nu, int kappa) {
    require(kappa >= 2, "gl2r_discrete: kappa must be >= 2");
    RealGL2Rep r;
    r.kind = RealGL2Rep::Kind::ds;
    r.nu = nu;
    r.kappa = kappa;
    return r;
}

RealGL3Rep gl3r_principal(cplx nu1, int delta1, cplx nu2, int delta2,
                          cplx nu3, int delta3) {
    std::pair<int, cplx> v[3] = {{delta1, nu1}, {delta2, nu2}, {delta3, nu3}};
    for (auto& [d, nu] : v) require_delta(d);
    std::stable_sort(std::begin(v), std::end(v),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    RealGL3Rep r;
    r.kind = RealGL3Rep::Kind::ps;
    for (int i = 0; i < 3; ++i) {
        r.delta[i] = v[i].first;
        r.nu[i] = v[i].second;
    }
    return r;
}

RealGL3Rep gl3r_generalized(cplx nu1, int kappa1, cplx nu2, int delta2) {
    require(kappa1 >= 2, "gl3r_generalized: kappa1 must be >= 2");
    require_delta(delta2);
    RealGL3Rep r;
    r.kind = RealGL3Rep::Kind::gps;
    r.nu1 = nu1;
    r.kappa1 = kappa1;
    r.nu2 = nu2;
    r.delta2 = delta2;
    return r;
}

ComplexRep glc_principal(std::vector<std::pair<cplx, int>> chars) {
    require(chars.size() >= 1 && chars.size() <= 3,
            "glc_principal: expected 1 to 3 characters");
    std::stable_sort(chars.begin(), chars.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (chars.size() == 2) {
        cplx v = 2.0 * (chars[0].first - chars[1].first) +
                 double(chars[0].second - chars[1].second) + 2.0;
        require(!in_even_nonpositive(v),
                "glc_principal: reducible parameter (2nu1-2nu2+d1-d2+2 in 2Z<=0)");
    }
    ComplexRep r;
    r.n = static_cast<int>(chars.size());
    r.chars = std::move(chars);
    return r;
}

int weil_dim(const WeilParam& p) {
    int d = 0;
    for (const auto& w : p.summands)
        d += w.type == WeilSummand::Type::twodim ? 2 : 1;
    return d;
}

WeilParam weil_param(const RealGL2Rep& rep) {
    WeilParam p{Field::R, {}};
    if (rep.kind == RealGL2Rep::Kind::ps) {
        p.summands = {character(rep.nu1, rep.delta1), character(rep.nu2, rep.delta2)};
    } else {
        p.summands = {twodim(rep.nu, rep.kappa - 1)};
    }
    canonicalize(p);
    return p;
}

WeilParam weil_param(const RealGL3Rep& rep) {
    WeilParam p{Field::R, {}};
    if (rep.kind == RealGL3Rep::Kind::ps) {
        for (int i = 0; i < 3; ++i)
            p.summands.push_back(character(rep.nu[i], rep.delta[i]));
    } else {
        p.summands = {twodim(rep.nu1, rep.kappa1 - 1), character(rep.nu2, rep.delta2)};
    }
    canonicalize(p);
    return p;
}

WeilParam weil_param(const ComplexRep& rep) {
    WeilParam p{Field::C, {}};
    for (const auto& [nu, d] : rep.chars) p.summands.push_back(character(nu, d));
    canonicalize(p);
    return p;
}

WeilParam weil_param(const RepParam& rep) {
    return std::visit([](const auto& r) { return weil_param(r); }, rep);
}

WeilParam tensor(const WeilParam& p, const WeilParam& q) {
    if (p.field != q.field)
        throw FieldMismatch("tensor: parameters live over different fields");
    WeilParam out{p.field, {}};
    for (const auto& a : p.summands) {
        for (const auto& b : q.summands) {
            if (p.field == Field::R) {
                tensor_real(a, b, out.summands);
            } else {
                out.summands.push_back(character(a.nu + b.nu, a.k + b.k));
            }
        }
    }
    canonicalize(out);
    return out;
}

cplx l_factor(const WeilParam& p, cplx s) {
    cplx lg = 0.0;
    for (const auto& w : p.summands) {
        if (p.field == Field::C) {
            lg += log_gamma_c(s + w.nu + 0.5 * std::abs(w.k));
        } else if (w.type == WeilSummand::Type::character) {
            lg += log_gamma_r(s + w.nu + double(w.k));
        } else {
            lg += log_gamma_c(s + w.nu + 0.5 * w.k);
        }
    }
    return std::exp(lg);
}

cplx rankin_l(const RepParam& a, const RepParam& b, cplx s) {
    return l_factor(tensor(weil_param(a), weil_param(b)), s);
}

std::string to_json(const WeilParam& p) {
    nlohmann::ordered_json j;
    j["field"] = p.field == Field::R ? "R" : "C";
    j["summands"] = nlohmann::ordered_json::array();
    for (const auto& w : p.summands) {
        nlohmann::ordered_json s;
        s["type"] = w.type == WeilSummand::Type::character ? "character" : "twodim";
        s["nu"] = {w.nu.real(), w.nu.imag()};
        s["k"] = w.k;
        j["summands"].push_back(s);
    }
    return j.dump();
}

WeilParam weil_param_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    WeilParam p;
    std::string f = j.at("field").get<std::string>();
    require(f == "R" || f == "C", "weil_param_from_json: field must be R or C");
    p.field = f == "R" ? Field::R : Field::C;
    for (const auto& s : j.at("summands")) {
        WeilSummand w;
        std::string t = s.at("type").get<std::string>();
        require(t == "character" || t == "twodim",
                "weil_param_from_json: unknown summand type");
        w.type = t == "character" ? WeilSummand::Type::character
                                  : WeilSummand::Type::twodim;
        auto nu = s.at("nu");
        w.nu = cplx(nu.at(0).get<double>(), nu.at(1).get<double>());
        w.k = s.at("k").get<int>();
        if (p.field == Field::R) {
            if (w.type == WeilSummand::Type::character) require_delta(w.k);
            else require(w.k >= 1, "weil_param_from_json: twodim needs k >= 1");
        } else {
            require(w.type == WeilSummand::Type::character,
                    "weil_param_from_json: complex parameters are sums of characters");
        }
        p.summands.push_back(w);
    }
    canonicalize(p);
    return p;
}

} // namespace arwhit

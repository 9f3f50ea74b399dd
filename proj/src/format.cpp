#include "hs1/format.hpp"

#include <json.hpp>

namespace hs1 {

namespace {

using nlohmann::json;

json mono_json(const SuperMonomial& m) {
    json even = json::array();
    for (const auto& [g, e] : m.even)
        even.push_back({family_info(g.fam).name, g.idx, e});
    json odd = json::array();
    for (const auto& g : m.odd) odd.push_back({family_info(g.fam).name, g.idx});
    return json{{"even", even}, {"odd", odd}};
}

json poly_json(const SuperPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = mono_json(m);
        t["coeff"] = rat_str(c);
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

json tensor_json(const GradedTensor& t) {
    json legs = json::array();
    for (auto k : t.shape()) legs.push_back(k == LegKind::F ? "F" : "U");
    json terms = json::array();
    for (const auto& [ls, c] : t.terms()) {
        json lj = json::array();
        for (const auto& m : ls) lj.push_back(mono_json(m));
        terms.push_back({{"coeff", rat_str(c)}, {"legs", lj}});
    }
    return json{{"arity", t.arity()}, {"legs", legs}, {"terms", terms}};
}

std::string latex_rat(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return "\\frac{" + numerator(r).str() + "}{" + denominator(r).str() + "}";
}

std::string latex_mono(const SuperMonomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    auto emit = [&s](const GeneratorId& g, int e) {
        if (!s.empty()) s += " ";
        const auto& fi = family_info(g.fam);
        if (fi.profile == IndexProfile::no_index) s += fi.name;
        else s += std::string(fi.name) + "_{" + std::to_string(g.idx) + "}";
        if (e != 1) s += "^{" + std::to_string(e) + "}";
    };
    for (const auto& [g, e] : m.even) emit(g, e);
    for (const auto& g : m.odd) emit(g, 1);
    return s;
}

std::string latex_terms(const std::vector<std::pair<std::string, Rational>>& rendered) {
    if (rendered.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [body, c] : rendered) {
        Rational a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (body == "1") s += latex_rat(a);
        else if (a == 1) s += body;
        else s += latex_rat(a) + " " + body;
    }
    return s;
}

std::string latex_poly(const SuperPoly& p) {
    std::vector<std::pair<std::string, Rational>> rendered;
    for (const auto& [m, c] : p.terms()) rendered.push_back({latex_mono(m), c});
    return latex_terms(rendered);
}

std::string latex_tensor(const GradedTensor& t, const char* sep) {
    std::vector<std::pair<std::string, Rational>> rendered;
    for (const auto& [legs, c] : t.terms()) {
        std::string body;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i) body += sep;
            body += latex_mono(legs[i]);
        }
        rendered.push_back({body, c});
    }
    return latex_terms(rendered);
}

} // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "latex") return OutputFormat::latex;
    throw std::invalid_argument("unknown format: " + s);
}

std::string format_f(const FElement& x, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::text: return x.str();
    case OutputFormat::json: return poly_json(x).dump();
    case OutputFormat::latex: return latex_poly(x);
    }
    return {};
}

std::string format_u(const UEnvElement& x, OutputFormat fmt) { return format_f(x.p, fmt); }

std::string format_tensor(const GradedTensor& t, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::text: return t.str();
    case OutputFormat::json: return tensor_json(t).dump();
    case OutputFormat::latex: return latex_tensor(t, " \\ot ");
    }
    return {};
}

std::string format_h(const HElement& h, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::text: return h.str();
    case OutputFormat::json: return tensor_json(h.t).dump();
    case OutputFormat::latex: return latex_tensor(h.t, " \\ot ");
    }
    return {};
}

std::string format_rational(const Rational& r, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return json{{"value", rat_str(r)}}.dump();
    if (fmt == OutputFormat::latex) return latex_rat(r);
    return rat_str(r);
}

std::string format_report(const Report& r, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json checks = json::array();
        for (const auto& c : r.results) {
            json e{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) e["detail"] = c.detail;
            checks.push_back(e);
        }
        return json{{"suite", r.suite},
                    {"pass", r.all_pass()},
                    {"total", r.results.size()},
                    {"failed", r.fail_count()},
                    {"checks", checks}}
            .dump(2);
    }
    std::string s = "suite " + r.suite + ": " + std::to_string(r.results.size()) + " checks, " +
                    std::to_string(r.fail_count()) + " failed\n";
    for (const auto& c : r.results) {
        s += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.name + "\n";
        if (!c.pass && !c.detail.empty()) {
            s += "    counterexample:\n";
            std::string line;
            for (char ch : c.detail) {
                if (ch == '\n') {
                    s += "      " + line + "\n";
                    line.clear();
                } else {
                    line += ch;
                }
            }
            if (!line.empty()) s += "      " + line + "\n";
        }
    }
    return s;
}

} // namespace hs1

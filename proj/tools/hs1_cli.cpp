#include "hs1/expr.hpp"
#include "hs1/format.hpp"
#include "hs1/jets.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace hs1;

int emit_report(const Report& rep, OutputFormat fmt) {
    std::cout << format_report(rep, fmt);
    if (fmt != OutputFormat::json) {
        if (const CheckResult* f = rep.first_failure()) {
            std::cout << "first failing check: " << f->name << "\n";
        }
    }
    return rep.all_pass() ? 0 : 1;
}

Report run_suite(const std::string& suite, int max_index, int max_degree, int samples,
                 std::uint64_t seed, Exec exec) {
    if (suite == "f") return verify_f_hopf(max_index, samples, seed, exec);
    if (suite == "u") return verify_u(samples, seed, exec);
    if (suite == "action") return verify_module_algebra(max_index, samples, seed, exec);
    if (suite == "coaction") return verify_comodule(max_degree, samples, seed, exec);
    if (suite == "compat") return verify_compatibility(max_index, samples, seed, exec);
    if (suite == "hopf") return verify_h_hopf(max_index, samples, seed, exec);
    if (suite == "classical") return classical_check(4, exec);
    if (suite == "jets") return verify_jets(max_index, samples, seed, exec);
    throw CLI::ValidationError("unknown suite: " + suite);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the bicrossproduct super Hopf algebra H^s_1"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    std::string expr1, expr2;

    auto* cmd_normalize = app.add_subcommand("normalize", "parse and canonicalize an expression");
    cmd_normalize->add_option("expr", expr1)->required();

    auto* cmd_coproduct = app.add_subcommand("coproduct", "coproduct of an F, U or H element");
    cmd_coproduct->add_option("expr", expr1)->required();

    auto* cmd_antipode = app.add_subcommand("antipode", "antipode of an F, U or H element");
    cmd_antipode->add_option("expr", expr1)->required();

    auto* cmd_counit = app.add_subcommand("counit", "counit of an F, U or H element");
    cmd_counit->add_option("expr", expr1)->required();

    auto* cmd_act = app.add_subcommand("act", "left action of a U element on an F element");
    cmd_act->add_option("u-expr", expr1)->required();
    cmd_act->add_option("f-expr", expr2)->required();

    auto* cmd_coact = app.add_subcommand("coact", "right coaction on a U element");
    cmd_coact->add_option("u-expr", expr1)->required();

    auto* cmd_hmul = app.add_subcommand("hmul", "product of two H elements (F-part # U-part)");
    cmd_hmul->add_option("h-expr", expr1)->required();
    cmd_hmul->add_option("h-expr2", expr2)->required();

    int max_index = 6, max_degree = 3, samples = 100;
    std::uint64_t seed = 42;
    bool serial = false;
    std::string suite = "all", oracle_kind;

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite,
                           "f, u, action, coaction, compat, hopf, classical, jets, all");
    cmd_verify->add_option("--max-index", max_index, "largest generator index checked");
    cmd_verify->add_option("--max-degree", max_degree, "largest PBW degree (coaction suite)");
    cmd_verify->add_option("--samples", samples, "random samples per property");
    cmd_verify->add_option("--seed", seed, "random seed recorded in the report");
    cmd_verify->add_flag("--serial", serial, "run checks on one thread");

    auto* cmd_oracle = app.add_subcommand("oracle", "compare closed forms against the jet oracle");
    cmd_oracle->add_option("--check", oracle_kind, "coproduct, action, antipode, factorization")
        ->required()
        ->check(CLI::IsMember({"coproduct", "action", "antipode", "factorization"}));
    cmd_oracle->add_option("--max-index", max_index, "largest generator index checked");
    cmd_oracle->add_flag("--serial", serial, "run checks on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputFormat fmt = parse_format(format_name);
    Exec exec = serial ? Exec::serial : Exec::parallel;

    try {
        if (cmd_normalize->parsed()) {
            ExprPtr ast = parse_expression(expr1);
            EValue v = eval_expression(ast);
            if (std::holds_alternative<Rational>(v.v))
                std::cout << format_rational(std::get<Rational>(v.v), fmt) << "\n";
            else if (std::holds_alternative<FElement>(v.v))
                std::cout << format_f(std::get<FElement>(v.v), fmt) << "\n";
            else if (std::holds_alternative<UEnvElement>(v.v))
                std::cout << format_u(std::get<UEnvElement>(v.v), fmt) << "\n";
            else if (std::holds_alternative<HElement>(v.v))
                std::cout << format_h(std::get<HElement>(v.v), fmt) << "\n";
            else
                std::cout << format_tensor(std::get<GradedTensor>(v.v), fmt) << "\n";
            return 0;
        }
        if (cmd_coproduct->parsed()) {
            if (expr1.find('#') != std::string::npos) {
                std::cout << format_tensor(h_coproduct(parse_h(expr1)), fmt) << "\n";
                return 0;
            }
            auto el = parse_element(expr1);
            GradedTensor t = std::holds_alternative<FElement>(el)
                                 ? f_coproduct(std::get<FElement>(el))
                                 : u_coproduct(std::get<UEnvElement>(el));
            std::cout << format_tensor(t, fmt) << "\n";
            return 0;
        }
        if (cmd_antipode->parsed()) {
            if (expr1.find('#') != std::string::npos) {
                std::cout << format_h(h_antipode(parse_h(expr1)), fmt) << "\n";
                return 0;
            }
            auto el = parse_element(expr1);
            if (std::holds_alternative<FElement>(el))
                std::cout << format_f(f_antipode(std::get<FElement>(el)), fmt) << "\n";
            else
                std::cout << format_u(u_antipode(std::get<UEnvElement>(el)), fmt) << "\n";
            return 0;
        }
        if (cmd_counit->parsed()) {
            Rational r;
            if (expr1.find('#') != std::string::npos) {
                r = h_counit(parse_h(expr1));
            } else {
                auto el = parse_element(expr1);
                r = std::holds_alternative<FElement>(el)
                        ? f_counit(std::get<FElement>(el))
                        : u_counit(std::get<UEnvElement>(el));
            }
            std::cout << format_rational(r, fmt) << "\n";
            return 0;
        }
        if (cmd_act->parsed()) {
            std::cout << format_f(act(parse_u(expr1), parse_f(expr2)), fmt) << "\n";
            return 0;
        }
        if (cmd_coact->parsed()) {
            std::cout << format_tensor(coact(parse_u(expr1)), fmt) << "\n";
            return 0;
        }
        if (cmd_hmul->parsed()) {
            std::cout << format_h(h_mul(parse_h(expr1), parse_h(expr2)), fmt) << "\n";
            return 0;
        }
        if (cmd_verify->parsed()) {
            static const char* all_suites[] = {"f",      "u",    "action",    "coaction",
                                               "compat", "hopf", "classical", "jets"};
            int rc = 0;
            if (suite == "all") {
                for (const char* s : all_suites)
                    rc |= emit_report(run_suite(s, max_index, max_degree, samples, seed, exec),
                                      fmt);
            } else {
                rc = emit_report(run_suite(suite, max_index, max_degree, samples, seed, exec),
                                 fmt);
            }
            return rc;
        }
        if (cmd_oracle->parsed()) {
            std::vector<Check> all = jets_checks(max_index, 20, 42);
            std::vector<Check> picked;
            auto starts_with = [](const std::string& s, const char* p) {
                return s.rfind(p, 0) == 0;
            };
            for (auto& c : all) {
                bool want = false;
                if (oracle_kind == "coproduct") want = starts_with(c.name, "oracle-coproduct");
                else if (oracle_kind == "action")
                    want = starts_with(c.name, "oracle-action");
                else if (oracle_kind == "antipode")
                    want = starts_with(c.name, "oracle-antipode");
                else
                    want = starts_with(c.name, "factorize") ||
                           starts_with(c.name, "group-actions") ||
                           starts_with(c.name, "lemma") || starts_with(c.name, "compose");
                if (want) picked.push_back(std::move(c));
            }
            return emit_report(run_checks("oracle-" + oracle_kind, picked, exec), fmt);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

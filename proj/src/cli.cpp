#include "folinv/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "folinv/blowup.hpp"
#include "folinv/corpus.hpp"
#include "folinv/invariants.hpp"
#include "folinv/parse.hpp"
#include "folinv/puiseux.hpp"

#ifndef FOLINV_DEFAULT_CORPUS
#define FOLINV_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace folinv {

const char* default_corpus_path() { return FOLINV_DEFAULT_CORPUS; }

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

Separatrix make_branch(const Poly& f, bool assume_irreducible) {
    if (assume_irreducible) return Separatrix::make(f, Irreducibility::Assumed);
    switch (certify_branch(f)) {
        case BranchCertificate::Yes:
            return Separatrix::make(f, Irreducibility::Certified);
        case BranchCertificate::No:
            throw InvalidInput(
                "curve is reducible at the origin; pass --assume-irreducible to "
                "compute the invariants of the (reducible) pair anyway");
        case BranchCertificate::Unknown:
        default:
            throw InvalidInput(
                "irreducibility undecided over the rationals; pass "
                "--assume-irreducible to proceed");
    }
}

void print_invariant_report(std::ostream& out, const InvariantReport& r) {
    out << "nu_F    = " << r.nu_F << "\n"
        << "nu_B    = " << r.nu_B << (r.smooth ? "  (smooth branch)" : "") << "\n"
        << "mu_B    = " << r.mu_B << "\n"
        << "tau_B   = " << r.tau_B << "\n"
        << "mu_FB   = " << r.mu_FB << "\n"
        << "tau_FB  = " << r.tau_FB << "\n"
        << "gsv     = " << r.gsv << "\n"
        << "slack   = " << r.slack << "  (4*tau_FB - 3*mu_FB - gsv)\n"
        << "branch  = "
        << (r.irreducibility == Irreducibility::Certified ? "certified irreducible"
                                                           : "assumed irreducible")
        << "\n"
        << "identities: difference " << (r.identity_checks.difference_identity ? "ok" : "FAIL")
        << ", decomposition " << (r.identity_checks.milnor_decomposition ? "ok" : "FAIL")
        << ", tau<=mu " << (r.identity_checks.tjurina_bounded_by_multiplicity ? "ok" : "FAIL")
        << ", smooth-case " << (r.identity_checks.smooth_equalities ? "ok" : "FAIL") << "\n";
}

void print_divisor_report(std::ostream& out, const DivisorReport& r) {
    out << "mu_div  = " << r.mu_div << "\n"
        << "gsv_div = " << r.gsv_div << "\n"
        << "T       = " << r.T << "\n"
        << "rhs     = " << r.rhs << "  (4*T - 3*mu_div)\n"
        << "strict  = " << (r.strict ? "true" : "false") << "\n";
}

void print_blowup_result(std::ostream& out, const BlowupResult& r) {
    out << "chart         = " << (r.chart == Chart::Chart1 ? 1 : 2) << "\n";
    if (r.center) out << "center        = " << rat_to_string(*r.center) << "\n";
    out << "divided_power = " << r.divided_power << "\n"
        << "dicritical    = " << (r.dicritical ? "true" : "false") << "\n"
        << "m_p           = " << r.m_p << "\n"
        << "strict form   = "
        << to_string(FormExpr{r.strict_form.p(), r.strict_form.q()}) << "\n";
}

nlohmann::json blowup_to_json(const BlowupResult& r) {
    nlohmann::json j{
        {"chart", r.chart == Chart::Chart1 ? 1 : 2},
        {"divided_power", r.divided_power},
        {"dicritical", r.dicritical},
        {"m_p", r.m_p},
        {"dx", to_string(r.strict_form.p())},
        {"dy", to_string(r.strict_form.q())},
    };
    j["center"] = r.center ? nlohmann::json(rat_to_string(*r.center)) : nlohmann::json(nullptr);
    return j;
}

struct CommonOptions {
    std::string form_text;
    std::string curve_text;
    bool assume_irreducible = false;
    bool json = false;
};

int cmd_inv(const CommonOptions& opt, const std::string& param_x,
            const std::string& param_y, unsigned param_order, std::ostream& out) {
    FormExpr w = parse_one_form(opt.form_text);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);
    Poly f = parse_polynomial(opt.curve_text);
    Separatrix sep = make_branch(f, opt.assume_irreducible);
    InvariantReport rep = check_theorem(F, sep);

    bool param_agrees = true;
    nlohmann::json param_json;
    if (!param_x.empty() || !param_y.empty()) {
        Poly xs = param_x.empty() ? Poly() : parse_series(param_x);
        Poly ys = param_y.empty() ? Poly() : parse_series(param_y);
        std::uint32_t n = param_order ? param_order : default_truncation(f);
        Parametrization gamma = Parametrization::make(xs, ys, n);
        if (!verify_parametrization(f, gamma))
            throw InvalidInput("parametrization does not satisfy the curve equation");
        std::uint64_t mu = mult_via_parametrization(F, gamma);
        param_agrees = (mu == rep.mu_FB);
        param_json = {{"mu_via_parametrization", mu}, {"agrees", param_agrees}};
    }

    if (opt.json) {
        nlohmann::json j = rep.to_json();
        if (!param_json.is_null()) j["parametrization"] = param_json;
        out << j.dump(2) << "\n";
    } else {
        print_invariant_report(out, rep);
        if (!param_json.is_null())
            out << "mu via parametrization = " << param_json["mu_via_parametrization"]
                << (param_agrees ? "  (agrees)" : "  (DISAGREES)") << "\n";
    }
    bool ok = rep.theorem_holds() && rep.identity_checks.all() && param_agrees;
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_theorem(const CommonOptions& opt, std::ostream& out) {
    FormExpr w = parse_one_form(opt.form_text);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);
    Separatrix sep = make_branch(parse_polynomial(opt.curve_text), opt.assume_irreducible);
    InvariantReport rep = check_theorem(F, sep);
    bool ok = rep.theorem_holds() && rep.identity_checks.all();
    if (opt.json) {
        nlohmann::json j = rep.to_json();
        j["pass"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << (ok ? "PASS" : "FAIL") << "  gsv = " << rep.gsv
            << ", 4*tau - 3*mu = " << (4 * (std::int64_t)rep.tau_FB - 3 * (std::int64_t)rep.mu_FB)
            << ", slack = " << rep.slack << (rep.smooth ? "  (smooth: equality expected)" : "")
            << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_corollary(const CommonOptions& opt, const std::string& divisor_text,
                  std::ostream& out) {
    FormExpr w = parse_one_form(opt.form_text);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);
    std::vector<SeparatrixDivisor::Component> comps;
    for (const auto& term : parse_divisor(divisor_text))
        comps.push_back(
            {make_branch(parse_polynomial(term.curve_text), opt.assume_irreducible),
             term.coefficient});
    DivisorReport rep = check_corollary(F, SeparatrixDivisor::make(std::move(comps)));
    if (opt.json) {
        nlohmann::json j = rep.to_json();
        j["pass"] = rep.strict;
        out << j.dump(2) << "\n";
    } else {
        print_divisor_report(out, rep);
        out << (rep.strict ? "PASS" : "FAIL") << "  gsv_div = " << rep.gsv_div
            << " < 4*T - 3*mu_div = " << rep.rhs << (rep.strict ? "" : "  (not strict)") << "\n";
    }
    return rep.strict ? kExitOk : kExitMathFailure;
}

int cmd_blowup(const CommonOptions& opt, int chart_no, std::ostream& out) {
    FormExpr w = parse_one_form(opt.form_text);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);
    if (opt.curve_text.empty()) {
        BlowupResult r =
            blowup_foliation(F, chart_no == 2 ? Chart::Chart2 : Chart::Chart1);
        if (opt.json)
            out << blowup_to_json(r).dump(2) << "\n";
        else
            print_blowup_result(out, r);
        return kExitOk;
    }
    Poly f = parse_polynomial(opt.curve_text);
    PairBlowup pb = blowup_pair(F, f);
    if (opt.json) {
        nlohmann::json j = blowup_to_json(pb.result);
        j["strict_branch"] = to_string(pb.branch);
        out << j.dump(2) << "\n";
    } else {
        print_blowup_result(out, pb.result);
        out << "strict branch = " << to_string(pb.branch) << "\n";
    }
    return kExitOk;
}

int cmd_resolve(const CommonOptions& opt, unsigned max_steps, bool dot, std::ostream& out) {
    FormExpr w = parse_one_form(opt.form_text);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);
    Separatrix sep = make_branch(parse_polynomial(opt.curve_text), opt.assume_irreducible);
    ResolutionTrace trace = resolve_branch(F, sep, max_steps);

    bool ok = true;
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i)
        if (trace.steps[i + 1].phi < trace.steps[i].phi) ok = false;
    if (trace.steps.back().phi != 0 || trace.steps.back().branch_ord != 1) ok = false;

    if (dot) {
        out << trace.to_dot();
    } else if (opt.json) {
        nlohmann::json j = trace.to_json();
        j["pass"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "step  ord  mu   tau  gsv  phi\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& s = trace.steps[i];
            out << i << "     " << s.branch_ord << "    " << s.mu << "    " << s.tau << "    "
                << s.gsv << "    " << s.phi;
            if (s.arrival)
                out << "   (chart " << (s.arrival->chart == Chart::Chart1 ? 1 : 2) << ", center "
                    << rat_to_string(s.arrival->center) << ", k " << s.arrival->divided_power
                    << (s.arrival->dicritical ? ", dicritical" : "") << ")";
            out << "\n";
        }
        out << (ok ? "PASS" : "FAIL") << "  phi nondecreasing to 0 at a smooth branch\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_examples(const std::string& corpus_path, const std::string& filter, bool json,
                 std::ostream& out) {
    std::vector<CorpusEntry> entries = load_corpus(corpus_path);
    bool all_ok = true;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& entry : entries) {
        if (!filter.empty() && entry.name.find(filter) == std::string::npos) continue;
        CorpusOutcome outcome = replay_entry(entry);
        all_ok = all_ok && outcome.ok;
        if (json) {
            nlohmann::json j{{"name", outcome.name}, {"ok", outcome.ok}};
            nlohmann::json diffs = nlohmann::json::array();
            for (const auto& d : outcome.diffs)
                diffs.push_back({{"where", d.where},
                                 {"key", d.key},
                                 {"expected", d.expected},
                                 {"got", d.got}});
            j["diffs"] = std::move(diffs);
            j["reports"] = outcome.reports;
            results.push_back(std::move(j));
        } else {
            out << (outcome.ok ? "ok   " : "DIFF ") << outcome.name << "\n";
            for (const auto& d : outcome.diffs)
                out << "      " << d.where << ": " << d.key << " expected " << d.expected
                    << ", got " << d.got << "\n";
        }
    }
    if (json) out << results.dump(2) << "\n";
    return all_ok ? kExitOk : kExitMathFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"local invariants of plane foliation germs"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string divisor_text, param_x, param_y, filter;
    std::string corpus_path = default_corpus_path();
    unsigned max_steps = 30, param_order = 0;
    int chart_no = 1;
    bool dot = false;

    auto add_form = [&](CLI::App* cmd, bool need_curve) {
        cmd->add_option("--form", opt.form_text, "1-form, e.g. \"2x dy - 3y dx\"")->required();
        auto* c = cmd->add_option("--curve", opt.curve_text, "curve equation, e.g. \"y^2 - x^3\"");
        if (need_curve) c->required();
        cmd->add_flag("--assume-irreducible", opt.assume_irreducible,
                      "skip the rational irreducibility certificate");
        cmd->add_flag("--json", opt.json, "machine-readable output");
    };

    CLI::App* inv = app.add_subcommand("inv", "invariant report for a foliation/branch pair");
    add_form(inv, true);
    inv->add_option("--param-x", param_x, "truncated series for x(t)");
    inv->add_option("--param-y", param_y, "truncated series for y(t)");
    inv->add_option("--param-order", param_order, "truncation order of the series");

    CLI::App* theorem =
        app.add_subcommand("theorem", "check gsv <= 4*tau - 3*mu on a branch");
    add_form(theorem, true);

    CLI::App* corollary =
        app.add_subcommand("corollary", "check gsv < 4*T - 3*mu on an effective reduced divisor");
    add_form(corollary, false);
    corollary->add_option("--divisor", divisor_text, "divisor, e.g. \"[x] + [y^2-x^3]\"")
        ->required();

    CLI::App* blowup = app.add_subcommand("blowup", "strict transform under one point blow-up");
    add_form(blowup, false);
    blowup->add_option("--chart", chart_no, "chart when no curve is given (1 or 2)")
        ->check(CLI::Range(1, 2));

    CLI::App* resolve = app.add_subcommand("resolve", "blow up until the branch is smooth");
    add_form(resolve, true);
    resolve->add_option("--max-steps", max_steps, "blow-up step limit");
    resolve->add_flag("--dot", dot, "emit the resolution chain as DOT");

    CLI::App* examples = app.add_subcommand("examples", "replay the golden corpus");
    examples->add_option("--filter", filter, "only entries whose name contains this substring");
    examples->add_flag("--json", opt.json, "machine-readable output");
    examples->add_option("--corpus", corpus_path, "path to the corpus JSON file");

    try {
        std::vector<std::string> argv_like = args;
        std::reverse(argv_like.begin(), argv_like.end());
        app.parse(argv_like); // CLI11 consumes reversed argument lists
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (inv->parsed()) return cmd_inv(opt, param_x, param_y, param_order, out);
        if (theorem->parsed()) return cmd_theorem(opt, out);
        if (corollary->parsed()) return cmd_corollary(opt, divisor_text, out);
        if (blowup->parsed()) return cmd_blowup(opt, chart_no, out);
        if (resolve->parsed()) return cmd_resolve(opt, max_steps, dot, out);
        if (examples->parsed()) return cmd_examples(corpus_path, filter, opt.json, out);
        err << "error: no subcommand\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace folinv

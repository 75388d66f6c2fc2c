#include "folinv/corpus.hpp"

#include <fstream>

#include "folinv/invariants.hpp"
#include "folinv/parse.hpp"
#include "folinv/puiseux.hpp"

namespace folinv {

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open corpus file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<CorpusEntry> entries;
    for (const auto& e : doc.at("entries")) {
        CorpusEntry entry;
        entry.name = e.at("name").get<std::string>();
        entry.source = e.value("source", std::string());
        entry.form = e.at("form").get<std::string>();
        for (const auto& c : e.value("curves", nlohmann::json::array())) {
            CorpusCurve cc;
            cc.curve = c.at("curve").get<std::string>();
            cc.assume_irreducible = c.value("assume_irreducible", false);
            cc.expected = c.value("expected", nlohmann::json::object());
            cc.origin = c.value("origin", std::string());
            entry.curves.push_back(std::move(cc));
        }
        if (e.contains("divisor")) {
            CorpusDivisor d;
            d.divisor = e.at("divisor").at("divisor").get<std::string>();
            d.expected = e.at("divisor").value("expected", nlohmann::json::object());
            d.origin = e.at("divisor").value("origin", std::string());
            entry.divisor = std::move(d);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace {

Separatrix build_separatrix(const Poly& f, bool assume_irreducible) {
    if (assume_irreducible) return Separatrix::make(f, Irreducibility::Assumed);
    BranchCertificate cert = certify_branch(f);
    if (cert != BranchCertificate::Yes)
        throw InvalidInput(
            "branch irreducibility not certified; mark the component assume_irreducible");
    return Separatrix::make(f, Irreducibility::Certified);
}

void diff_json(const nlohmann::json& expected, const nlohmann::json& got,
               const std::string& where, CorpusOutcome& outcome) {
    for (const auto& [key, want] : expected.items()) {
        if (!got.contains(key)) {
            outcome.ok = false;
            outcome.diffs.push_back({where, key, want.dump(), "<missing>"});
            continue;
        }
        if (got.at(key) != want) {
            outcome.ok = false;
            outcome.diffs.push_back({where, key, want.dump(), got.at(key).dump()});
        }
    }
}

} // namespace

CorpusOutcome replay_entry(const CorpusEntry& entry) {
    CorpusOutcome outcome;
    outcome.name = entry.name;
    FormExpr w = parse_one_form(entry.form);
    Foliation F = Foliation::make(w.dx_part, w.dy_part);

    nlohmann::json curve_reports = nlohmann::json::array();
    for (const auto& cc : entry.curves) {
        Poly f = parse_polynomial(cc.curve);
        Separatrix sep = build_separatrix(f, cc.assume_irreducible);
        InvariantReport rep = check_theorem(F, sep);
        nlohmann::json rj = rep.to_json();
        diff_json(cc.expected, rj, "curve " + cc.curve, outcome);
        if (!rep.theorem_holds() || !rep.identity_checks.all()) {
            outcome.ok = false;
            outcome.diffs.push_back({"curve " + cc.curve, "theorem_holds",
                                     "true", rep.theorem_holds() ? "identity failure" : "false"});
        }
        curve_reports.push_back({{"curve", cc.curve}, {"report", std::move(rj)}});
    }
    outcome.reports["curves"] = std::move(curve_reports);

    if (entry.divisor) {
        std::vector<SeparatrixDivisor::Component> comps;
        for (const auto& term : parse_divisor(entry.divisor->divisor)) {
            Poly f = parse_polynomial(term.curve_text);
            bool assume = false;
            for (const auto& cc : entry.curves)
                if (parse_polynomial(cc.curve) == f) assume = cc.assume_irreducible;
            comps.push_back({build_separatrix(f, assume), term.coefficient});
        }
        DivisorReport rep = divisor_invariants(F, SeparatrixDivisor::make(std::move(comps)));
        nlohmann::json rj = rep.to_json();
        diff_json(entry.divisor->expected, rj, "divisor", outcome);
        outcome.reports["divisor"] = std::move(rj);
    }
    return outcome;
}

} // namespace folinv

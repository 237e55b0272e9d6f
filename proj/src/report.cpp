#include "nmres/report.hpp"

#include <json.hpp>

#include "nmres/errors.hpp"

namespace nmres {

using json = nlohmann::ordered_json;

bool ReportDocument::all_matched() const {
    for (const auto& s : identities)
        if (s.verdict != "Match") return false;
    for (const auto& f : functionals)
        if (!f.matched()) return false;
    return true;
}

ReportDocument::IdentitySummary summarize_cases(const Identity& id,
                                                const std::vector<OracleCase>& cases) {
    ReportDocument::IdentitySummary s;
    s.tag = id.tag;
    s.description = id.description;
    s.trials = static_cast<int>(cases.size());
    for (const auto& c : cases) {
        if (c.matched()) {
            ++s.matches;
        } else if (!s.first_mismatch) {
            s.first_mismatch = ReportDocument::MismatchWitness{
                c.instantiation, c.closed_form.to_string(), c.brute_force.to_string(),
                c.delta.to_string()};
        }
    }
    s.verdict = (s.matches == s.trials) ? "Match" : "Mismatch";
    return s;
}

namespace {

json identity_json(const ReportDocument::IdentitySummary& s) {
    json j;
    j["tag"] = s.tag;
    j["description"] = s.description;
    j["trials"] = s.trials;
    j["matches"] = s.matches;
    j["verdict"] = s.verdict;
    if (s.first_mismatch) {
        json w;
        w["instantiation"] = s.first_mismatch->instantiation;
        w["closed_form"] = s.first_mismatch->closed_form;
        w["brute_force"] = s.first_mismatch->brute_force;
        w["delta"] = s.first_mismatch->delta;
        j["first_mismatch"] = w;
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

json functional_json(const ResidueReport& r) {
    json j;
    j["functional"] = r.functional;
    j["derived"] = r.derived;
    j["claimed"] = r.claimed;
    j["verdict"] = r.verdict;
    j["delta"] = r.delta;
    json echoes = json::array();
    for (const auto& [label, text] : r.echoes) {
        json e;
        e["label"] = label;
        e["text"] = text;
        echoes.push_back(e);
    }
    j["echoes"] = echoes;
    j["notes"] = r.notes;
    json checks = json::array();
    for (const auto& [point, agree] : r.cross_checks) {
        json c;
        c["point"] = point;
        c["agree"] = agree;
        checks.push_back(c);
    }
    j["cross_checks"] = checks;
    return j;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
    json j;
    j["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
    j["command"] = doc.command;
    j["seed"] = doc.seed;
    j["trials"] = doc.trials;
    json ids = json::array();
    for (const auto& s : doc.identities) ids.push_back(identity_json(s));
    j["identities"] = ids;
    json fns = json::array();
    for (const auto& f : doc.functionals) fns.push_back(functional_json(f));
    j["functionals"] = fns;
    return j.dump(2) + "\n";
}

std::string to_markdown(const ReportDocument& doc) {
    std::string md;
    md += "# " + std::string(kEngineName) + " report\n\n";
    md += "- engine: " + std::string(kEngineName) + " " + kEngineVersion + "\n";
    md += "- command: " + doc.command + "\n";
    md += "- seed: " + std::to_string(doc.seed) + "\n";
    md += "- trials: " + std::to_string(doc.trials) + "\n";
    if (!doc.identities.empty()) {
        md += "\n## Identities\n\n";
        md += "| tag | trials | matches | verdict |\n|---|---|---|---|\n";
        for (const auto& s : doc.identities)
            md += "| " + s.tag + " | " + std::to_string(s.trials) + " | " +
                  std::to_string(s.matches) + " | " + s.verdict + " |\n";
        for (const auto& s : doc.identities) {
            if (!s.first_mismatch) continue;
            md += "\n### " + s.tag + " first mismatch\n\n";
            md += "- identity: " + s.description + "\n";
            md += "- instantiation: " + s.first_mismatch->instantiation + "\n";
            md += "- closed form: " + s.first_mismatch->closed_form + "\n";
            md += "- brute force: " + s.first_mismatch->brute_force + "\n";
            md += "- delta: " + s.first_mismatch->delta + "\n";
        }
    }
    if (!doc.functionals.empty()) {
        md += "\n## Functionals\n";
        for (const auto& f : doc.functionals) {
            md += "\n### " + f.functional + "\n\n";
            md += "- derived: " + f.derived + "\n";
            md += "- claimed: " + f.claimed + "\n";
            md += "- verdict: " + f.verdict + "\n";
            if (!f.delta.empty()) md += "- delta: " + f.delta + "\n";
            for (const auto& [label, text] : f.echoes)
                md += "- echo (" + label + "): " + text + "\n";
            for (const auto& n : f.notes) md += "- note: " + n + "\n";
            for (const auto& [point, agree] : f.cross_checks)
                md += "- cross-check " + point + ": " +
                      (agree ? std::string("agree") : std::string("DISAGREE")) + "\n";
        }
    }
    return md;
}

ReportDocument parse_report(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw EngineError(std::string("report is not valid JSON: ") + e.what());
    }
    auto need = [](const json& o, const char* key) -> const json& {
        if (!o.contains(key)) throw EngineError(std::string("report misses key ") + key);
        return o.at(key);
    };
    ReportDocument doc;
    const json& eng = need(j, "engine");
    if (need(eng, "name").get<std::string>() != kEngineName)
        throw EngineError("report from a different engine");
    doc.command = need(j, "command").get<std::string>();
    doc.seed = need(j, "seed").get<std::uint64_t>();
    doc.trials = need(j, "trials").get<int>();
    for (const json& s : need(j, "identities")) {
        ReportDocument::IdentitySummary sum;
        sum.tag = need(s, "tag").get<std::string>();
        sum.description = need(s, "description").get<std::string>();
        sum.trials = need(s, "trials").get<int>();
        sum.matches = need(s, "matches").get<int>();
        sum.verdict = need(s, "verdict").get<std::string>();
        const json& w = need(s, "first_mismatch");
        if (!w.is_null()) {
            sum.first_mismatch = ReportDocument::MismatchWitness{
                need(w, "instantiation").get<std::string>(),
                need(w, "closed_form").get<std::string>(),
                need(w, "brute_force").get<std::string>(),
                need(w, "delta").get<std::string>()};
        }
        doc.identities.push_back(std::move(sum));
    }
    for (const json& f : need(j, "functionals")) {
        ResidueReport r;
        r.functional = need(f, "functional").get<std::string>();
        r.derived = need(f, "derived").get<std::string>();
        r.claimed = need(f, "claimed").get<std::string>();
        r.verdict = need(f, "verdict").get<std::string>();
        r.delta = need(f, "delta").get<std::string>();
        for (const json& e : need(f, "echoes"))
            r.echoes.emplace_back(need(e, "label").get<std::string>(),
                                  need(e, "text").get<std::string>());
        for (const json& n : need(f, "notes")) r.notes.push_back(n.get<std::string>());
        for (const json& c : need(f, "cross_checks"))
            r.cross_checks.emplace_back(need(c, "point").get<std::string>(),
                                        need(c, "agree").get<bool>());
        doc.functionals.push_back(std::move(r));
    }
    return doc;
}

}  // namespace nmres

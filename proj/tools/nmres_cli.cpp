#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "nmres/boundary.hpp"
#include "nmres/errors.hpp"
#include "nmres/interior.hpp"
#include "nmres/oracle.hpp"
#include "nmres/report.hpp"

using namespace nmres;

namespace {

// exit codes: 0 every comparison matched, 1 engine fault,
// 2 reproducible disagreement with a claimed closed form
constexpr int kExitMatch = 0;
constexpr int kExitEngineError = 1;
constexpr int kExitMismatch = 2;

GaussRat parse_rational(const std::string& text) {
    try {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw EngineError("zero denominator in '" + text + "'");
        q.canonicalize();
        return GaussRat(q);
    } catch (const std::invalid_argument&) {
        throw EngineError("cannot parse rational '" + text + "'");
    }
}

void emit(const ReportDocument& doc, const std::string& format, const std::string& out) {
    std::string body = (format == "md") ? to_markdown(doc) : to_json(doc);
    if (out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw EngineError("cannot open output file " + out);
    f << body;
}

int run_verify(int trials, std::uint64_t seed, const std::string& only,
               const std::string& format, const std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> tags = tags_with_prefix(only);
    if (tags.empty()) throw UnknownTag("no identity tag matches '" + only + "'");

    ReportDocument doc;
    doc.command = "verify-lemmas";
    doc.seed = seed;
    doc.trials = trials;
    for (const auto& tag : tags) {
        const Identity& id = find_identity(tag);
        doc.identities.push_back(summarize_cases(id, check_identity(tag, trials, seed)));
    }
    emit(doc, format, out);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "verify-lemmas: " << tags.size() << " identities, " << trials
              << " trials each, " << ms << " ms\n";
    return doc.all_matched() ? kExitMatch : kExitMismatch;
}

int run_derive(const std::string& functional, const std::string& a0_text,
               const std::string& b0_text, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    bool sym_a = a0_text == "symbolic", sym_b = b0_text == "symbolic";
    if (sym_a != sym_b)
        throw DegenerateParameters("--a0 and --b0 must both be rational or both symbolic");
    Params p = sym_a ? Params::symbolic()
                     : Params::numeric(parse_rational(a0_text), parse_rational(b0_text));

    ReportDocument doc;
    doc.command = "derive";
    doc.seed = seed;
    switch (parse_functional(functional)) {
        case Functional::Torsion:
            doc.functionals.push_back(spectral_torsion(p, seed).report);
            break;
        case Functional::OneForm:
            doc.functionals.push_back(spectral_one_form(p, seed).report);
            break;
        case Functional::Boundary:
            doc.functionals.push_back(boundary_torsion(p, seed).report);
            break;
        case Functional::Sanity:
            doc.functionals.push_back(wres_laplacian_sanity(p));
            break;
    }
    emit(doc, format, out);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "derive " << functional << ": " << ms << " ms\n";
    return doc.all_matched() ? kExitMatch : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic derivation and verification of spectral torsion and "
        "spectral one-form functionals of weighted Hodge operators on "
        "four-manifolds, interior and boundary terms"};
    app.require_subcommand(1);

    int trials = 100;
    std::uint64_t seed = Rng::kDefaultSeed;
    std::string only, format = "json", out;

    CLI::App* verify = app.add_subcommand(
        "verify-lemmas", "check every registered trace identity against brute force");
    verify->add_option("--trials", trials, "seeded trials per identity")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--only", only, "restrict to tags with this prefix");
    verify->add_option("--format", format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--out", out, "write the report to a file");

    std::string functional, a0_text = "symbolic", b0_text = "symbolic";
    CLI::App* derive = app.add_subcommand(
        "derive", "derive a residue functional and compare with its claimed form");
    derive->add_option("functional", functional, "torsion | one-form | boundary | sanity")
        ->required();
    derive->add_option("--a0", a0_text, "rational value or 'symbolic'");
    derive->add_option("--b0", b0_text, "rational value or 'symbolic'");
    derive->add_flag_callback("--symbolic", [&] {
        a0_text = "symbolic";
        b0_text = "symbolic";
    });
    derive->add_option("--seed", seed, "random seed for cross-check points");
    derive->add_option("--format", format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));
    derive->add_option("--out", out, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(trials, seed, only, format, out);
        return run_derive(functional, a0_text, b0_text, seed, format, out);
    } catch (const EngineError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return kExitEngineError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitEngineError;
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmres/identities.hpp"
#include "nmres/residue_report.hpp"

namespace nmres {

inline constexpr const char* kEngineName = "nmres";
inline constexpr const char* kEngineVersion = "1.0.0";

/// Aggregated result of one verify or derive command. Byte-deterministic
/// for fixed (version, seed, flags): no timestamps or machine data inside.
struct ReportDocument {
    std::string command;  // "verify-lemmas" | "derive"
    std::uint64_t seed = 0;
    int trials = 0;

    struct MismatchWitness {
        std::string instantiation;
        std::string closed_form;
        std::string brute_force;
        std::string delta;
    };

    struct IdentitySummary {
        std::string tag;
        std::string description;
        int trials = 0;
        int matches = 0;
        std::string verdict;  // "Match" | "Mismatch"
        // first discrepancy, kept verbatim for reproduction
        std::optional<MismatchWitness> first_mismatch;
    };
    std::vector<IdentitySummary> identities;
    std::vector<ResidueReport> functionals;

    bool all_matched() const;
};

ReportDocument::IdentitySummary summarize_cases(const Identity& id,
                                                const std::vector<OracleCase>& cases);

std::string to_json(const ReportDocument& doc);
std::string to_markdown(const ReportDocument& doc);

/// Strict schema parse of to_json output; throws EngineError on shape
/// violations. to_json(parse_report(to_json(d))) == to_json(d).
ReportDocument parse_report(const std::string& json_text);

}  // namespace nmres

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nmres/fiber.hpp"
#include "nmres/rng.hpp"

namespace nmres {

/// One seeded comparison of a claimed closed form against the brute-force
/// 16x16 matrix trace. A Mismatch is a finding about the closed form; the
/// brute-force value is authoritative.
struct OracleCase {
    std::string tag;
    std::string instantiation;    // the rational vectors drawn
    ParamScalar closed_form;      // claimed value at the instantiation
    ParamScalar brute_force;      // matrix-trace value
    std::string verdict;          // "Match" | "Mismatch"
    ParamScalar delta;            // brute_force - closed_form

    bool matched() const { return verdict == "Match"; }
};

/// A registered trace identity (or matrix relation, with values reported
/// through a first-discrepancy witness).
struct Identity {
    std::string tag;
    std::string description;
    std::function<OracleCase(Rng&, const Params&)> run;
};

/// Every identity the engine can check, in a fixed order.
const std::vector<Identity>& identity_catalog();

/// Lookup by exact tag; throws UnknownTag.
const Identity& find_identity(const std::string& tag);

/// Tags matching a prefix filter (empty prefix selects all).
std::vector<std::string> tags_with_prefix(const std::string& prefix);

}  // namespace nmres

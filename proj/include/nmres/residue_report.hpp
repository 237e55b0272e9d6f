#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nmres/param_scalar.hpp"

namespace nmres {

/// Outcome of comparing a derived closed-form coefficient against the
/// claimed one. A Mismatch is a reproducible finding about the claimed
/// form, not an engine fault.
struct ResidueReport {
    std::string functional;   // torsion | one-form | boundary | sanity
    std::string derived;      // canonical text, pi power explicit
    std::string claimed;      // printed closed form under the recorded reading
    std::string verdict;      // "Match" | "Mismatch"
    std::string delta;        // derived - claimed (canonical text), empty on Match
    // other printed variants of the same constant, echoed verbatim for comparison
    std::vector<std::pair<std::string, std::string>> echoes;
    // assumptions taken and identities verified en route
    std::vector<std::string> notes;
    // numeric cross-checks: (parameter point, agreed?)
    std::vector<std::pair<std::string, bool>> cross_checks;

    bool matched() const { return verdict == "Match"; }
};

}  // namespace nmres
